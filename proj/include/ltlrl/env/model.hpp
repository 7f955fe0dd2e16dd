#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ltlrl::env {

/// Raised for malformed or inconsistent application models.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Screen {
  int width = 0;
  int height = 0;
};

struct Bounds {
  int x1 = 0, y1 = 0, x2 = 0, y2 = 0;

  int center_x() const noexcept { return (x1 + x2) / 2; }
  int center_y() const noexcept { return (y1 + y2) / 2; }
  bool contains(int x, int y) const noexcept { return x >= x1 && x <= x2 && y >= y1 && y <= y2; }
};

struct Widget {
  std::string object_id;  // hierarchical path, e.g. "0:0:1"
  std::string text;
  Bounds bounds;
  std::optional<bool> checked;
};

/// A concrete GUI action as offered in one state.
struct GuiAction {
  std::string type;                 // reinitialize, click, text, back, ...
  std::vector<std::string> params;  // coordinates, input text, activity name
  std::string target;               // object id of the widget acted on, or empty
  std::string detail;               // text of the target widget, or empty

  /// Identity of the action within its state: type, params and target.
  std::string signature() const;
  /// Human-readable form, e.g. "click 239 669".
  std::string display() const;

  bool operator==(const GuiAction& other) const {
    return type == other.type && params == other.params && target == other.target;
  }
};

struct Transition {
  std::size_t target;  // index into AppModel::states()
  double weight;
};

/// An action together with its successor distribution.
struct DeclaredAction {
  GuiAction action;
  std::vector<Transition> outcomes;
  // Declaration form, kept so the model can be written back unchanged.
  bool widget_bound = false;                // declared with "on"
  std::vector<std::string> extra_params;    // params listed after the coordinates
};

struct GuiState {
  std::string id;
  std::map<std::string, std::string> attributes;
  std::vector<Widget> widgets;
  std::vector<DeclaredAction> actions;  // sorted by signature

  /// The pre-launch state has no id, attributes or widgets.
  bool is_dont_care() const noexcept { return id.empty(); }
  const std::string* attribute(const std::string& key) const;
  const Widget* widget(const std::string& object_id) const;
};

/// A simulated application: GUI states, launchable activities, and weighted
/// transitions. Construction validates every invariant and throws ModelError.
class AppModel {
 public:
  AppModel(Screen screen, std::vector<GuiState> states,
           std::map<std::string, std::string> initial);

  const Screen& screen() const noexcept { return screen_; }
  const std::vector<GuiState>& states() const noexcept { return states_; }
  const GuiState& state(std::size_t index) const { return states_.at(index); }
  std::optional<std::size_t> find_state(const std::string& id) const;
  /// Launchable activity -> initial state id.
  const std::map<std::string, std::string>& initial() const noexcept { return initial_; }

  /// The implicit don't-care state; only reinitialize actions are enabled.
  const GuiState& dont_care() const noexcept { return dont_care_; }

  /// Enabled actions of `s` in signature order.
  const std::vector<GuiAction>& enabled_actions(const GuiState& s) const;

 private:
  void validate() const;

  Screen screen_;
  std::vector<GuiState> states_;
  std::map<std::string, std::string> initial_;
  std::map<std::string, std::size_t> index_;
  GuiState dont_care_;
  std::vector<std::vector<GuiAction>> enabled_;  // per state, then dont-care last
};

}  // namespace ltlrl::env
