#include "ltlrl/env/model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <utility>

namespace ltlrl::env {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    out += ' ';
    out += p;
  }
  return out;
}

bool is_integer(const std::string& s) {
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  return !s.empty() && ec == std::errc() && ptr == end;
}

}  // namespace

std::string GuiAction::signature() const {
  std::string out = type + join(params);
  if (!target.empty()) out += " @" + target;
  return out;
}

std::string GuiAction::display() const { return type + join(params); }

const std::string* GuiState::attribute(const std::string& key) const {
  auto it = attributes.find(key);
  return it == attributes.end() ? nullptr : &it->second;
}

const Widget* GuiState::widget(const std::string& object_id) const {
  for (const auto& w : widgets)
    if (w.object_id == object_id) return &w;
  return nullptr;
}

AppModel::AppModel(Screen screen, std::vector<GuiState> states,
                   std::map<std::string, std::string> initial)
    : screen_(screen), states_(std::move(states)), initial_(std::move(initial)) {
  if (states_.empty()) throw ModelError("model has no states");
  for (std::size_t i = 0; i < states_.size(); ++i) {
    const auto& id = states_[i].id;
    if (id.empty()) throw ModelError("state #" + std::to_string(i) + " has an empty id");
    if (!index_.emplace(id, i).second) throw ModelError("duplicate state id '" + id + "'");
  }
  for (auto& s : states_) {
    std::sort(s.actions.begin(), s.actions.end(), [](const auto& a, const auto& b) {
      return a.action.signature() < b.action.signature();
    });
  }
  for (const auto& [activity, target] : initial_) {
    auto it = index_.find(target);
    if (it == index_.end())
      throw ModelError("launchable activity '" + activity + "' targets unknown state '" +
                       target + "'");
    DeclaredAction reinit;
    reinit.action.type = "reinitialize";
    reinit.action.params = {activity};
    reinit.outcomes = {{it->second, 1.0}};
    dont_care_.actions.push_back(std::move(reinit));
  }
  validate();

  enabled_.reserve(states_.size() + 1);
  for (const auto& s : states_) {
    std::vector<GuiAction> acts;
    for (const auto& d : s.actions) acts.push_back(d.action);
    enabled_.push_back(std::move(acts));
  }
  std::vector<GuiAction> reinits;
  for (const auto& d : dont_care_.actions) reinits.push_back(d.action);
  enabled_.push_back(std::move(reinits));
}

std::optional<std::size_t> AppModel::find_state(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::vector<GuiAction>& AppModel::enabled_actions(const GuiState& s) const {
  if (&s == &dont_care_) return enabled_.back();
  if (states_.empty() || &s < states_.data() || &s >= states_.data() + states_.size())
    throw std::invalid_argument("state '" + s.id + "' does not belong to this model");
  return enabled_[static_cast<std::size_t>(&s - states_.data())];
}

void AppModel::validate() const {
  if (screen_.width <= 0 || screen_.height <= 0)
    throw ModelError("screen resolution must be positive");
  if (initial_.empty()) throw ModelError("model declares no launchable activity");

  for (const auto& s : states_) {
    const std::string where = "state '" + s.id + "'";
    for (const char* key : {"activity", "package"})
      if (s.attribute(key) == nullptr)
        throw ModelError(where + " lacks the '" + std::string(key) + "' attribute");

    std::set<std::string> widget_ids;
    for (const auto& w : s.widgets) {
      if (w.object_id.empty()) throw ModelError(where + " has a widget without objectID");
      if (!widget_ids.insert(w.object_id).second)
        throw ModelError(where + " has duplicate widget '" + w.object_id + "'");
      const auto& b = w.bounds;
      if (b.x1 >= b.x2 || b.y1 >= b.y2)
        throw ModelError(where + ": widget '" + w.object_id + "' has degenerate bounds");
      if (b.x1 < 0 || b.y1 < 0 || b.x2 > screen_.width || b.y2 > screen_.height)
        throw ModelError(where + ": widget '" + w.object_id + "' lies outside the screen");
    }

    if (s.actions.empty()) throw ModelError(where + " has no enabled action");
    std::set<std::string> signatures;
    for (const auto& d : s.actions) {
      const auto& a = d.action;
      const std::string what = where + ", action '" + a.signature() + "'";
      if (a.type.empty()) throw ModelError(where + " has an action without type");
      if (a.type == "reinitialize")
        throw ModelError(what + ": reinitialize is only enabled in the don't-care state");
      if (a.type == "click" &&
          (a.params.size() != 2 || !is_integer(a.params[0]) || !is_integer(a.params[1])))
        throw ModelError(what + ": click needs two integer coordinates");
      if (!a.target.empty() && s.widget(a.target) == nullptr)
        throw ModelError(what + ": unknown widget '" + a.target + "'");
      if (!signatures.insert(a.signature()).second)
        throw ModelError(what + " is declared twice");
      if (d.outcomes.empty()) throw ModelError(what + " has no transitions");
      double total = 0.0;
      for (const auto& t : d.outcomes) {
        if (t.target >= states_.size()) throw ModelError(what + ": dangling transition target");
        if (!(t.weight > 0.0)) throw ModelError(what + ": transition weights must be positive");
        total += t.weight;
      }
      if (std::abs(total - 1.0) > 1e-9)
        throw ModelError(what + ": transition weights sum to " + std::to_string(total));
    }
  }
}

}  // namespace ltlrl::env
