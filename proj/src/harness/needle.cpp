#include "ltlrl/harness/needle.hpp"

#include <stdexcept>
#include <vector>

namespace ltlrl::harness {

using nlohmann::json;

namespace {

const char* const kPackage = "org.example.needle";

std::string page_id(int i, int depth) {
  if (i == 0) return "home";
  if (i == depth) return "goal";
  return "page" + std::string(1, static_cast<char>('a' + i - 1));
}

std::string page_activity(int i, int depth) {
  if (i == 0) return "HomeActivity";
  if (i == depth) return "GoalActivity";
  return "Page" + std::string(1, static_cast<char>('A' + i - 1)) + "Activity";
}

json to(const std::string& id) { return json::array({{{"to", id}, {"weight", 1}}}); }

json widget(const std::string& id, const std::string& text, int row) {
  const int y = 20 + 90 * row;
  return {{"objectID", id}, {"text", text}, {"bounds", {40, y, 440, y + 70}}};
}

json attributes(const std::string& activity) {
  return {{"activity", activity}, {"package", kPackage}};
}

}  // namespace

std::string needle_label(int i) {
  static const std::vector<std::string> names{"Alpha", "Beta",  "Gamma", "Delta",
                                              "Eps",   "Zeta",  "Theta", "Kappa"};
  if (i < 0 || i >= static_cast<int>(names.size()))
    throw std::out_of_range("needle depth too large");
  return names[static_cast<std::size_t>(i)];
}

json needle_model(const NeedleShape& shape) {
  if (shape.depth < 1 || shape.decoys < 0 || shape.decoys + 2 > 8)
    throw std::invalid_argument("needle shape out of range");
  const int depth = shape.depth;

  json states = json::array();
  for (int i = 0; i <= depth; ++i) {
    const std::string id = page_id(i, depth);
    json widgets = json::array();
    json actions = json::array();
    if (i < depth) {
      // the correct entry sits at a different row on every page
      const int correct_row = (2 * i + 1) % (shape.decoys + 1);
      int decoy = 0;
      for (int row = 0; row <= shape.decoys; ++row) {
        const std::string oid = "0:" + std::to_string(i) + ":" + std::to_string(row);
        if (row == correct_row) {
          widgets.push_back(widget(oid, needle_label(i), row));
          actions.push_back({{"type", "click"}, {"on", oid}, {"transitions", to(page_id(i + 1, depth))}});
        } else {
          widgets.push_back(widget(oid, "Item " + std::to_string(++decoy), row));
          actions.push_back({{"type", "click"}, {"on", oid}, {"transitions", to("decoy")}});
        }
      }
      const std::string field = "0:" + std::to_string(i) + ":field";
      widgets.push_back(widget(field, "Search", shape.decoys + 1));
      actions.push_back(
          {{"type", "text"}, {"on", field}, {"params", {"hello"}}, {"transitions", to(id)}});
    }
    actions.push_back({{"type", "back"}, {"transitions", to(i == 0 ? "outside" : page_id(i - 1, depth))}});
    actions.push_back({{"type", "pauseresume"}, {"transitions", to(id)}});
    actions.push_back({{"type", "idle"}, {"transitions", to(id)}});
    states.push_back({{"id", id},
                      {"attributes", attributes(page_activity(i, depth))},
                      {"widgets", widgets},
                      {"actions", actions}});
  }
  states.push_back({{"id", "decoy"},
                    {"attributes", attributes("DecoyActivity")},
                    {"widgets", json::array()},
                    {"actions",
                     {{{"type", "back"}, {"transitions", to("home")}},
                      {{"type", "idle"}, {"transitions", to("decoy")}}}}});
  states.push_back({{"id", "outside"},
                    {"attributes", {{"activity", "LauncherActivity"}, {"package", "launcher"}}},
                    {"widgets", json::array()},
                    {"actions", {{{"type", "idle"}, {"transitions", to("outside")}}}}});

  return {{"screen", {480, 800}}, {"initial", {{"HomeActivity", "home"}}}, {"states", states}};
}

std::string needle_formula(char level, const NeedleShape& shape) {
  if (level != 'a' && level != 'b' && level != 'c')
    throw std::invalid_argument("detail level must be a, b or c");
  std::string f;
  for (int i = shape.depth; i >= 1; --i) {
    std::string step;
    if (level != 'a') step += "[actionType=click] & ";
    if (level == 'c') step += "[actionDetail~" + needle_label(i - 1) + "] & ";
    step += "[activity~" + page_activity(i, shape.depth) + "]";
    f = f.empty() ? "X (" + step + ")" : "X (" + step + " & " + f + ")";
  }
  return f;
}

}  // namespace ltlrl::harness
