#include "ltlrl/env/model_io.hpp"

#include <fstream>
#include <sstream>

namespace ltlrl::env {

using nlohmann::json;

namespace {

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key))
    throw ModelError(where + ": missing '" + key + "'");
  return obj.at(key);
}

std::string as_string(const json& v, const std::string& where) {
  if (!v.is_string()) throw ModelError(where + ": expected a string");
  return v.get<std::string>();
}

Bounds parse_bounds(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 4)
    throw ModelError(where + ": bounds must be [x1, y1, x2, y2]");
  for (const auto& c : v)
    if (!c.is_number_integer()) throw ModelError(where + ": bounds must be integers");
  return {v[0].get<int>(), v[1].get<int>(), v[2].get<int>(), v[3].get<int>()};
}

Widget parse_widget(const json& v, const std::string& where) {
  Widget w;
  w.object_id = as_string(require(v, "objectID", where), where + ".objectID");
  const std::string here = where + " '" + w.object_id + "'";
  if (v.contains("text")) w.text = as_string(v.at("text"), here + ".text");
  w.bounds = parse_bounds(require(v, "bounds", here), here);
  if (v.contains("checked")) {
    if (!v.at("checked").is_boolean()) throw ModelError(here + ".checked must be a boolean");
    w.checked = v.at("checked").get<bool>();
  }
  return w;
}

const Widget* hit(const std::vector<Widget>& widgets, int x, int y) {
  const Widget* best = nullptr;
  long best_area = 0;
  for (const auto& w : widgets) {
    if (!w.bounds.contains(x, y)) continue;
    const long area = static_cast<long>(w.bounds.x2 - w.bounds.x1) * (w.bounds.y2 - w.bounds.y1);
    if (best == nullptr || area < best_area) {
      best = &w;
      best_area = area;
    }
  }
  return best;
}

DeclaredAction parse_action(const json& v, const GuiState& state,
                            const std::map<std::string, std::size_t>& index,
                            const std::string& where) {
  DeclaredAction d;
  auto& a = d.action;
  a.type = as_string(require(v, "type", where), where + ".type");
  const std::string here = where + " '" + a.type + "'";

  std::vector<std::string> params;
  if (v.contains("params")) {
    const auto& p = v.at("params");
    if (!p.is_array()) throw ModelError(here + ": params must be an array");
    for (const auto& item : p) {
      if (item.is_string())
        params.push_back(item.get<std::string>());
      else if (item.is_number_integer())
        params.push_back(std::to_string(item.get<long long>()));
      else
        throw ModelError(here + ": params must be strings or integers");
    }
  }

  if (v.contains("on")) {
    const std::string on = as_string(v.at("on"), here + ".on");
    const Widget* w = state.widget(on);
    if (w == nullptr) throw ModelError(here + ": unknown widget '" + on + "'");
    d.widget_bound = true;
    d.extra_params = params;
    a.params = {std::to_string(w->bounds.center_x()), std::to_string(w->bounds.center_y())};
    a.params.insert(a.params.end(), params.begin(), params.end());
    a.target = w->object_id;
    a.detail = w->text;
  } else {
    a.params = std::move(params);
    if (a.type == "click" && a.params.size() == 2) {
      try {
        if (const Widget* w = hit(state.widgets, std::stoi(a.params[0]), std::stoi(a.params[1]))) {
          a.target = w->object_id;
          a.detail = w->text;
        }
      } catch (const std::exception&) {
        // non-numeric coordinates are reported by model validation
      }
    }
  }

  const auto& transitions = require(v, "transitions", here);
  if (!transitions.is_array()) throw ModelError(here + ": transitions must be an array");
  for (const auto& t : transitions) {
    const std::string to = as_string(require(t, "to", here), here + ".to");
    auto it = index.find(to);
    if (it == index.end()) throw ModelError(here + ": dangling transition target '" + to + "'");
    const auto& wt = t.contains("weight") ? t.at("weight") : json(1.0);
    if (!wt.is_number()) throw ModelError(here + ": weight must be a number");
    d.outcomes.push_back({it->second, wt.get<double>()});
  }
  return d;
}

}  // namespace

AppModel model_from_json(const json& doc) {
  if (!doc.is_object()) throw ModelError("model: top level must be an object");

  Screen screen{480, 800};
  if (doc.contains("screen")) {
    const auto& s = doc.at("screen");
    if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer() || !s[1].is_number_integer())
      throw ModelError("model: screen must be [width, height]");
    screen = {s[0].get<int>(), s[1].get<int>()};
  }

  const auto& states_json = require(doc, "states", "model");
  if (!states_json.is_array()) throw ModelError("model: states must be an array");
  if (states_json.empty()) throw ModelError("model has no states");

  std::map<std::string, std::size_t> index;
  std::vector<GuiState> states;
  for (std::size_t i = 0; i < states_json.size(); ++i) {
    const std::string where = "states[" + std::to_string(i) + "]";
    GuiState s;
    s.id = as_string(require(states_json[i], "id", where), where + ".id");
    if (!index.emplace(s.id, i).second) throw ModelError("duplicate state id '" + s.id + "'");
    states.push_back(std::move(s));
  }

  for (std::size_t i = 0; i < states_json.size(); ++i) {
    const auto& sj = states_json[i];
    auto& s = states[i];
    const std::string where = "state '" + s.id + "'";
    if (sj.contains("attributes")) {
      const auto& attrs = sj.at("attributes");
      if (!attrs.is_object()) throw ModelError(where + ": attributes must be an object");
      for (const auto& [k, v] : attrs.items()) s.attributes[k] = as_string(v, where + "." + k);
    }
    if (sj.contains("widgets")) {
      const auto& ws = sj.at("widgets");
      if (!ws.is_array()) throw ModelError(where + ": widgets must be an array");
      for (const auto& w : ws) s.widgets.push_back(parse_widget(w, where + " widget"));
    }
    if (sj.contains("actions")) {
      const auto& as = sj.at("actions");
      if (!as.is_array()) throw ModelError(where + ": actions must be an array");
      for (const auto& a : as) s.actions.push_back(parse_action(a, s, index, where + " action"));
    }
  }

  std::map<std::string, std::string> initial;
  const auto& init = require(doc, "initial", "model");
  if (!init.is_object()) throw ModelError("model: initial must map activity -> state id");
  for (const auto& [activity, target] : init.items())
    initial[activity] = as_string(target, "initial." + activity);

  return AppModel(screen, std::move(states), std::move(initial));
}

json model_to_json(const AppModel& model) {
  json doc;
  doc["screen"] = {model.screen().width, model.screen().height};
  doc["initial"] = json::object();
  for (const auto& [activity, target] : model.initial()) doc["initial"][activity] = target;
  doc["states"] = json::array();
  for (const auto& s : model.states()) {
    json sj;
    sj["id"] = s.id;
    sj["attributes"] = s.attributes;
    sj["widgets"] = json::array();
    for (const auto& w : s.widgets) {
      json wj{{"objectID", w.object_id},
              {"text", w.text},
              {"bounds", {w.bounds.x1, w.bounds.y1, w.bounds.x2, w.bounds.y2}}};
      if (w.checked) wj["checked"] = *w.checked;
      sj["widgets"].push_back(std::move(wj));
    }
    sj["actions"] = json::array();
    for (const auto& d : s.actions) {
      json aj{{"type", d.action.type}};
      if (d.widget_bound) {
        aj["on"] = d.action.target;
        if (!d.extra_params.empty()) aj["params"] = d.extra_params;
      } else if (!d.action.params.empty()) {
        aj["params"] = d.action.params;
      }
      aj["transitions"] = json::array();
      for (const auto& t : d.outcomes)
        aj["transitions"].push_back({{"to", model.state(t.target).id}, {"weight", t.weight}});
      sj["actions"].push_back(std::move(aj));
    }
    doc["states"].push_back(std::move(sj));
  }
  return doc;
}

AppModel parse_model(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ModelError("model: malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  try {
    return model_from_json(doc);
  } catch (const json::exception& e) {
    throw ModelError(std::string("model: ") + e.what());
  }
}

AppModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_model(buf.str());
  } catch (const ModelError& e) {
    throw ModelError(path.string() + ": " + e.what());
  }
}

void save_model(const AppModel& model, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ModelError("cannot write model file '" + path.string() + "'");
  out << model_to_json(model).dump(2) << '\n';
}

}  // namespace ltlrl::env
