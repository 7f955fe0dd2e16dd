#pragma once

#include <filesystem>
#include <string_view>

#include "json.hpp"
#include "ltlrl/env/model.hpp"

namespace ltlrl::env {

// Model file layout:
//
//   {
//     "screen": [480, 800],
//     "initial": {"MainActivity": "main"},
//     "states": [
//       {"id": "main",
//        "attributes": {"activity": "...", "package": "..."},
//        "widgets": [{"objectID": "0:1", "text": "About", "bounds": [x1, y1, x2, y2],
//                     "checked": false}],
//        "actions": [{"type": "click", "on": "0:1", "transitions": [{"to": "about", "weight": 1}]},
//                    {"type": "back", "transitions": [{"to": "outside", "weight": 1}]}]}
//     ]
//   }
//
// An action with "on" is bound to that widget: its params become the widget's
// center coordinates followed by any listed "params", and its detail is the
// widget text. A click with explicit coordinates is bound to the smallest
// widget containing the point, if any.

AppModel model_from_json(const nlohmann::json& doc);
nlohmann::json model_to_json(const AppModel& model);

/// Parses model text; errors carry the byte offset of malformed JSON.
AppModel parse_model(std::string_view text);
AppModel load_model(const std::filesystem::path& path);
void save_model(const AppModel& model, const std::filesystem::path& path);

}  // namespace ltlrl::env
