#include "ltlrl/env/labeling.hpp"

namespace ltlrl::env {

namespace {

bool state_holds(const GuiState& s, const ltl::AtomicProposition& p) {
  const auto& key = p.key();
  if (key == "text") {
    for (const auto& w : s.widgets)
      if (p.holds_on(w.text)) return true;
    return false;
  }
  if (key == "objectID") {
    for (const auto& w : s.widgets)
      if (p.holds_on(w.object_id)) return true;
    return false;
  }
  if (key == "checked") {
    if (const auto* v = s.attribute(key)) return p.holds_on(*v);
    for (const auto& w : s.widgets)
      if (w.checked) return p.holds_on(*w.checked ? "true" : "false");
    return false;
  }
  const auto* v = s.attribute(key);
  return v != nullptr && p.holds_on(*v);
}

bool action_holds(const GuiAction& a, const ltl::AtomicProposition& p) {
  const auto& key = p.key();
  if (key == "actionType") return p.holds_on(a.type);
  if (key == "actionDetail") return p.holds_on(a.detail);
  if (key == "actionObjectID") return p.holds_on(a.target);
  return false;
}

}  // namespace

ltl::Labeling state_labeling(const GuiState& state,
                             std::span<const ltl::AtomicProposition> alphabet) {
  ltl::Labeling out;
  if (state.is_dont_care()) return out;
  for (const auto& p : alphabet)
    if (p.scope() == ltl::Scope::State && state_holds(state, p)) out.insert(p);
  return out;
}

ltl::Labeling action_labeling(const GuiAction& action,
                              std::span<const ltl::AtomicProposition> alphabet) {
  ltl::Labeling out;
  for (const auto& p : alphabet)
    if (p.scope() == ltl::Scope::Action && action_holds(action, p)) out.insert(p);
  return out;
}

}  // namespace ltlrl::env
