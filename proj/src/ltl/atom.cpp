#include "ltlrl/ltl/atom.hpp"

#include <stdexcept>
#include <utility>

namespace ltlrl::ltl {

AtomicProposition::AtomicProposition(std::string key, Match match, std::string value)
    : key_(std::move(key)), match_(match), value_(std::move(value)) {
  if (key_.empty()) throw std::invalid_argument("atomic proposition with empty key");
  if (value_.empty())
    throw std::invalid_argument("atomic proposition '" + key_ + "' has an empty value");
}

Scope AtomicProposition::scope() const noexcept {
  return key_.starts_with("action") ? Scope::Action : Scope::State;
}

bool AtomicProposition::holds_on(std::string_view observed) const noexcept {
  if (match_ == Match::Equals) return observed == value_;
  return observed.find(value_) != std::string_view::npos;
}

std::string AtomicProposition::to_string() const {
  std::string out;
  out.reserve(key_.size() + value_.size() + 3);
  out += '[';
  out += key_;
  out += match_ == Match::Equals ? '=' : '~';
  out += value_;
  out += ']';
  return out;
}

void Labeling::merge(const Labeling& other) { atoms_.insert(other.begin(), other.end()); }

Labeling Labeling::state_part() const {
  Labeling out;
  for (const auto& a : atoms_)
    if (a.scope() == Scope::State) out.insert(a);
  return out;
}

Labeling Labeling::action_part() const {
  Labeling out;
  for (const auto& a : atoms_)
    if (a.scope() == Scope::Action) out.insert(a);
  return out;
}

std::string Labeling::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& a : atoms_) {
    if (!first) out += ", ";
    out += a.to_string();
    first = false;
  }
  out += '}';
  return out;
}

std::vector<std::string> Labeling::to_strings() const {
  std::vector<std::string> out;
  out.reserve(atoms_.size());
  for (const auto& a : atoms_) out.push_back(a.to_string());
  return out;
}

}  // namespace ltlrl::ltl
