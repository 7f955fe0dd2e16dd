#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ltlrl/ltl/formula.hpp"

namespace ltlrl::ltl {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  /// Byte offset into the input where the error was detected.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Grammar, loosest binding first:
//
//   formula := implication
//   implication := disjunction ("->" implication)?
//   disjunction := conjunction ("|" conjunction)*
//   conjunction := until ("&" until)*
//   until := unary ("U" until)?
//   unary := ("!" | "X" | "F" | "G") unary | primary
//   primary := "true" | "false" | atom | "(" formula ")"
//   atom := "[" key ("=" | "~") value "]"
//
// Sugar is removed while parsing: false = !true, F f = true U f,
// G f = !(true U !f), a | b = !(!a & !b), a -> b = !(a & !b).
Formula parse(std::string_view text);

}  // namespace ltlrl::ltl
