#include "ltlrl/ltl/parser.hpp"

#include <cctype>

namespace ltlrl::ltl {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error("formula:" + std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse_all() {
    skip_space();
    if (at_end()) throw ParseError("empty formula", pos_);
    Formula f = implication();
    skip_space();
    if (!at_end()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return f;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view symbol) {
    skip_space();
    if (text_.substr(pos_).starts_with(symbol)) {
      pos_ += symbol.size();
      return true;
    }
    return false;
  }

  /// Keywords must not run into a following identifier character.
  bool accept_keyword(std::string_view word) {
    skip_space();
    if (!text_.substr(pos_).starts_with(word)) return false;
    const std::size_t end = pos_ + word.size();
    if (end < text_.size() && is_word_char(text_[end])) return false;
    pos_ = end;
    return true;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (accept("->")) {
      Formula rhs = implication();
      return Formula::negation(Formula::conjunction(lhs, Formula::negation(rhs)));
    }
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (accept("|")) {
      Formula rhs = conjunction();
      f = Formula::negation(
          Formula::conjunction(Formula::negation(f), Formula::negation(rhs)));
    }
    return f;
  }

  Formula conjunction() {
    Formula f = until();
    while (accept("&")) f = Formula::conjunction(f, until());
    return f;
  }

  Formula until() {
    Formula lhs = unary();
    if (accept_keyword("U")) return Formula::until(lhs, until());
    return lhs;
  }

  Formula unary() {
    skip_space();
    if (accept("!")) return Formula::negation(unary());
    if (accept_keyword("X")) return Formula::next(unary());
    if (accept_keyword("F")) return Formula::until(Formula::top(), unary());
    if (accept_keyword("G"))
      return Formula::negation(Formula::until(Formula::top(), Formula::negation(unary())));
    return primary();
  }

  Formula primary() {
    skip_space();
    if (at_end()) throw ParseError("unexpected end of formula", pos_);
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Formula f = implication();
      if (!accept(")")) throw ParseError("expected ')'", pos_);
      return f;
    }
    if (c == '[') return atom();
    if (is_word_char(c)) {
      while (!at_end() && is_word_char(text_[pos_])) ++pos_;
      const std::string_view word = text_.substr(start, pos_ - start);
      if (word == "true") return Formula::top();
      if (word == "false") return Formula::bottom();
      if (word == "U") throw ParseError("'U' is missing its left operand", start);
      throw ParseError("unknown operator '" + std::string(word) + "'", start);
    }
    throw ParseError("unexpected '" + std::string(1, c) + "'", start);
  }

  Formula atom() {
    const std::size_t open = pos_;
    ++pos_;  // '['
    const std::size_t close = text_.find(']', pos_);
    if (close == std::string_view::npos) throw ParseError("unterminated '['", open);
    const std::string_view body = text_.substr(pos_, close - pos_);
    const std::size_t sep = body.find_first_of("=~");
    if (sep == std::string_view::npos)
      throw ParseError("predicate needs '=' or '~'", open);
    const std::string_view key = trim(body.substr(0, sep));
    const std::string_view value = trim(body.substr(sep + 1));
    if (key.empty()) throw ParseError("empty predicate key", open);
    if (value.empty()) throw ParseError("empty predicate value", open);
    for (char k : key)
      if (!is_word_char(k)) throw ParseError("invalid predicate key '" + std::string(key) + "'", open);
    pos_ = close + 1;
    return Formula::atom(AtomicProposition(std::string(key),
                                           body[sep] == '=' ? Match::Equals : Match::Contains,
                                           std::string(value)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace ltlrl::ltl
