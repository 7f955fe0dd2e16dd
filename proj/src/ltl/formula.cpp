#include "ltlrl/ltl/formula.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace ltlrl::ltl {

struct Formula::Node {
  Op op;
  std::size_t hash = 0;
  std::size_t operators = 0;
  std::optional<AtomicProposition> atom;
  Formula lhs{nullptr};
  Formula rhs{nullptr};
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) noexcept {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

enum Precedence { kAnd = 1, kUntil = 2, kUnary = 3, kPrimary = 4 };

int precedence(const Formula& f) {
  switch (f.op()) {
    case Op::True:
    case Op::Atom:
      return kPrimary;
    case Op::Not:
    case Op::Next:
      return kUnary;
    case Op::Until:
      return kUntil;
    case Op::And:
      return kAnd;
  }
  return kPrimary;
}

void render(const Formula& f, int min_prec, std::string& out) {
  const bool parens = precedence(f) < min_prec;
  if (parens) out += '(';
  switch (f.op()) {
    case Op::True:
      out += "true";
      break;
    case Op::Atom:
      out += f.proposition().to_string();
      break;
    case Op::Not:
      out += '!';
      render(f.lhs(), kUnary, out);
      break;
    case Op::Next:
      out += "X ";
      render(f.lhs(), kUnary, out);
      break;
    case Op::And:
      render(f.lhs(), kAnd, out);
      out += " & ";
      render(f.rhs(), kUntil, out);
      break;
    case Op::Until:
      // right-associative
      render(f.lhs(), kUnary, out);
      out += " U ";
      render(f.rhs(), kUntil, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

Formula Formula::top() {
  static const Formula t = [] {
    auto n = std::make_shared<Node>();
    n->op = Op::True;
    n->hash = 0x51ed27;
    return Formula(std::move(n));
  }();
  return t;
}

Formula Formula::bottom() {
  static const Formula f = negation(top());
  return f;
}

Formula Formula::atom(AtomicProposition p) {
  auto n = std::make_shared<Node>();
  n->op = Op::Atom;
  n->hash = mix(std::hash<std::string>{}(p.key()),
                mix(std::hash<std::string>{}(p.value()), static_cast<std::size_t>(p.match()) + 7));
  n->atom = std::move(p);
  return Formula(std::move(n));
}

Formula Formula::negation(Formula f) {
  auto n = std::make_shared<Node>();
  n->op = Op::Not;
  n->hash = mix(0x2a, f.hash());
  n->operators = 1 + f.operator_count();
  n->lhs = std::move(f);
  return Formula(std::move(n));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->op = Op::And;
  n->hash = mix(mix(0x3b, lhs.hash()), rhs.hash());
  n->operators = 1 + lhs.operator_count() + rhs.operator_count();
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return Formula(std::move(n));
}

Formula Formula::next(Formula f) {
  auto n = std::make_shared<Node>();
  n->op = Op::Next;
  n->hash = mix(0x4c, f.hash());
  n->operators = 1 + f.operator_count();
  n->lhs = std::move(f);
  return Formula(std::move(n));
}

Formula Formula::until(Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->op = Op::Until;
  n->hash = mix(mix(0x5d, lhs.hash()), rhs.hash());
  n->operators = 1 + lhs.operator_count() + rhs.operator_count();
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return Formula(std::move(n));
}

Op Formula::op() const noexcept { return node_->op; }

const AtomicProposition& Formula::proposition() const {
  if (node_->op != Op::Atom) throw std::logic_error("proposition() on a non-atom formula");
  return *node_->atom;
}

const Formula& Formula::lhs() const {
  if (node_->op == Op::True || node_->op == Op::Atom)
    throw std::logic_error("lhs() on a leaf formula");
  return node_->lhs;
}

const Formula& Formula::rhs() const {
  if (node_->op != Op::And && node_->op != Op::Until)
    throw std::logic_error("rhs() on a non-binary formula");
  return node_->rhs;
}

bool Formula::is_false() const noexcept {
  return node_->op == Op::Not && node_->lhs.is_true();
}

std::size_t Formula::hash() const noexcept { return node_->hash; }

std::size_t Formula::operator_count() const noexcept { return node_->operators; }

std::string Formula::to_string() const {
  std::string out;
  render(*this, 0, out);
  return out;
}

bool operator==(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.op != y.op || x.hash != y.hash || x.operators != y.operators) return false;
  switch (x.op) {
    case Op::True:
      return true;
    case Op::Atom:
      return *x.atom == *y.atom;
    case Op::Not:
    case Op::Next:
      return x.lhs == y.lhs;
    case Op::And:
    case Op::Until:
      return x.lhs == y.lhs && x.rhs == y.rhs;
  }
  return false;
}

Verdict Verdict::of(Formula residual) {
  if (residual.is_true()) return {Kind::True, std::move(residual)};
  if (residual.is_false()) return {Kind::False, std::move(residual)};
  return {Kind::Undetermined, std::move(residual)};
}

std::string Verdict::to_string() const {
  switch (kind_) {
    case Kind::True:
      return "True";
    case Kind::False:
      return "False";
    case Kind::Undetermined:
      return "Undetermined(" + formula_.to_string() + ")";
  }
  return {};
}

}  // namespace ltlrl::ltl
