#include "ltlrl/ltl/progression.hpp"

#include <set>

namespace ltlrl::ltl {

Formula expand(const Formula& f) {
  switch (f.op()) {
    case Op::Not:
      return Formula::negation(expand(f.lhs()));
    case Op::And:
      return Formula::conjunction(expand(f.lhs()), expand(f.rhs()));
    case Op::Until: {
      // !(!b & !(a & X(a U b)))
      Formula guarded = Formula::conjunction(expand(f.lhs()), Formula::next(f));
      return Formula::negation(Formula::conjunction(Formula::negation(expand(f.rhs())),
                                                    Formula::negation(std::move(guarded))));
    }
    default:
      return f;
  }
}

Formula restrict(const Formula& f, const Labeling& labels, RestrictScope scope) {
  switch (f.op()) {
    case Op::Atom: {
      const auto& p = f.proposition();
      if (scope == RestrictScope::ActionOnly && p.scope() != Scope::Action) return f;
      return labels.contains(p) ? Formula::top() : Formula::bottom();
    }
    case Op::Not:
      return Formula::negation(restrict(f.lhs(), labels, scope));
    case Op::And:
      return Formula::conjunction(restrict(f.lhs(), labels, scope),
                                  restrict(f.rhs(), labels, scope));
    default:
      return f;
  }
}

Formula advance(const Formula& f) {
  switch (f.op()) {
    case Op::Not:
      return Formula::negation(advance(f.lhs()));
    case Op::And:
      return Formula::conjunction(advance(f.lhs()), advance(f.rhs()));
    case Op::Next:
      return f.lhs();
    default:
      return f;
  }
}

// Children come back simplified, so one bottom-up pass already reaches the
// fixpoint: every rewrite at a node returns a simplified child or a fresh
// node none of the rules match.
Formula simplify(const Formula& f) {
  switch (f.op()) {
    case Op::Not: {
      Formula inner = simplify(f.lhs());
      if (inner.op() == Op::Not) return inner.lhs();
      return Formula::negation(std::move(inner));
    }
    case Op::And: {
      Formula l = simplify(f.lhs());
      Formula r = simplify(f.rhs());
      if (r.is_true()) return l;
      if (l.is_true()) return r;
      if (r.is_false() || l.is_false()) return Formula::bottom();
      if (l == r) return l;
      return Formula::conjunction(std::move(l), std::move(r));
    }
    case Op::Next:
      return Formula::next(simplify(f.lhs()));
    case Op::Until:
      return Formula::until(simplify(f.lhs()), simplify(f.rhs()));
    default:
      return f;
  }
}

Verdict projection(const Formula& f, const Labeling& labels) {
  return Verdict::of(simplify(advance(restrict(expand(f), labels, RestrictScope::All))));
}

Formula predict(const Formula& f, const Labeling& action_labels) {
  return simplify(advance(restrict(expand(f), action_labels, RestrictScope::ActionOnly)));
}

std::size_t count_atoms(const Formula& f) {
  switch (f.op()) {
    case Op::True:
      return 0;
    case Op::Atom:
      return 1;
    case Op::Not:
    case Op::Next:
      return count_atoms(f.lhs());
    case Op::And:
    case Op::Until:
      return count_atoms(f.lhs()) + count_atoms(f.rhs());
  }
  return 0;
}

namespace {
void collect(const Formula& f, std::set<AtomicProposition>& out) {
  switch (f.op()) {
    case Op::True:
      return;
    case Op::Atom:
      out.insert(f.proposition());
      return;
    case Op::Not:
    case Op::Next:
      collect(f.lhs(), out);
      return;
    case Op::And:
    case Op::Until:
      collect(f.lhs(), out);
      collect(f.rhs(), out);
      return;
  }
}
}  // namespace

std::vector<AtomicProposition> atoms_of(const Formula& f) {
  std::set<AtomicProposition> seen;
  collect(f, seen);
  return {seen.begin(), seen.end()};
}

}  // namespace ltlrl::ltl
