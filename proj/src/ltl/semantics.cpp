#include "ltlrl/ltl/semantics.hpp"

namespace ltlrl::ltl {

bool evaluate(std::span<const Labeling> trace, std::size_t k, const Formula& f) {
  switch (f.op()) {
    case Op::True:
      return true;
    case Op::Atom:
      return k < trace.size() && trace[k].contains(f.proposition());
    case Op::Not:
      return !evaluate(trace, k, f.lhs());
    case Op::And:
      return evaluate(trace, k, f.lhs()) && evaluate(trace, k, f.rhs());
    case Op::Next:
      return evaluate(trace, k + 1, f.lhs());
    case Op::Until:
      for (std::size_t j = k; j < trace.size(); ++j) {
        if (evaluate(trace, j, f.rhs())) return true;
        if (!evaluate(trace, j, f.lhs())) return false;
      }
      return false;
  }
  return false;
}

}  // namespace ltlrl::ltl
