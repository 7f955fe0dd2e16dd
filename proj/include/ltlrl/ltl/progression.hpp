#pragma once

#include <cstddef>
#include <vector>

#include "ltlrl/ltl/atom.hpp"
#include "ltlrl/ltl/formula.hpp"

namespace ltlrl::ltl {

/// Which atoms restrict() is allowed to resolve.
enum class RestrictScope { All, ActionOnly };

/// Applies the expansion law  a U b == !(!b & !(a & X(a U b)))  once to every
/// Until that is not guarded by X. The X-guarded copy keeps the original Until.
Formula expand(const Formula& f);

/// Replaces unguarded atoms by true/!true according to `labels`. Subformulas
/// under X (and any stray Until) are left untouched. With ActionOnly only
/// action-scope atoms are resolved.
Formula restrict(const Formula& f, const Labeling& labels,
                 RestrictScope scope = RestrictScope::All);

/// Strips one level of X. Distributes over & and keeps negation.
Formula advance(const Formula& f);

/// Bottom-up local rewriting to fixpoint:
///   !!f -> f,  f & true -> f,  true & f -> f,
///   f & !true -> !true,  !true & f -> !true,  f & f -> f.
Formula simplify(const Formula& f);

/// One progression step: simplify(advance(restrict(expand(f), labels))).
Verdict projection(const Formula& f, const Labeling& labels);

/// Action-only progression used to predict an action's effect before it runs.
Formula predict(const Formula& f, const Labeling& action_labels);

/// Number of atom occurrences, counted with multiplicity.
std::size_t count_atoms(const Formula& f);

/// Distinct atoms of `f` in sorted order.
std::vector<AtomicProposition> atoms_of(const Formula& f);

}  // namespace ltlrl::ltl
