// ============================================================================
//  smtlib.hpp — QF_LIA export of a constraint set
// ============================================================================
#pragma once

#include <string>

#include "relspec/constraints.hpp"

namespace relspec {

// Renders the constraint set as an SMT-LIB2 (QF_LIA) document: one integer
// constant per timing variable, bound assertions, per-cycle/per-action
// demand terms folding a max over properties of indicator sums, the
// resource-limit assertions against a `gamma` constant, learned blocking
// clauses, and a (check-sat)/(get-model) trailer. Output is byte-stable
// for identical input.
std::string export_smtlib(const ConstraintSet& cs);

}  // namespace relspec
