// ============================================================================
//  solver.hpp — deterministic finite-domain feasibility solver
// ============================================================================
#pragma once

#include "relspec/constraints.hpp"

namespace relspec {

struct SolveOptions {
  // false: smallest-current-domain-first (ties by variable order).
  // true:  fixed variable order, making the witness the lexicographically
  //        smallest assignment vector — used for canonical schedules.
  bool fixed_order = false;
  // Accept only assignments whose per-property cycle tuple is one of the
  // property's admissible strategies (checked as each property completes).
  bool require_admissible = false;
};

struct SolveResult {
  bool feasible = false;
  std::vector<int> cycles;  // aligned with cs.variables when feasible
  long nodes = 0;           // explored search nodes (diagnostic)
};

// Backtracking search over integer intervals with forward checking on the
// difference constraints, incremental demand pruning against cs.gamma, and
// blocked-tuple rejection per property. Lowest value first; deterministic.
SolveResult solve_feasible(const ConstraintSet& cs,
                           const SolveOptions& opts = {});

}  // namespace relspec
