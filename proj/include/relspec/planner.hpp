// ============================================================================
//  planner.hpp — resource minimization over admissible schedules
// ============================================================================
#pragma once

#include "relspec/constraints.hpp"
#include "relspec/solver.hpp"

namespace relspec {

struct ScheduledProperty {
  int property_index = 0;
  std::string property_id;
  int anchor = 0;
  std::string option;  // label of the strategy realized by the schedule
  Strategy strategy;
  double reliability = 0.0;
};

struct Schedule {
  int gamma_star = 0;
  std::vector<ScheduledProperty> properties;
  // allocation[t-1]: action names scheduled at cycle t, in variable order
  std::vector<std::vector<std::string>> allocation;
  std::vector<int> demand;  // per cycle 1..horizon
  std::vector<int> cycles;  // witness aligned with constraints.variables
  std::vector<std::pair<int, bool>> probes;  // bisection trace (gamma, sat)
  ConstraintSet constraints;                 // final set at gamma_star
};

// Densest-cycle instance total when every fired property runs its first
// admissible strategy with no cross-property sharing; always feasible, so
// it seeds the bisection's upper end.
int pessimistic_gamma(const ConstraintSet& cs);

// Bisects gamma between 1 and pessimistic_gamma. Each feasibility probe
// re-checks the witness per property against the reliability target and
// blocks inadmissible tuples before re-solving at the same gamma. The
// returned witness is the lexicographically smallest admissible one.
// Throws Errc::no_admissible_strategy when a fired property has none.
Schedule min_resources(const SpecSuite& suite, const Scenario& scenario);

}  // namespace relspec
