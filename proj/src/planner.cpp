// ============================================================================
//  planner.cpp — bisection over gamma with admissibility re-checking
// ============================================================================
#include "relspec/planner.hpp"

#include <algorithm>
#include <map>

#include "relspec/errors.hpp"

namespace relspec {

namespace {

Strategy tuple_of(const ConstraintSet& cs, const std::vector<int>& cycles,
                  size_t firing) {
  Strategy s;
  size_t idx = 0;
  for (size_t f = 0; f < cs.properties.size(); ++f) {
    const size_t rows = cs.properties[f].table.rows.size();
    if (f == firing) {
      s.cycles.assign(cycles.begin() + long(idx),
                      cycles.begin() + long(idx + rows));
      break;
    }
    idx += rows;
  }
  return s;
}

double strategy_reliability(const SpecSuite& suite, const FiredProperty& fp,
                            const Strategy& s) {
  const PropertyPair* prop = suite.find_property(fp.property_id);
  std::vector<MergedInstance> merged = merge_spatial(fp.table, s);
  fill_reliabilities(suite, merged);
  const std::vector<Way> ways = count_ways(suite, *prop, merged, fp.anchor);
  return computed_reliability(ways);
}

// one feasibility probe at cs.gamma; learns blocking tuples as a side effect
bool feasible_admissible(const SpecSuite& suite, ConstraintSet& cs) {
  for (;;) {
    const SolveResult r = solve_feasible(cs);
    if (!r.feasible) return false;
    bool blocked_any = false;
    for (size_t f = 0; f < cs.properties.size(); ++f) {
      const FiredProperty& fp = cs.properties[f];
      const Strategy s = tuple_of(cs, r.cycles, f);
      const PropertyPair* prop = suite.find_property(fp.property_id);
      const double rel = strategy_reliability(suite, fp, s);
      if (rel < prop->target - kProbabilitySlack) {
        cs.blocked[f].insert(s.cycles);
        blocked_any = true;
      }
    }
    if (!blocked_any) return true;
  }
}

}  // namespace

int pessimistic_gamma(const ConstraintSet& cs) {
  std::map<int, int> totals;  // cycle -> instance count, no sharing
  for (const FiredProperty& fp : cs.properties) {
    const Strategy& first = fp.admissible.front();
    for (const auto& row : fp.table.rows) totals[first.cycle_of(row.row)] += 1;
  }
  int peak = 0;
  for (const auto& [t, n] : totals) peak = std::max(peak, n);
  return std::max(peak, 1);
}

Schedule min_resources(const SpecSuite& suite, const Scenario& scenario) {
  Schedule sched;
  if (scenario.firings.empty()) return sched;

  ConstraintSet cs = build_constraints(suite, scenario, 1);
  const int ub = pessimistic_gamma(cs);

  int lo = 1, hi = ub;
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    cs.gamma = mid;
    const bool ok = feasible_admissible(suite, cs);
    sched.probes.emplace_back(mid, ok);
    if (ok)
      hi = mid;
    else
      lo = mid + 1;
  }
  sched.gamma_star = hi;

  // canonical witness: lexicographically smallest admissible assignment
  cs.gamma = sched.gamma_star;
  SolveOptions canon;
  canon.fixed_order = true;
  canon.require_admissible = true;
  const SolveResult r = solve_feasible(cs, canon);
  sched.cycles = r.cycles;

  for (size_t f = 0; f < cs.properties.size(); ++f) {
    const FiredProperty& fp = cs.properties[f];
    ScheduledProperty sp;
    sp.property_index = fp.property_index;
    sp.property_id = fp.property_id;
    sp.anchor = fp.anchor;
    sp.strategy = tuple_of(cs, r.cycles, f);
    for (size_t i = 0; i < fp.admissible.size(); ++i)
      if (fp.admissible[i] == sp.strategy) {
        sp.option = fp.labels[i];
        break;
      }
    sp.reliability = strategy_reliability(suite, fp, sp.strategy);
    sched.properties.push_back(std::move(sp));
  }

  sched.demand = demand_profile(cs, r.cycles);
  sched.allocation.assign(sched.demand.size(), {});
  {
    size_t idx = 0;
    for (const FiredProperty& fp : cs.properties)
      for (const auto& row : fp.table.rows) {
        const int t = r.cycles[idx++];
        if (t >= 1 && size_t(t) <= sched.allocation.size())
          sched.allocation[size_t(t - 1)].push_back(row.action);
      }
  }
  sched.constraints = std::move(cs);
  return sched;
}

}  // namespace relspec
