// ============================================================================
//  solver.cpp — backtracking search with forward checking and demand pruning
// ============================================================================
#include "relspec/solver.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace relspec {

namespace {

struct Search {
  const ConstraintSet& cs;
  const SolveOptions& opts;

  int n = 0;
  std::vector<int> lo, hi, val;          // current interval, -1 = unassigned
  std::vector<int> firing_of, action_of; // per variable
  std::vector<int> row_of;               // row index within its firing
  std::vector<std::vector<std::pair<int, std::pair<int, int>>>> children;
  std::vector<std::vector<std::pair<int, std::pair<int, int>>>> parents;
  std::vector<std::set<std::vector<int>>> admissible_tuples;
  std::vector<int> unassigned_in_firing;
  std::vector<std::vector<int>> firing_vars;  // flat indices in row order

  int actions = 0;
  int horizon = 0;
  std::vector<int> counts;   // [t][a][f] assigned coincidences
  std::vector<int> maxcnt;   // [t][a] max over firings
  std::vector<int> demand;   // [t] current lower bound
  int firings = 0;

  long nodes = 0;

  struct IntervalSave {
    int var, lo, hi;
  };
  struct DemandSave {
    int t, a, f, maxcnt, demand;
  };
  std::vector<IntervalSave> interval_trail;
  std::vector<DemandSave> demand_trail;

  explicit Search(const ConstraintSet& cset, const SolveOptions& o)
      : cs(cset), opts(o) {
    n = int(cs.variables.size());
    lo.resize(size_t(n));
    hi.resize(size_t(n));
    val.assign(size_t(n), -1);
    firing_of.resize(size_t(n));
    action_of.resize(size_t(n));
    row_of.resize(size_t(n));
    children.resize(size_t(n));
    parents.resize(size_t(n));
    firings = int(cs.properties.size());
    firing_vars.resize(size_t(firings));
    unassigned_in_firing.assign(size_t(firings), 0);

    std::map<std::string, int> action_ids;
    std::map<VarRef, int> index;
    {
      size_t idx = 0;
      for (const FiredProperty& fp : cs.properties)
        for (size_t r = 0; r < fp.table.rows.size(); ++r, ++idx) {
          const VarInfo& v = cs.variables[idx];
          index[v.var] = int(idx);
          lo[idx] = v.lo;
          hi[idx] = v.hi;
          firing_of[idx] = fp.firing;
          row_of[idx] = int(r);
          auto [it, ins] = action_ids.try_emplace(v.action, int(action_ids.size()));
          action_of[idx] = it->second;
          firing_vars[size_t(fp.firing)].push_back(int(idx));
          unassigned_in_firing[size_t(fp.firing)] += 1;
        }
    }
    actions = int(action_ids.size());
    for (const TimingConstraint& tc : cs.timing) {
      if (!tc.base) continue;
      const int child = index.at(tc.var), base = index.at(*tc.base);
      children[size_t(base)].push_back({child, {tc.lo, tc.hi}});
      parents[size_t(child)].push_back({base, {tc.lo, tc.hi}});
    }
    horizon = cs.horizon;
    for (int h : hi) horizon = std::max(horizon, h);
    counts.assign(size_t(horizon) * size_t(actions) * size_t(std::max(firings, 1)), 0);
    maxcnt.assign(size_t(horizon) * size_t(actions), 0);
    demand.assign(size_t(horizon), 0);

    if (opts.require_admissible) {
      admissible_tuples.resize(size_t(firings));
      for (const FiredProperty& fp : cs.properties)
        for (const Strategy& s : fp.admissible)
          admissible_tuples[size_t(fp.firing)].insert(s.cycles);
    }
  }

  int& count_ref(int t, int a, int f) {
    return counts[(size_t(t - 1) * size_t(actions) + size_t(a)) *
                      size_t(std::max(firings, 1)) +
                  size_t(f)];
  }
  int& maxcnt_ref(int t, int a) {
    return maxcnt[size_t(t - 1) * size_t(actions) + size_t(a)];
  }

  bool tighten(int var, int new_lo, int new_hi) {
    new_lo = std::max(new_lo, lo[size_t(var)]);
    new_hi = std::min(new_hi, hi[size_t(var)]);
    if (new_lo == lo[size_t(var)] && new_hi == hi[size_t(var)])
      return new_lo <= new_hi;
    interval_trail.push_back({var, lo[size_t(var)], hi[size_t(var)]});
    lo[size_t(var)] = new_lo;
    hi[size_t(var)] = new_hi;
    return new_lo <= new_hi;
  }

  // true while the partial assignment can still be extended
  bool place(int var, int v, size_t& interval_mark, size_t& demand_mark) {
    interval_mark = interval_trail.size();
    demand_mark = demand_trail.size();
    val[size_t(var)] = v;
    unassigned_in_firing[size_t(firing_of[size_t(var)])] -= 1;
    if (!tighten(var, v, v)) return false;

    // demand lower bound at cycle v
    if (v >= 1 && v <= horizon) {
      const int a = action_of[size_t(var)], f = firing_of[size_t(var)];
      int& cnt = count_ref(v, a, f);
      int& peak = maxcnt_ref(v, a);
      demand_trail.push_back({v, a, f, peak, demand[size_t(v - 1)]});
      cnt += 1;
      if (cnt > peak) {
        demand[size_t(v - 1)] += cnt - peak;
        peak = cnt;
      }
      if (demand[size_t(v - 1)] > cs.gamma) return false;
    }

    // forward checking along the difference constraints
    for (const auto& [child, w] : children[size_t(var)])
      if (!tighten(child, v + w.first, v + w.second)) return false;
    for (const auto& [base, w] : parents[size_t(var)])
      if (!tighten(base, v - w.second, v - w.first)) return false;

    // completed property: blocked / admissible tuple checks
    const int f = firing_of[size_t(var)];
    if (unassigned_in_firing[size_t(f)] == 0) {
      std::vector<int> tuple;
      tuple.reserve(firing_vars[size_t(f)].size());
      for (int idx : firing_vars[size_t(f)]) tuple.push_back(val[size_t(idx)]);
      if (size_t(f) < cs.blocked.size() && cs.blocked[size_t(f)].count(tuple))
        return false;
      if (opts.require_admissible &&
          !admissible_tuples[size_t(f)].count(tuple))
        return false;
    }
    return true;
  }

  void unplace(int var, size_t interval_mark, size_t demand_mark) {
    while (interval_trail.size() > interval_mark) {
      const IntervalSave s = interval_trail.back();
      interval_trail.pop_back();
      lo[size_t(s.var)] = s.lo;
      hi[size_t(s.var)] = s.hi;
    }
    while (demand_trail.size() > demand_mark) {
      const DemandSave s = demand_trail.back();
      demand_trail.pop_back();
      count_ref(s.t, s.a, s.f) -= 1;
      maxcnt_ref(s.t, s.a) = s.maxcnt;
      demand[size_t(s.t - 1)] = s.demand;
    }
    val[size_t(var)] = -1;
    unassigned_in_firing[size_t(firing_of[size_t(var)])] += 1;
  }

  int pick_variable() const {
    int best = -1, best_size = 0;
    for (int i = 0; i < n; ++i) {
      if (val[size_t(i)] >= 0) continue;
      if (opts.fixed_order) return i;
      const int size = hi[size_t(i)] - lo[size_t(i)] + 1;
      if (best < 0 || size < best_size) {
        best = i;
        best_size = size;
      }
    }
    return best;
  }

  bool run() {
    const int var = pick_variable();
    if (var < 0) return true;
    for (int v = lo[size_t(var)]; v <= hi[size_t(var)]; ++v) {
      ++nodes;
      size_t imark = 0, dmark = 0;
      if (place(var, v, imark, dmark) && run()) return true;
      unplace(var, imark, dmark);
    }
    return false;
  }
};

}  // namespace

SolveResult solve_feasible(const ConstraintSet& cs, const SolveOptions& opts) {
  Search search(cs, opts);
  for (int i = 0; i < search.n; ++i)
    if (search.lo[size_t(i)] > search.hi[size_t(i)])
      return {false, {}, search.nodes};
  SolveResult result;
  result.feasible = search.run();
  result.nodes = search.nodes;
  if (result.feasible) result.cycles = search.val;
  return result;
}

}  // namespace relspec
