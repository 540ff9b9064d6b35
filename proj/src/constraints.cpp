// ============================================================================
//  constraints.cpp — constraint-set construction and demand computation
// ============================================================================
#include "relspec/constraints.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "relspec/errors.hpp"

namespace relspec {

namespace {

std::string var_name(VarRef v) {
  return "tau_" + std::to_string(v.prop) + "_" + std::to_string(v.row);
}

}  // namespace

int ConstraintSet::var_index(VarRef v) const {
  for (size_t i = 0; i < variables.size(); ++i)
    if (variables[i].var == v) return int(i);
  return -1;
}

ConstraintSet build_constraints(const SpecSuite& suite,
                                const Scenario& scenario, int gamma) {
  ConstraintSet cs;
  cs.gamma = gamma;

  for (size_t f = 0; f < scenario.firings.size(); ++f) {
    const auto& [prop_id, anchor] = scenario.firings[f];
    const PropertyPair* prop = suite.find_property(prop_id);
    if (!prop)
      throw Error(Errc::no_admissible_strategy, prop_id,
                  "scenario fires unknown property " + prop_id);

    PropertyAnalysis analysis = admissible_strategies(suite, *prop, anchor);
    FiredProperty fp;
    fp.firing = int(f);
    fp.property_index = analysis.property_index;
    fp.property_id = prop_id;
    fp.anchor = anchor;
    fp.table = flatten(suite, *prop);
    for (const StrategyReport* r : analysis.admissible()) {
      fp.admissible.push_back(r->strategy);
      fp.labels.push_back(r->label);
    }
    if (fp.admissible.empty())
      throw Error(Errc::no_admissible_strategy, prop_id,
                  "no admissible strategy for property " + prop_id);

    // resolve DELTA symbols and the horizon from the admissible envelope
    std::map<int, int> delta;
    fp.horizon = 0;
    for (const Strategy& s : fp.admissible) {
      fp.horizon = std::max(fp.horizon, s.last_cycle());
      for (const auto& row : fp.table.rows)
        if (row.prefix.symbolic()) {
          const int gap = s.cycle_of(row.row) - s.cycle_of(row.link);
          auto [it, ins] = delta.try_emplace(row.prefix.delta, gap);
          if (!ins) it->second = std::max(it->second, gap);
        }
    }

    // per-row absolute bounds, chained through the links
    std::vector<int> lo_abs(fp.table.rows.size() + 1, 0);
    std::vector<int> hi_abs(fp.table.rows.size() + 1, 0);
    for (const auto& row : fp.table.rows) {
      const int hi_gap = row.prefix.symbolic() ? delta.at(row.prefix.delta)
                                               : row.prefix.hi;
      if (row.link == 0) {
        // root: tighten the declared window to the admissible envelope
        int lo = anchor + row.prefix.lo, hi = anchor + hi_gap;
        int env_lo = fp.horizon, env_hi = 0;
        for (const Strategy& s : fp.admissible) {
          env_lo = std::min(env_lo, s.cycle_of(row.row));
          env_hi = std::max(env_hi, s.cycle_of(row.row));
        }
        lo = std::max(lo, env_lo);
        hi = std::min(hi, env_hi);
        lo_abs[size_t(row.row)] = lo;
        hi_abs[size_t(row.row)] = hi;
        cs.timing.push_back({fp.table.var(row.row), std::nullopt, lo, hi});
      } else {
        lo_abs[size_t(row.row)] = lo_abs[size_t(row.link)] + row.prefix.lo;
        hi_abs[size_t(row.row)] = hi_abs[size_t(row.link)] + hi_gap;
        cs.timing.push_back({fp.table.var(row.row), fp.table.var(row.link),
                             row.prefix.lo, hi_gap});
      }
      VarInfo info;
      info.var = fp.table.var(row.row);
      info.action = row.action;
      info.spatial_factor = row.spatial_factor;
      info.lo = lo_abs[size_t(row.row)];
      info.hi = std::min(hi_abs[size_t(row.row)], fp.horizon);
      cs.variables.push_back(std::move(info));
    }

    cs.horizon = std::max(cs.horizon, fp.horizon);
    cs.properties.push_back(std::move(fp));
  }
  cs.blocked.resize(cs.properties.size());

  // groups: declaration order of actions, replica index ascending
  int max_sf = 1;
  for (const VarInfo& v : cs.variables) max_sf = std::max(max_sf, v.spatial_factor);
  for (const ActionDef& a : suite.actions)
    for (int sf = 1; sf <= max_sf; ++sf) {
      Group g;
      g.action = a.name;
      g.spatial_factor = sf;
      for (const VarInfo& v : cs.variables)
        if (v.action == a.name && v.spatial_factor == sf)
          g.members.push_back(v.var);
      if (!g.members.empty()) cs.groups.push_back(std::move(g));
    }

  return cs;
}

namespace {

// counts[firing][action] at one cycle; shared scratch for both demand paths
std::vector<int> operational_demand(
    const std::vector<std::tuple<int, std::string, int>>& placed, int horizon) {
  std::vector<int> demand(size_t(std::max(horizon, 0)), 0);
  // (cycle, action) -> firing -> count
  std::map<std::pair<int, std::string>, std::map<int, int>> counts;
  for (const auto& [firing, action, cycle] : placed)
    counts[{cycle, action}][firing] += 1;
  for (const auto& [key, per_firing] : counts) {
    const int t = key.first;
    if (t < 1 || t > horizon) continue;
    int peak = 0;
    for (const auto& [firing, n] : per_firing) peak = std::max(peak, n);
    demand[size_t(t - 1)] += peak;
  }
  return demand;
}

}  // namespace

std::vector<int> demand_profile(const ConstraintSet& cs,
                                const std::vector<int>& cycles) {
  std::vector<std::tuple<int, std::string, int>> placed;
  placed.reserve(cs.variables.size());
  size_t idx = 0;
  for (const FiredProperty& fp : cs.properties)
    for (const auto& row : fp.table.rows)
      placed.emplace_back(fp.firing, row.action, cycles[idx++]);
  int horizon = cs.horizon;
  for (const auto& [f, a, t] : placed) horizon = std::max(horizon, t);
  return operational_demand(placed, horizon);
}

std::vector<int> demand_profile(const SpecSuite& suite,
                                const Scenario& scenario,
                                const std::vector<Strategy>& per_firing) {
  std::vector<std::tuple<int, std::string, int>> placed;
  int horizon = 0;
  for (size_t f = 0; f < scenario.firings.size(); ++f) {
    const PropertyPair* prop = suite.find_property(scenario.firings[f].first);
    if (!prop) continue;
    const InstanceTable table = flatten(suite, *prop);
    const Strategy& s = per_firing[f];
    for (const auto& row : table.rows) {
      const int t = s.cycle_of(row.row);
      placed.emplace_back(int(f), row.action, t);
      horizon = std::max(horizon, t);
    }
  }
  return operational_demand(placed, horizon);
}

std::vector<int> eq3_demand_profile(const ConstraintSet& cs,
                                    const std::vector<int>& cycles) {
  int horizon = cs.horizon;
  for (int t : cycles) horizon = std::max(horizon, t);
  std::vector<int> demand(size_t(std::max(horizon, 0)), 0);

  // firing of each variable, aligned with cs.variables
  std::vector<int> firing_of(cs.variables.size(), 0);
  {
    size_t idx = 0;
    for (const FiredProperty& fp : cs.properties)
      for (size_t r = 0; r < fp.table.rows.size(); ++r) firing_of[idx++] = fp.firing;
  }

  for (int t = 1; t <= horizon; ++t) {
    // per group: active flag and the largest same-firing coincidence
    std::vector<int> cnt(cs.groups.size(), 0), sub(cs.groups.size(), 0);
    std::map<std::string, int> sup;  // action -> sum of its groups' cnt
    for (size_t l = 0; l < cs.groups.size(); ++l) {
      std::map<int, int> per_firing;
      for (VarRef v : cs.groups[l].members) {
        const int idx = cs.var_index(v);
        if (cycles[size_t(idx)] == t) per_firing[firing_of[size_t(idx)]] += 1;
      }
      for (const auto& [f, n] : per_firing) sub[l] = std::max(sub[l], n);
      cnt[l] = per_firing.empty() ? 0 : 1;
      sup[cs.groups[l].action] += cnt[l];
    }
    int total = 0;
    for (size_t l = 0; l < cs.groups.size(); ++l)
      total += cnt[l] + std::max(0, sub[l] - sup[cs.groups[l].action]);
    demand[size_t(t - 1)] = total;
  }
  return demand;
}

std::string to_text(const ConstraintSet& cs) {
  std::ostringstream out;
  for (const TimingConstraint& tc : cs.timing) {
    if (!tc.base) {
      out << var_name(tc.var) << " >= " << tc.lo << "\n";
      out << var_name(tc.var) << " <= " << tc.hi << "\n";
    } else if (tc.lo == tc.hi) {
      out << var_name(tc.var) << " - " << var_name(*tc.base) << " = " << tc.lo
          << "\n";
    } else {
      out << var_name(tc.var) << " - " << var_name(*tc.base) << " >= " << tc.lo
          << "\n";
      out << var_name(tc.var) << " - " << var_name(*tc.base) << " <= " << tc.hi
          << "\n";
    }
  }
  for (const FiredProperty& fp : cs.properties)
    out << "last(" << fp.property_id << ") <= " << fp.horizon << "\n";
  for (size_t l = 0; l < cs.groups.size(); ++l) {
    out << "G" << l + 1 << "(" << cs.groups[l].action << "):";
    for (VarRef v : cs.groups[l].members) out << " " << var_name(v);
    out << "\n";
  }
  out << "gamma = " << cs.gamma << "\n";
  return out.str();
}

}  // namespace relspec
