// ============================================================================
//  reliability.cpp — ways, closed-form and exact strategy reliability
// ============================================================================
#include "relspec/reliability.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "relspec/errors.hpp"

namespace relspec {

std::vector<const StrategyReport*> PropertyAnalysis::admissible() const {
  std::vector<const StrategyReport*> out;
  for (const auto& r : strategies)
    if (r.admissible) out.push_back(&r);
  return out;
}

std::vector<MergedInstance> merge_spatial(const InstanceTable& table,
                                          const Strategy& s) {
  // replica sets collapse per assigned cycle; everything else stays distinct
  std::map<std::pair<int, int>, MergedInstance> sets;  // (root row, cycle)
  for (const auto& row : table.rows) {
    const int cycle = s.cycle_of(row.row);
    auto key = std::make_pair(row.replica_root, cycle);
    auto [it, inserted] = sets.try_emplace(key);
    MergedInstance& m = it->second;
    if (inserted) {
      m.action = row.action;
      m.cycle = cycle;
      m.reliability = 0.0;
    }
    m.rows.push_back(row.row);
  }
  std::vector<MergedInstance> out;
  out.reserve(sets.size());
  for (auto& [key, m] : sets) out.push_back(std::move(m));
  std::sort(out.begin(), out.end(), [](const MergedInstance& a,
                                       const MergedInstance& b) {
    if (a.cycle != b.cycle) return a.cycle < b.cycle;
    return a.rows.front() < b.rows.front();
  });
  return out;
}

void fill_reliabilities(const SpecSuite& suite,
                        std::vector<MergedInstance>& merged) {
  for (auto& m : merged) {
    const double r = suite.action_reliability(m.action);
    // s independent replicas in one cycle: 1 - (1-R)^s
    m.reliability = 1.0 - std::pow(1.0 - r, double(m.rows.size()));
  }
}

std::vector<Way> count_ways(const SpecSuite& suite, const PropertyPair& prop,
                            const std::vector<MergedInstance>& merged,
                            int anchor) {
  // which merged instances can serve each correctness step
  struct StepInfo {
    DelayWindow window;
    std::vector<int> candidates;
  };
  std::vector<StepInfo> steps;
  for (const auto& el : prop.correctness.elems) {
    const Step& st = std::get<Step>(el.node);
    StepInfo info;
    info.window = st.window;
    for (size_t i = 0; i < merged.size(); ++i) {
      const ActionDef* a = suite.find_action(merged[i].action);
      if (a && a->outcome == st.event) info.candidates.push_back(int(i));
    }
    steps.push_back(std::move(info));
  }

  std::vector<Way> ways;
  std::vector<int> picked;
  auto rec = [&](auto&& self, size_t step, int prev_cycle) -> void {
    if (step == steps.size()) {
      Way w;
      w.members = picked;
      // a way succeeds when all *distinct* picked instances succeed
      std::set<int> distinct(picked.begin(), picked.end());
      double p = 1.0;
      for (int m : distinct) p *= merged[size_t(m)].reliability;
      w.probability = p;
      ways.push_back(std::move(w));
      return;
    }
    const StepInfo& info = steps[step];
    for (int m : info.candidates) {
      const int gap = merged[size_t(m)].cycle - (step == 0 ? anchor : prev_cycle);
      if (gap < info.window.lo || gap > info.window.hi) continue;
      picked.push_back(m);
      self(self, step + 1, merged[size_t(m)].cycle);
      picked.pop_back();
    }
  };
  rec(rec, 0, anchor);
  return ways;
}

double computed_reliability(const std::vector<Way>& ways) {
  double fail_all = 1.0;
  for (const auto& w : ways) fail_all *= 1.0 - w.probability;
  return 1.0 - fail_all;
}

double exact_reliability(const std::vector<MergedInstance>& merged,
                         const std::vector<Way>& ways) {
  const size_t n = merged.size();
  if (n > 24)
    throw Error(Errc::instance_cap_exceeded, "",
                "exact reliability limited to 24 instances, got " +
                    std::to_string(n));
  std::vector<std::uint32_t> masks;
  masks.reserve(ways.size());
  for (const auto& w : ways) {
    std::uint32_t m = 0;
    for (int idx : w.members) m |= 1u << idx;
    masks.push_back(m);
  }
  double total = 0.0;
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t bits = 0; bits < limit; ++bits) {
    bool satisfied = false;
    for (std::uint32_t m : masks)
      if ((bits & m) == m) {
        satisfied = true;
        break;
      }
    if (!satisfied) continue;
    double p = 1.0;
    for (size_t i = 0; i < n; ++i)
      p *= (bits >> i) & 1u ? merged[i].reliability : 1.0 - merged[i].reliability;
    total += p;
  }
  return total;
}

PropertyAnalysis admissible_strategies(const SpecSuite& suite,
                                       const PropertyPair& prop, int anchor,
                                       const EnumerationOptions& opts) {
  const InstanceTable table = flatten(suite, prop);
  EnumerationOptions eff = opts;
  if (eff.delta_cap <= 0) eff.delta_cap = exploration_delta_cap(suite, prop);

  PropertyAnalysis analysis;
  analysis.property_id = prop.id;
  analysis.property_index = table.property_index;
  analysis.delta_cap = eff.delta_cap;

  std::vector<Strategy> strategies = enumerate_strategies(table, anchor, {}, eff);
  analysis.strategies.reserve(strategies.size());
  for (size_t i = 0; i < strategies.size(); ++i) {
    StrategyReport report;
    report.label = option_label(table.property_index, int(i));
    report.strategy = std::move(strategies[i]);
    report.merged = merge_spatial(table, report.strategy);
    fill_reliabilities(suite, report.merged);
    std::vector<Way> ways = count_ways(suite, prop, report.merged, anchor);
    report.way_count = int(ways.size());
    report.reliability = computed_reliability(ways);
    report.admissible = report.reliability >= prop.target - kProbabilitySlack;
    analysis.strategies.push_back(std::move(report));
  }
  return analysis;
}

double round_reliability(double value) {
  return std::floor(value * 10000.0 + 0.5) / 10000.0;
}

std::string format_reliability(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", round_reliability(value));
  return buf;
}

}  // namespace relspec
