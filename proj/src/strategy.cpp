// ============================================================================
//  strategy.cpp — strategy enumeration and admissibility bounds
// ============================================================================
#include "relspec/strategy.hpp"

#include <algorithm>
#include <stdexcept>

#include "relspec/errors.hpp"
#include "relspec/reliability.hpp"

namespace relspec {

int Strategy::last_cycle() const {
  return cycles.empty() ? 0 : *std::max_element(cycles.begin(), cycles.end());
}

std::string option_label(int prop_index, int index) {
  std::string letters;
  int n = index;
  do {
    letters.insert(letters.begin(), char('A' + n % 26));
    n = n / 26 - 1;
  } while (n >= 0);
  return std::to_string(prop_index) + letters;
}

int exploration_delta_cap(const SpecSuite& suite, const PropertyPair& prop) {
  (void)suite;
  int max_temporal = 1;
  for (const auto& el : prop.reliability_spec.elems)
    if (const auto* tm = std::get_if<Temporal>(&el.node))
      max_temporal = std::max(max_temporal, tm->count);
  int correctness_span = 0;
  for (const auto& el : prop.correctness.elems)
    if (const auto* s = std::get_if<Step>(&el.node))
      correctness_span += s->window.unbounded() ? 0 : s->window.hi;
  return (sequential_depth(prop.reliability_spec) + 1) * max_temporal +
         correctness_span;
}

std::vector<Strategy> enumerate_strategies(const InstanceTable& table,
                                           int anchor,
                                           const std::map<int, int>& delta,
                                           const EnumerationOptions& opts) {
  const size_t n = table.rows.size();
  // resolve each row's prefix bounds up front
  std::vector<std::pair<int, int>> bounds(n);
  for (size_t i = 0; i < n; ++i) {
    const TimePrefix& p = table.rows[i].prefix;
    int hi = p.hi;
    if (p.symbolic()) {
      if (auto it = delta.find(p.delta); it != delta.end()) {
        hi = it->second;
      } else if (opts.delta_cap > 0) {
        hi = opts.delta_cap;
      } else {
        throw std::logic_error("unresolved DELTA prefix without a cap");
      }
    }
    bounds[i] = {p.lo, hi};
  }

  std::vector<Strategy> out;
  std::vector<int> cycles(n, 0);
  // depth-first in row order, values ascending: lexicographic output
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == n) {
      out.push_back(Strategy{cycles});
      if (long(out.size()) > opts.max_strategies)
        throw Error(Errc::exploration_cap_exceeded, table.property_id,
                    "strategy enumeration exceeded " +
                        std::to_string(opts.max_strategies) + " assignments");
      return;
    }
    const int base =
        table.rows[i].link == 0 ? anchor : cycles[size_t(table.rows[i].link - 1)];
    for (int c = base + bounds[i].first; c <= base + bounds[i].second; ++c) {
      cycles[i] = c;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

AdmissibilityBounds compute_bounds(const SpecSuite& suite,
                                   const PropertyPair& prop, int anchor) {
  PropertyAnalysis analysis = admissible_strategies(suite, prop, anchor);
  const InstanceTable table = flatten(suite, prop);

  AdmissibilityBounds b;
  bool any = false;
  for (const auto& report : analysis.strategies) {
    if (!report.admissible) continue;
    any = true;
    b.horizon = std::max(b.horizon, report.strategy.last_cycle());
    for (const auto& row : table.rows) {
      if (!row.prefix.symbolic()) continue;
      const int gap = report.strategy.cycle_of(row.row) -
                      report.strategy.cycle_of(row.link);
      auto [it, inserted] = b.delta.emplace(row.prefix.delta, gap);
      if (!inserted) it->second = std::max(it->second, gap);
    }
  }
  if (!any)
    throw Error(Errc::no_admissible_strategy, prop.id,
                "no strategy of '" + prop.id + "' meets target");
  return b;
}

}  // namespace relspec
