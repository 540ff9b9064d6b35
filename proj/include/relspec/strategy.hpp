// ============================================================================
//  strategy.hpp
//
//  A strategy assigns every instance-table row an absolute cycle consistent
//  with its time prefix. Enumeration is exhaustive and ordered: assignments
//  are produced in lexicographic order of the row-value vector, so option
//  labels (1A, 1B, ...) are reproducible run to run.
//
//  Admissibility bounds close the loop on the symbolic DELTA prefixes:
//  strategies are enumerated under a generous exploration cap, filtered by
//  the reliability target, and the surviving strategies define
//    delta(i)   = max start gap of re-execution i over admissible strategies
//    horizon    = max last assigned cycle over admissible strategies.
// ============================================================================
#pragma once

#include <map>
#include <optional>

#include "relspec/instances.hpp"

namespace relspec {

struct Strategy {
  std::vector<int> cycles;  // cycles[r-1] = cycle of table row r (absolute)

  int cycle_of(int row) const { return cycles[size_t(row - 1)]; }
  int last_cycle() const;
  bool operator==(const Strategy&) const = default;
  auto operator<=>(const Strategy&) const = default;
};

struct AdmissibilityBounds {
  std::map<int, int> delta;  // DELTA symbol index -> resolved cycle bound
  int horizon = 0;           // latest cycle any admissible strategy occupies
};

struct EnumerationOptions {
  // Cap applied to symbolic DELTA prefixes while bounds are still unknown.
  // <= 0 means "derive the documented exploration cap from the property".
  int delta_cap = 0;
  // Hard ceiling on the number of enumerated strategies.
  long max_strategies = 1'000'000;
};

// The documented exploration cap: (single-execution depth + 1) * max temporal
// count + sum of the correctness chain's upper window bounds.
int exploration_delta_cap(const SpecSuite& suite, const PropertyPair& prop);

// All assignments satisfying every prefix bound, DELTA(i) resolved through
// `delta` (missing entries fall back to opts.delta_cap). Lexicographic order.
// Throws Errc::exploration_cap_exceeded past opts.max_strategies.
std::vector<Strategy> enumerate_strategies(const InstanceTable& table,
                                           int anchor,
                                           const std::map<int, int>& delta,
                                           const EnumerationOptions& opts = {});

// Resolved DELTA map and admissibility horizon for one property, computed in
// isolation at the given anchor. delta(i) is taken over the rows carrying the
// DELTA(i) prefix: the largest admissible gap to their linked row. The
// horizon is relative to cycle numbering (absolute when anchor is 0).
// Throws Errc::no_admissible_strategy when no strategy meets the target.
AdmissibilityBounds compute_bounds(const SpecSuite& suite,
                                   const PropertyPair& prop, int anchor = 0);

// Option label for the strategy at `index` (0-based) of property
// `prop_index` (1-based): "1A", "2B", ..., then "2AA" past 26.
std::string option_label(int prop_index, int index);

}  // namespace relspec
