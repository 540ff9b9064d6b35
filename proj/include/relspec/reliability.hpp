// ============================================================================
//  reliability.hpp
//
//  Strategy reliability against a correctness chain.
//
//  Spatial replicas assigned to one cycle merge into a single instance with
//  effective reliability 1 - (1-R)^s; temporally coincident instances from
//  distinct (re-)executions stay distinct. A "way" picks one merged instance
//  per correctness step such that the first lands inside the anchored first
//  window and each later gap lies inside its declared window. The closed
//  form treats ways as independent:
//
//      R_strategy = 1 - prod_ways (1 - prod_steps R_effective)
//
//  The exact 2^N enumeration is the reference the closed form is tested
//  against: exact <= computed (+1e-12), with equality when ways share no
//  instances.
// ============================================================================
#pragma once

#include "relspec/strategy.hpp"

namespace relspec {

struct MergedInstance {
  std::string action;
  int cycle = 0;
  double reliability = 0.0;  // effective: replica sets already collapsed
  std::vector<int> rows;     // table rows merged into this instance

  bool operator==(const MergedInstance&) const = default;
};

struct Way {
  std::vector<int> members;  // index into the merged-instance list, per step
  double probability = 0.0;  // product of member reliabilities
};

struct StrategyReport {
  std::string label;
  Strategy strategy;
  std::vector<MergedInstance> merged;
  int way_count = 0;
  double reliability = 0.0;
  bool admissible = false;
};

struct PropertyAnalysis {
  std::string property_id;
  int property_index = 0;
  int delta_cap = 0;  // exploration cap the enumeration ran under
  std::vector<StrategyReport> strategies;

  std::vector<const StrategyReport*> admissible() const;
};

// Collapses spatial replica sets per assigned cycle. Result ordered by
// (cycle, first merged row).
std::vector<MergedInstance> merge_spatial(const InstanceTable& table,
                                          const Strategy& s);

// Assigns each merged instance its success probability: s same-cycle
// replicas of an action with reliability R yield 1 - (1-R)^s.
void fill_reliabilities(const SpecSuite& suite,
                        std::vector<MergedInstance>& merged);

// All ways the merged instances can satisfy the property's correctness
// chain, in lexicographic member order.
std::vector<Way> count_ways(const SpecSuite& suite, const PropertyPair& prop,
                            const std::vector<MergedInstance>& merged,
                            int anchor);

// Closed-form reliability over independent ways; 0.0 when no way exists.
double computed_reliability(const std::vector<Way>& ways);

// Exact satisfaction probability by exhaustive success/failure enumeration
// over the merged instances. Throws Errc::instance_cap_exceeded past 24.
double exact_reliability(const std::vector<MergedInstance>& merged,
                         const std::vector<Way>& ways);

// Probability comparisons allow this much slack in favour of admission.
inline constexpr double kProbabilitySlack = 1e-9;

// Enumerates every strategy of the property under the exploration cap and
// reports ways, reliability and admissibility against the target.
PropertyAnalysis admissible_strategies(const SpecSuite& suite,
                                       const PropertyPair& prop, int anchor = 0,
                                       const EnumerationOptions& opts = {});

// Display rounding: half-up to four decimals (0.99986 -> "0.9999").
std::string format_reliability(double value);
double round_reliability(double value);

}  // namespace relspec
