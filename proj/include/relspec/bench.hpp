// ============================================================================
//  bench.hpp — deterministic scalability harness
// ============================================================================
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "relspec/ast.hpp"

namespace relspec {

// Instance generation is a pure function of these fields. Redundancy factor
// ranges are inclusive; lo == hi == 1 disables that redundancy kind.
struct BenchSpec {
  int properties = 1;
  int actions_per_property = 1;
  int depth = 1;  // scales the delay-window widths, and with them the search
  int spatial_lo = 1, spatial_hi = 1;
  int temporal_lo = 1, temporal_hi = 1;
  std::uint64_t seed = 0;
  int reps = 5;
};

// Documented envelope; run_bench rejects anything beyond it.
constexpr int kBenchMaxProperties = 32;
constexpr int kBenchMaxActions = 8;
constexpr int kBenchMaxDepth = 200;
constexpr int kBenchMaxFactor = 6;
constexpr int kBenchMaxReps = 50;

struct BenchRow {
  std::uint64_t seed = 0;  // per-instance seed: spec.seed + rep
  int properties = 0;
  int actions_per_property = 0;
  int depth = 0;
  int spatial_lo = 1, spatial_hi = 1;
  int temporal_lo = 1, temporal_hi = 1;
  int gamma_star = 0;
  double millis = 0.0;
};

// One synthetic suite: a shared action pool, per-property delay chains with
// window widths drawn under `depth`, optional spatial redundancy on the
// first step and temporal redundancy around the tail, and a target every
// generated suite can meet. Scenario "all" fires everything at cycle 0.
SpecSuite generate_suite(const BenchSpec& spec, std::uint64_t instance_seed);

// Generates spec.reps instances (seeds spec.seed .. spec.seed + reps - 1),
// minimizes resources for each, and reports parameters, gamma_star and the
// wall-clock milliseconds of the minimization.
// Throws Errc::bench_cap_exceeded outside the documented envelope.
std::vector<BenchRow> run_bench(const BenchSpec& spec);

// CSV with header: seed,properties,actions_per_property,depth,spatial,
// temporal,gamma_star,millis. All columns except millis are deterministic.
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace relspec
