// ============================================================================
//  bench.cpp — synthetic suite generation and timing
// ============================================================================
#include "relspec/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include "relspec/errors.hpp"
#include "relspec/instances.hpp"
#include "relspec/planner.hpp"
#include "relspec/reliability.hpp"

namespace relspec {

namespace {

void check_caps(const BenchSpec& s) {
  const auto reject = [](const std::string& what) {
    throw Error(Errc::bench_cap_exceeded, what, "bench parameter out of range: " + what);
  };
  if (s.properties < 1 || s.properties > kBenchMaxProperties) reject("properties");
  if (s.actions_per_property < 1 || s.actions_per_property > kBenchMaxActions)
    reject("actions");
  if (s.depth < 1 || s.depth > kBenchMaxDepth) reject("depth");
  if (s.spatial_lo < 1 || s.spatial_lo > s.spatial_hi ||
      s.spatial_hi > kBenchMaxFactor)
    reject("spatial");
  if (s.temporal_lo < 1 || s.temporal_lo > s.temporal_hi ||
      s.temporal_hi > kBenchMaxFactor)
    reject("temporal");
  if (s.reps < 1 || s.reps > kBenchMaxReps) reject("reps");
}

// all randomness comes from raw engine draws, keeping output platform-stable
int draw(std::mt19937_64& eng, int lo, int hi) {
  if (hi <= lo) return lo;
  return lo + int(eng() % std::uint64_t(hi - lo + 1));
}

Step make_step(std::string event, int lo, int hi) {
  Step s;
  s.event = std::move(event);
  s.window = {lo, hi};
  return s;
}

// the lexicographically smallest legal assignment: every gap at its minimum
Strategy min_gap_strategy(const InstanceTable& table) {
  Strategy s;
  s.cycles.resize(table.rows.size());
  for (const auto& row : table.rows) {
    const int base = row.link == 0 ? 0 : s.cycle_of(row.link);
    s.cycles[size_t(row.row - 1)] = base + row.prefix.lo;
  }
  return s;
}

double assignment_reliability(const SpecSuite& suite, const PropertyPair& prop,
                              const InstanceTable& table, const Strategy& s) {
  std::vector<MergedInstance> merged = merge_spatial(table, s);
  fill_reliabilities(suite, merged);
  return computed_reliability(count_ways(suite, prop, merged, 0));
}

}  // namespace

SpecSuite generate_suite(const BenchSpec& spec, std::uint64_t instance_seed) {
  std::mt19937_64 eng(instance_seed);
  const int m = spec.actions_per_property;
  const int window_span = std::max(1, spec.depth / m);

  SpecSuite suite;
  suite.timebase_ms = 10;
  for (int a = 1; a <= m; ++a) {
    const double rel = 0.90 + double(eng() % 90) / 1000.0;
    const std::string id = std::to_string(a);
    suite.outcomes.push_back({"out" + id, rel});
    suite.actions.push_back({"act" + id, "out" + id});
  }

  Scenario all;
  all.id = "all";
  for (int p = 1; p <= spec.properties; ++p) {
    std::vector<int> hi_gap(size_t(m) + 1, 1);
    for (int k = 1; k <= m; ++k) hi_gap[size_t(k)] = 1 + draw(eng, 0, window_span - 1);
    const int spatial =
        spec.spatial_hi > 1 ? draw(eng, spec.spatial_lo, spec.spatial_hi) : 1;
    const int temporal =
        spec.temporal_hi > 1 ? draw(eng, spec.temporal_lo, spec.temporal_hi) : 1;

    PropertyPair prop;
    prop.id = "P" + std::to_string(p);
    prop.trigger.elems.push_back({Step{"go", {0, 0}}});

    // reliability chain: spatial factor on the first step, the temporal
    // block wrapping the last two (or the only) steps
    const int wrap_from = temporal > 1 ? std::max(1, m - 1) : m + 1;
    Chain tail;
    for (int k = 1; k <= m; ++k) {
      Step st = make_step("act" + std::to_string(k), 1, hi_gap[size_t(k)]);
      Element el{st};
      if (k == 1 && spatial > 1) el.node = Spatial{st, spatial};
      if (k >= wrap_from)
        tail.elems.push_back(std::move(el));
      else
        prop.reliability_spec.elems.push_back(std::move(el));
    }
    if (!tail.elems.empty()) {
      Temporal t;
      t.block = std::move(tail);
      t.count = temporal;
      prop.reliability_spec.elems.push_back({std::move(t)});
    }

    // correctness chain mirrors the windows; the widened last window lets
    // re-executions contribute ways
    for (int k = 1; k <= m; ++k) {
      const int widen = (k == m && temporal > 1) ? temporal : 0;
      prop.correctness.elems.push_back(
          {make_step("out" + std::to_string(k), 1, hi_gap[size_t(k)] + widen)});
    }

    // a target the minimum-gap strategy provably meets
    double one_way = 1.0;
    for (int k = 1; k <= m; ++k) {
      const double r = suite.outcomes[size_t(k - 1)].reliability;
      one_way *= k == 1 ? 1.0 - std::pow(1.0 - r, double(spatial)) : r;
    }
    if (temporal > 1) {
      const double two_way = 1.0 - (1.0 - one_way) * (1.0 - one_way);
      prop.target = (one_way + two_way) / 2.0;
    } else {
      prop.target = one_way * 0.98;
    }
    suite.properties.push_back(std::move(prop));
    all.firings.emplace_back("P" + std::to_string(p), 0);
  }

  // clamp temporal targets to something the smallest strategy achieves
  for (PropertyPair& prop : suite.properties) {
    const InstanceTable table = flatten(suite, prop);
    const double floor_rel =
        assignment_reliability(suite, prop, table, min_gap_strategy(table));
    prop.target = std::min(prop.target, floor_rel);
    prop.target = std::min(prop.target, 0.999999);
  }

  suite.scenarios.push_back(std::move(all));
  return suite;
}

std::vector<BenchRow> run_bench(const BenchSpec& spec) {
  check_caps(spec);
  std::vector<BenchRow> rows;
  for (int rep = 0; rep < spec.reps; ++rep) {
    const std::uint64_t instance_seed = spec.seed + std::uint64_t(rep);
    const SpecSuite suite = generate_suite(spec, instance_seed);

    const auto start = std::chrono::steady_clock::now();
    const Schedule sched = min_resources(suite, suite.scenarios.front());
    const auto stop = std::chrono::steady_clock::now();

    BenchRow row;
    row.seed = instance_seed;
    row.properties = spec.properties;
    row.actions_per_property = spec.actions_per_property;
    row.depth = spec.depth;
    row.spatial_lo = spec.spatial_lo;
    row.spatial_hi = spec.spatial_hi;
    row.temporal_lo = spec.temporal_lo;
    row.temporal_hi = spec.temporal_hi;
    row.gamma_star = sched.gamma_star;
    row.millis =
        std::chrono::duration<double, std::milli>(stop - start).count();
    rows.push_back(row);
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out =
      "seed,properties,actions_per_property,depth,spatial,temporal,"
      "gamma_star,millis\n";
  char buf[160];
  for (const BenchRow& r : rows) {
    std::snprintf(buf, sizeof buf,
                  "%llu,%d,%d,%d,%d..%d,%d..%d,%d,%.3f\n",
                  static_cast<unsigned long long>(r.seed), r.properties,
                  r.actions_per_property, r.depth, r.spatial_lo, r.spatial_hi,
                  r.temporal_lo, r.temporal_hi, r.gamma_star, r.millis);
    out += buf;
  }
  return out;
}

}  // namespace relspec
