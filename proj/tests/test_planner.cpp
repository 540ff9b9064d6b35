// ============================================================================
//  test_planner.cpp — bisection, admissibility re-checking, schedules
// ============================================================================
#include <algorithm>
#include <climits>

#include "doctest.h"
#include "helpers.hpp"
#include "relspec/planner.hpp"

using namespace relspec;

namespace {

// Bisection soundness: every satisfiable probe sits at or above the minimum,
// every unsatisfiable probe below it, and the trace brackets the result.
void check_probe_trace(const Schedule& s) {
  bool any_sat = false, any_unsat = false;
  int min_sat = INT_MAX, max_unsat = 0;
  for (const auto& [gamma, ok] : s.probes) {
    if (ok) {
      CHECK(gamma >= s.gamma_star);
      min_sat = std::min(min_sat, gamma);
      any_sat = true;
    } else {
      CHECK(gamma < s.gamma_star);
      max_unsat = std::max(max_unsat, gamma);
      any_unsat = true;
    }
  }
  if (any_sat) CHECK(min_sat == s.gamma_star);
  if (any_unsat) CHECK(max_unsat == s.gamma_star - 1);
}

void check_schedule_invariants(const SpecSuite& suite, const Schedule& s) {
  REQUIRE(!s.cycles.empty());
  REQUIRE(!s.demand.empty());
  CHECK(*std::max_element(s.demand.begin(), s.demand.end()) == s.gamma_star);
  size_t instances = 0;
  for (const auto& at_cycle : s.allocation) instances += at_cycle.size();
  CHECK(instances == s.cycles.size());
  for (const ScheduledProperty& sp : s.properties) {
    CAPTURE(sp.property_id);
    CHECK(!sp.option.empty());
    const PropertyPair* prop = suite.find_property(sp.property_id);
    REQUIRE(prop != nullptr);
    CHECK(sp.reliability >= prop->target - kProbabilitySlack);
  }
  check_probe_trace(s);
}

}  // namespace

TEST_CASE("pessimistic bound stacks first strategies without sharing") {
  SpecSuite acc = testutil::load_suite("acc.spec");
  ConstraintSet cs = build_constraints(acc, *acc.find_scenario("all"), 1);
  CHECK(pessimistic_gamma(cs) == 4);
}

TEST_CASE("cruise-control minimization, frozen end to end") {
  SpecSuite acc = testutil::load_suite("acc.spec");
  Schedule s = min_resources(acc, *acc.find_scenario("all"));

  CHECK(s.gamma_star == 2);
  CHECK(s.probes ==
        std::vector<std::pair<int, bool>>{{2, true}, {1, false}});
  CHECK(s.cycles == std::vector<int>{2, 2, 4, 4, 1, 2, 3, 2, 3, 4});
  CHECK(s.demand == std::vector<int>{1, 2, 2, 2, 0});

  REQUIRE(s.properties.size() == 2);
  CHECK(s.properties[0].property_id == "ACC_R1");
  CHECK(s.properties[0].option == "1D");
  CHECK(s.properties[0].strategy.cycles == std::vector<int>{2, 2, 4, 4});
  CHECK(format_reliability(s.properties[0].reliability) == "0.9504");
  CHECK(s.properties[1].property_id == "ACC_R2");
  CHECK(s.properties[1].option == "2A");
  CHECK(s.properties[1].strategy.cycles ==
        std::vector<int>{1, 2, 3, 2, 3, 4});
  CHECK(format_reliability(s.properties[1].reliability) == "0.9999");

  REQUIRE(s.allocation.size() == 5);
  CHECK(s.allocation[0] == std::vector<std::string>{"act1"});
  CHECK(s.allocation[1] ==
        std::vector<std::string>{"act1", "act1", "act1", "act1"});
  CHECK(s.allocation[2] == std::vector<std::string>{"act2", "act1"});
  CHECK(s.allocation[3] ==
        std::vector<std::string>{"act2", "act2", "act2"});
  CHECK(s.allocation[4].empty());

  CHECK(s.constraints.gamma == 2);
  check_schedule_invariants(acc, s);
}

TEST_CASE("a single fired property still needs its replica pair") {
  SpecSuite acc = testutil::load_suite("acc.spec");
  Scenario one{"one", {{"ACC_R1", 0}}};
  Schedule s = min_resources(acc, one);
  CHECK(s.gamma_star == 2);
  CHECK(s.probes == std::vector<std::pair<int, bool>>{{1, false}});
  CHECK(s.cycles == std::vector<int>{1, 1, 2, 2});
  CHECK(s.properties[0].option == "1A");
  check_schedule_invariants(acc, s);
}

TEST_CASE("inadmissible witnesses are learned and avoided") {
  // The raw timing model accepts (2,3) for P, but only an exact two-cycle
  // gap carries reliability; the probe must learn that and move on.
  SpecSuite s = testutil::parse_strict(
      "timebase 10 ms\n"
      "action a causes oa reliability 0.9\n"
      "action b causes ob reliability 0.9\n"
      "action c causes oc reliability 0.9\n"
      "property P target 0.8 {\n"
      "  correct: go |-> ##[1:2] oa ##2 ob\n"
      "  rely: go |-> ##[1:2] a ##[1:2] b\n"
      "}\n"
      "property Q target 0.9 {\n"
      "  correct: go2 |-> ##1 oc\n"
      "  rely: go2 |-> ##1 c[~2]\n"
      "}\n"
      "scenario both: P, Q\n");

  ConstraintSet cs = build_constraints(s, s.scenarios[0], 1);
  CHECK(pessimistic_gamma(cs) == 3);

  Schedule sched = min_resources(s, s.scenarios[0]);
  CHECK(sched.gamma_star == 2);
  CHECK(sched.probes ==
        std::vector<std::pair<int, bool>>{{2, true}, {1, false}});
  CHECK(sched.cycles == std::vector<int>{2, 4, 1, 1});
  CHECK(sched.demand == std::vector<int>{2, 1, 0, 1});
  CHECK(sched.properties[0].option == "1D");
  CHECK(sched.properties[0].reliability == doctest::Approx(0.81));
  CHECK(sched.properties[1].option == "2A");
  CHECK(sched.properties[1].reliability == doctest::Approx(0.99));

  // the learned blocking clause is the timing-valid but unreliable tuple
  CHECK(sched.constraints.blocked[0] ==
        std::set<std::vector<int>>{{2, 3}});
  CHECK(sched.constraints.blocked[1].empty());

  REQUIRE(sched.allocation.size() == 4);
  CHECK(sched.allocation[0] == std::vector<std::string>{"c", "c"});
  CHECK(sched.allocation[1] == std::vector<std::string>{"a"});
  CHECK(sched.allocation[2].empty());
  CHECK(sched.allocation[3] == std::vector<std::string>{"b"});
  check_schedule_invariants(s, sched);
}

TEST_CASE("navigation scenarios minimize to their documented levels") {
  SpecSuite ngc = testutil::load_suite("ngc.spec");

  Schedule sim = min_resources(ngc, *ngc.find_scenario("simultaneous"));
  CHECK(sim.gamma_star == 4);
  check_schedule_invariants(ngc, sim);

  Schedule tmp = min_resources(ngc, *ngc.find_scenario("temporary_failure"));
  CHECK(tmp.gamma_star == 3);
  CHECK(tmp.properties.size() == 7);
  check_schedule_invariants(ngc, tmp);

  Schedule perm = min_resources(ngc, *ngc.find_scenario("permanent_failure"));
  CHECK(perm.gamma_star == 2);
  CHECK(perm.properties.size() == 8);
  check_schedule_invariants(ngc, perm);
}

TEST_CASE("an empty scenario needs nothing") {
  SpecSuite acc = testutil::load_suite("acc.spec");
  Scenario none{"none", {}};
  Schedule s = min_resources(acc, none);
  CHECK(s.gamma_star == 0);
  CHECK(s.properties.empty());
  CHECK(s.cycles.empty());
  CHECK(s.allocation.empty());
  CHECK(s.probes.empty());
}
