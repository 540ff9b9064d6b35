// ============================================================================
//  test_parser.cpp — DSL surface: declarations, windows, suffixes, recovery
// ============================================================================
#include "doctest.h"
#include "helpers.hpp"
#include "relspec/parser.hpp"

using namespace relspec;

namespace {

const char* kMinimal = R"(
timebase 50 ms

action a causes oa reliability 0.8
action b causes ob reliability 0.9

property P target 0.95 {
  correct: go |-> ##[1:2] oa ##[1:2] ob
  rely: go |-> ##[1:2] a[~2] ##[1:2] b[~2]
}

scenario all: P
scenario late: P@3
)";

PropertyPair parse_property_line(const std::string& correct,
                                 const std::string& rely) {
  std::string text = "timebase 10 ms\n";
  text += "action a causes oa reliability 0.9\n";
  text += "action b causes ob reliability 0.9\n";
  text += "property P target 0.5 {\n  correct: " + correct + "\n  rely: " +
          rely + "\n}\n";
  ParseResult r = parse_suite(text);
  REQUIRE(r.suite.has_value());
  REQUIRE(!has_errors(r.diagnostics));
  REQUIRE(r.suite->properties.size() == 1);
  return r.suite->properties.front();
}

}  // namespace

TEST_CASE("declarations land in the object model") {
  ParseResult r = parse_suite(kMinimal);
  REQUIRE(r.suite.has_value());
  CHECK(!has_errors(r.diagnostics));
  const SpecSuite& s = *r.suite;

  CHECK(s.timebase_ms == 50);
  REQUIRE(s.actions.size() == 2);
  CHECK(s.actions[0].name == "a");
  CHECK(s.actions[0].outcome == "oa");
  REQUIRE(s.outcomes.size() == 2);
  CHECK(s.outcomes[0].reliability == doctest::Approx(0.8));
  CHECK(s.action_reliability("b") == doctest::Approx(0.9));
  CHECK(s.action_reliability("nope") == 0.0);

  REQUIRE(s.properties.size() == 1);
  const PropertyPair& p = s.properties.front();
  CHECK(p.id == "P");
  CHECK(p.target == doctest::Approx(0.95));
  REQUIRE(p.trigger.elems.size() == 1);
  const Step& trig = std::get<Step>(p.trigger.elems.front().node);
  CHECK(trig.event == "go");
  CHECK(trig.window == DelayWindow{0, 0});  // leading window defaults to ##0
  REQUIRE(p.correctness.elems.size() == 2);
  CHECK(std::get<Step>(p.correctness.elems[0].node).window == DelayWindow{1, 2});
  REQUIRE(p.reliability_spec.elems.size() == 2);
  const Spatial& sp = std::get<Spatial>(p.reliability_spec.elems[0].node);
  CHECK(sp.count == 2);
  CHECK(sp.step.event == "a");
  CHECK(sp.step.window == DelayWindow{1, 2});

  REQUIRE(s.scenarios.size() == 2);
  CHECK(s.scenarios[0].firings ==
        std::vector<std::pair<std::string, int>>{{"P", 0}});
  CHECK(s.scenarios[1].firings ==
        std::vector<std::pair<std::string, int>>{{"P", 3}});
}

TEST_CASE("delay prefixes cover the three window forms") {
  PropertyPair p = parse_property_line("trig ##[2:$] trig2 |-> ##3 oa ##[1:4] ob",
                                       "trig |-> ##1 a ##[1:4] b");
  REQUIRE(p.correct_trigger.elems.size() == 2);
  const Step& second = std::get<Step>(p.correct_trigger.elems[1].node);
  CHECK(second.window.lo == 2);
  CHECK(second.window.unbounded());
  CHECK(std::get<Step>(p.correctness.elems[0].node).window == DelayWindow{3, 3});
  CHECK(std::get<Step>(p.correctness.elems[1].node).window == DelayWindow{1, 4});
}

TEST_CASE("redundancy suffixes: spatial, consecutive, temporal") {
  SUBCASE("single-action forms") {
    PropertyPair p = parse_property_line("go |-> ##1 oa",
                                         "go |-> ##[1:2] a[~3] ##2 b[*2]");
    REQUIRE(p.reliability_spec.elems.size() == 2);
    CHECK(std::get<Spatial>(p.reliability_spec.elems[0].node).count == 3);
    const Consec& co = std::get<Consec>(p.reliability_spec.elems[1].node);
    CHECK(co.count == 2);
    CHECK(co.step.window == DelayWindow{2, 2});
  }
  SUBCASE("temporal block over a group") {
    PropertyPair p = parse_property_line("go |-> ##1 oa ##[1:3] ob",
                                         "go |-> ##[1:3] (a[*2] ##1 b)[=2]");
    REQUIRE(p.reliability_spec.elems.size() == 1);
    const Temporal& tm = std::get<Temporal>(p.reliability_spec.elems[0].node);
    CHECK(tm.count == 2);
    REQUIRE(tm.block.elems.size() == 2);
    // the ## before the '(' becomes the block's leading window
    const Consec& lead = std::get<Consec>(tm.block.elems[0].node);
    CHECK(lead.step.window == DelayWindow{1, 3});
    CHECK(lead.count == 2);
  }
  SUBCASE("temporal suffix on a bare action") {
    PropertyPair p = parse_property_line("go |-> ##[1:7] oa",
                                         "go |-> ##[1:5] a[=2]");
    const Temporal& tm = std::get<Temporal>(p.reliability_spec.elems[0].node);
    CHECK(tm.count == 2);
    REQUIRE(tm.block.elems.size() == 1);
    CHECK(std::get<Step>(tm.block.elems[0].node).window == DelayWindow{1, 5});
  }
  SUBCASE("counts below two are rejected at parse time") {
    ParseResult r = parse_suite(
        "timebase 10 ms\naction a causes oa reliability 0.9\n"
        "property P target 0.5 {\n  correct: go |-> ##1 oa\n"
        "  rely: go |-> ##1 a[~1]\n}\n");
    CHECK(has_errors(r.diagnostics));
  }
}

TEST_CASE("'#' opens a comment, '##' opens a delay") {
  ParseResult r = parse_suite(
      "# leading comment\n"
      "timebase 10 ms  # trailing comment\n"
      "action a causes oa reliability 0.9\n"
      "property P target 0.5 {\n"
      "  correct: go |-> ##1 oa\n"
      "  rely: go |-> ##1 a\n"
      "}\n");
  REQUIRE(r.suite.has_value());
  CHECK(!has_errors(r.diagnostics));
  CHECK(r.suite->timebase_ms == 10);
  CHECK(r.suite->properties.size() == 1);
}

TEST_CASE("recovery resumes at the next declaration") {
  ParseResult r = parse_suite(
      "timebase 10 ms\n"
      "action a causes oa reliability 0.9\n"
      "property Bad target {\n"
      "property P target 0.5 {\n"
      "  correct: go |-> ##1 oa\n"
      "  rely: go |-> ##1 a\n"
      "}\n"
      "scenario s: P\n");
  REQUIRE(r.suite.has_value());
  CHECK(has_errors(r.diagnostics));
  // the malformed property is dropped, everything after it is kept
  REQUIRE(r.suite->properties.size() == 1);
  CHECK(r.suite->properties.front().id == "P");
  CHECK(r.suite->scenarios.size() == 1);
}

TEST_CASE("identical input produces identical AST and diagnostics") {
  const char* ugly =
      "timebase 10 ms\n"
      "action a causes oa reliability 0.9\n"
      "property P target 0.5 {\n"
      "  correct: go |-> ##1 oa\n"
      "  rely: go |-> ##1 a ??\n"
      "}\n";
  ParseResult r1 = parse_suite(ugly);
  ParseResult r2 = parse_suite(ugly);
  CHECK(r1.suite == r2.suite);
  CHECK(r1.diagnostics == r2.diagnostics);
  CHECK(has_errors(r1.diagnostics));
}

TEST_CASE("validation rejects structural misuse") {
  auto diags_of = [](const std::string& text) {
    ParseResult r = parse_suite(text);
    REQUIRE(r.suite.has_value());
    REQUIRE(!has_errors(r.diagnostics));  // syntactically fine, structurally not
    return validate_suite(*r.suite);
  };
  const std::string head =
      "timebase 10 ms\naction a causes oa reliability 0.9\n";
  const std::string good_prop =
      "property P target 0.5 {\n  correct: go |-> ##1 oa\n  rely: go |-> ##1 a\n}\n";

  SUBCASE("duplicate action") {
    auto ds = diags_of(head + "action a causes oa reliability 0.9\n" + good_prop);
    CHECK(has_errors(ds));
  }
  SUBCASE("target out of range") {
    auto ds = diags_of(head +
                       "property P target 1.5 {\n  correct: go |-> ##1 oa\n"
                       "  rely: go |-> ##1 a\n}\n");
    CHECK(has_errors(ds));
  }
  SUBCASE("unknown outcome in the correctness chain") {
    auto ds = diags_of(head +
                       "property P target 0.5 {\n  correct: go |-> ##1 nope\n"
                       "  rely: go |-> ##1 a\n}\n");
    CHECK(has_errors(ds));
  }
  SUBCASE("unknown action in the reliability specification") {
    auto ds = diags_of(head +
                       "property P target 0.5 {\n  correct: go |-> ##1 oa\n"
                       "  rely: go |-> ##1 zz\n}\n");
    CHECK(has_errors(ds));
  }
  SUBCASE("unbounded window outside an antecedent") {
    auto ds = diags_of(head +
                       "property P target 0.5 {\n  correct: go |-> ##[1:$] oa\n"
                       "  rely: go |-> ##1 a\n}\n");
    CHECK(has_errors(ds));
  }
  SUBCASE("correctness outcome no used action causes") {
    auto ds = diags_of(head + "action b causes ob reliability 0.9\n" +
                       "property P target 0.5 {\n"
                       "  correct: go |-> ##1 oa ##1 ob\n"
                       "  rely: go |-> ##1 a\n}\n");
    CHECK(has_errors(ds));
  }
  SUBCASE("nested temporal blocks") {
    auto ds = diags_of(head +
                       "property P target 0.5 {\n  correct: go |-> ##[1:9] oa\n"
                       "  rely: go |-> ##1 (a[=2])[=2]\n}\n");
    CHECK(has_errors(ds));
  }
  SUBCASE("scenario over an unknown property") {
    auto ds = diags_of(head + good_prop + "scenario s: Q\n");
    CHECK(has_errors(ds));
  }
  SUBCASE("scenario firing one property twice") {
    auto ds = diags_of(head + good_prop + "scenario s: P, P@2\n");
    CHECK(has_errors(ds));
  }
  SUBCASE("unused action only warns") {
    auto ds = diags_of(head + "action b causes ob reliability 0.9\n" + good_prop);
    CHECK(!has_errors(ds));
    CHECK(ds.size() == 1);
    CHECK(ds.front().severity == Severity::warning);
  }
  SUBCASE("the good property is clean") {
    auto ds = diags_of(head + good_prop);
    CHECK(ds.empty());
  }
}

TEST_CASE("shipped suites parse and validate clean") {
  SUBCASE("two-property cruise-control suite") {
    SpecSuite s = testutil::load_suite("acc.spec");
    CHECK(s.timebase_ms == 50);
    CHECK(s.actions.size() == 2);
    REQUIRE(s.properties.size() == 2);
    CHECK(s.properties[0].id == "ACC_R1");
    CHECK(s.properties[1].id == "ACC_R2");
    CHECK(s.properties[0].target == doctest::Approx(0.95));
    CHECK(s.properties[1].target == doctest::Approx(0.98));
    REQUIRE(s.scenarios.size() == 1);
    CHECK(s.scenarios[0].firings.size() == 2);
  }
  SUBCASE("fifteen-property navigation suite") {
    SpecSuite s = testutil::load_suite("ngc.spec");
    CHECK(s.timebase_ms == 20);
    CHECK(s.actions.size() == 12);
    CHECK(s.properties.size() == 15);
    REQUIRE(s.scenarios.size() == 3);
    CHECK(s.scenarios[0].id == "simultaneous");
    CHECK(s.scenarios[0].firings.size() == 15);
    CHECK(s.scenarios[1].id == "temporary_failure");
    CHECK(s.scenarios[1].firings.size() == 7);
    CHECK(s.scenarios[2].id == "permanent_failure");
    CHECK(s.scenarios[2].firings.size() == 8);
    CHECK(s.action_reliability("act1") == doctest::Approx(0.985));
    CHECK(s.action_reliability("act12") == doctest::Approx(0.996));
    // the two-event antecedent keeps its unbounded gap
    const PropertyPair* r9 = s.find_property("NGCS_R9");
    REQUIRE(r9);
    REQUIRE(r9->correct_trigger.elems.size() == 2);
    CHECK(std::get<Step>(r9->correct_trigger.elems[1].node).window.unbounded());
  }
}
