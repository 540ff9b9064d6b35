// ============================================================================
//  test_smtlib.cpp — SMT-LIB2 export: structure, stability, model agreement
// ============================================================================
#include <algorithm>
#include <map>

#include "doctest.h"
#include "helpers.hpp"
#include "relspec/smtlib.hpp"
#include "relspec/solver.hpp"
#include "smt_eval.hpp"

using namespace relspec;

namespace {

std::map<std::string, long> environment(const ConstraintSet& cs,
                                        const std::vector<int>& cycles) {
  std::map<std::string, long> env{{"gamma", cs.gamma}};
  for (size_t i = 0; i < cs.variables.size(); ++i)
    env["tau_" + std::to_string(cs.variables[i].var.prop) + "_" +
        std::to_string(cs.variables[i].var.row)] = cycles[i];
  return env;
}

// Every document model lies inside the variable domain box (the document
// asserts those very bounds), so scanning the box decides satisfiability.
bool box_sat(const ConstraintSet& cs, const smteval::Document& doc) {
  const size_t n = cs.variables.size();
  std::vector<int> cycles(n);
  for (size_t i = 0; i < n; ++i) cycles[i] = cs.variables[i].lo;
  for (;;) {
    if (smteval::satisfied(doc, environment(cs, cycles))) return true;
    size_t i = n;
    while (true) {
      if (i == 0) return false;
      --i;
      if (cycles[i] < cs.variables[i].hi) {
        cycles[i] += 1;
        for (size_t j = i + 1; j < n; ++j) cycles[j] = cs.variables[j].lo;
        break;
      }
    }
  }
}

int paren_balance(const std::string& text) {
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
  }
  return depth;
}

}  // namespace

TEST_CASE("document structure and byte stability") {
  SpecSuite acc = testutil::load_suite("acc.spec");
  ConstraintSet cs = build_constraints(acc, *acc.find_scenario("all"), 2);
  const std::string text = export_smtlib(cs);

  const std::string header =
      "(set-logic QF_LIA)\n"
      "(define-fun imax ((a Int) (b Int)) Int (ite (>= a b) a b))\n"
      "(declare-const gamma Int)\n"
      "(assert (= gamma 2))\n"
      "(declare-const tau_1_1 Int)\n";
  CHECK(text.rfind(header, 0) == 0);
  CHECK(text.find("(assert (and (>= tau_1_1 1) (<= tau_1_1 2)))\n") !=
        std::string::npos);
  CHECK(text.find("(assert (and (>= (- tau_2_4 tau_2_1) 1) "
                  "(<= (- tau_2_4 tau_2_1) 2)))\n") != std::string::npos);
  CHECK(text.find("(assert (<= tau_1_4 4))\n") != std::string::npos);
  CHECK(text.find("(assert (<= tau_2_6 5))\n") != std::string::npos);
  CHECK(text.find("(define-fun dem_t2_act1 () Int (imax ") !=
        std::string::npos);
  for (int t = 1; t <= 5; ++t)
    CHECK(text.find("(assert (<= (+ dem_t" + std::to_string(t) +
                    "_act1 dem_t" + std::to_string(t) + "_act2) gamma))\n") !=
          std::string::npos);
  CHECK(text.size() >= 24);
  CHECK(text.substr(text.size() - 24) == "(check-sat)\n(get-model)\n");
  CHECK(paren_balance(text) == 0);

  // independent rebuild renders byte-identically
  ConstraintSet again = build_constraints(acc, *acc.find_scenario("all"), 2);
  CHECK(export_smtlib(again) == text);

  const smteval::Document doc = smteval::load_document(text);
  CHECK(doc.consts.size() == 11);  // gamma + ten timing variables
  CHECK(doc.has_check_sat);
}

TEST_CASE("an empty constraint set exports only the trailer") {
  CHECK(export_smtlib(ConstraintSet{}) ==
        "(set-logic QF_LIA)\n(check-sat)\n(get-model)\n");
}

TEST_CASE("the reference evaluator understands the emitted operators") {
  const smteval::Document doc = smteval::load_document(
      "(assert (= (imax 2 5) 5))\n"
      "(assert (= (+ 1 2 3) 6))\n"
      "(assert (= (- 7 2) 5))\n"
      "(assert (= (ite (< 1 2) 10 20) 10))\n"
      "(assert (not (= 1 2)))\n"
      "(check-sat)\n");
  CHECK(smteval::satisfied(doc, {}));
}

TEST_CASE("solver witnesses satisfy the document, others violate it") {
  SpecSuite acc = testutil::load_suite("acc.spec");
  ConstraintSet cs = build_constraints(acc, *acc.find_scenario("all"), 2);
  const smteval::Document doc = smteval::load_document(export_smtlib(cs));

  SolveOptions canon;
  canon.fixed_order = true;
  const SolveResult r = solve_feasible(cs, canon);
  REQUIRE(r.feasible);
  CHECK(smteval::satisfied(doc, environment(cs, r.cycles)));

  std::vector<int> window_breaker = r.cycles;
  window_breaker[0] = 7;
  CHECK_FALSE(smteval::satisfied(doc, environment(cs, window_breaker)));

  // demand violation: the clashing admissible pairing needs four processors
  const std::vector<int> clash{1, 1, 2, 2, 1, 2, 3, 2, 3, 4};
  CHECK_FALSE(smteval::satisfied(doc, environment(cs, clash)));
}

TEST_CASE("blocking clauses are exported and bite") {
  SpecSuite acc = testutil::load_suite("acc.spec");
  ConstraintSet cs = build_constraints(acc, *acc.find_scenario("all"), 2);
  SolveOptions canon;
  canon.fixed_order = true;
  const SolveResult witness = solve_feasible(cs, canon);
  REQUIRE(witness.feasible);

  cs.blocked[1].insert({1, 2, 3, 2, 3, 4});
  const std::string text = export_smtlib(cs);
  CHECK(text.find("(assert (not (and (= tau_2_1 1) (= tau_2_2 2) "
                  "(= tau_2_3 3) (= tau_2_4 2) (= tau_2_5 3) "
                  "(= tau_2_6 4))))\n") != std::string::npos);
  const smteval::Document doc = smteval::load_document(text);
  CHECK_FALSE(smteval::satisfied(doc, environment(cs, witness.cycles)));
}

TEST_CASE("document and internal solver agree across resource limits") {
  SpecSuite acc = testutil::load_suite("acc.spec");
  for (int gamma = 1; gamma <= 3; ++gamma) {
    CAPTURE(gamma);
    ConstraintSet cs = build_constraints(acc, *acc.find_scenario("all"), gamma);
    const smteval::Document doc = smteval::load_document(export_smtlib(cs));
    const bool document_sat = box_sat(cs, doc);
    const bool solver_sat = solve_feasible(cs).feasible;
    CHECK(document_sat == solver_sat);
    CHECK(solver_sat == (gamma >= 2));
  }
}
