// ============================================================================
//  helpers.hpp — shared test fixtures: suite loading, naive demand oracle
// ============================================================================
#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "relspec/parser.hpp"

namespace testutil {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "cannot open ", path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Parses and validates; any error diagnostic fails the enclosing test.
inline relspec::SpecSuite parse_strict(std::string_view text) {
  relspec::ParseResult r = relspec::parse_suite(text);
  REQUIRE(r.suite.has_value());
  for (const auto& d : r.diagnostics) INFO(relspec::to_text(d));
  REQUIRE(!relspec::has_errors(r.diagnostics));
  const auto vd = relspec::validate_suite(*r.suite);
  for (const auto& d : vd) INFO(relspec::to_text(d));
  REQUIRE(!relspec::has_errors(vd));
  return *r.suite;
}

inline relspec::SpecSuite load_suite(const std::string& name) {
  return parse_strict(read_file(std::string(RELSPEC_SPEC_DIR) + "/" + name));
}

// Reference demand computation, written against the definition rather than
// the library: per cycle and action, firings share processors (max) while
// coincident instances within one firing need their own (count).
inline std::vector<int> naive_demand(
    const std::vector<std::tuple<int, std::string, int>>& placed,  // (firing, action, cycle)
    int horizon) {
  std::vector<int> demand(size_t(horizon), 0);
  for (int t = 1; t <= horizon; ++t) {
    std::map<std::string, std::map<int, int>> per_action;  // action -> firing -> n
    for (const auto& [f, a, c] : placed)
      if (c == t) per_action[a][f] += 1;
    int total = 0;
    for (const auto& [a, firings] : per_action) {
      int peak = 0;
      for (const auto& [f, n] : firings) peak = std::max(peak, n);
      total += peak;
    }
    demand[size_t(t - 1)] = total;
  }
  return demand;
}

}  // namespace testutil
