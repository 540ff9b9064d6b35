// ============================================================================
//  instances.hpp
//
//  Flattening a reliability specification into its action-instance table.
//  Each row is one physical execution of an action, carrying a time prefix
//  <lo, hi> relative to the row it links to (or to the anchor for the root):
//
//    * a plain step keeps its declared window and links to the previous row;
//    * spatial replicas 2..n carry <0,0> and link to the first replica;
//    * consecutive executions 2..k carry <1,1> and link to their predecessor;
//    * the first action of temporal re-execution i carries <1, DELTA(i)> and
//      links to the first action of re-execution i-1; the remaining actions
//      of a re-execution repeat their declared windows.
//
//  DELTA(i) stays symbolic until admissibility bounds resolve it.
// ============================================================================
#pragma once

#include <string>
#include <vector>

#include "relspec/ast.hpp"

namespace relspec {

// Timing variable identity: tau_{property index, row index}, both 1-based.
struct VarRef {
  int prop = 0;
  int row = 0;
  auto operator<=>(const VarRef&) const = default;
};

struct TimePrefix {
  int lo = 0;
  int hi = 0;
  int delta = 0;  // >0: upper bound is the symbol DELTA(delta), `hi` unused

  bool symbolic() const { return delta > 0; }
  bool operator==(const TimePrefix&) const = default;
};

struct ActionInstance {
  int row = 0;  // 1-based position in the table
  std::string action;
  TimePrefix prefix;
  int spatial_factor = 1;  // replica index; 1 for non-replicated instances
  int link = 0;            // row this prefix is relative to; 0 = anchor
  int replica_root = 0;    // first replica of this instance's spatial set
  int reexec = 0;          // 0 = first execution; i = i-th re-execution

  bool operator==(const ActionInstance&) const = default;
};

struct InstanceTable {
  std::string property_id;
  int property_index = 0;  // 1-based position of the property in the suite
  std::vector<ActionInstance> rows;
  int delta_count = 0;  // number of DELTA symbols used by the prefixes

  const ActionInstance& at(int row) const { return rows[size_t(row - 1)]; }
  VarRef var(int row) const { return {property_index, row}; }
};

// Builds the instance table for the property's reliability specification.
// Stable: identical input yields identical rows and variable numbering.
InstanceTable flatten(const SpecSuite& suite, const PropertyPair& prop);

// Human-readable row rendering, e.g. "tau_2_4: act1 <1,DELTA(1)> sf=1 -> tau_2_1".
std::string to_text(const InstanceTable& table);

}  // namespace relspec
