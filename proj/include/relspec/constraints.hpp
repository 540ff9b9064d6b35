// ============================================================================
//  constraints.hpp — timing/grouping/resource constraint model for scheduling
// ============================================================================
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "relspec/ast.hpp"
#include "relspec/instances.hpp"
#include "relspec/reliability.hpp"
#include "relspec/strategy.hpp"

namespace relspec {

// lo <= var - base <= hi; absolute bounds when base is absent.
struct TimingConstraint {
  VarRef var;
  std::optional<VarRef> base;
  int lo = 0;
  int hi = 0;
};

// One scheduling variable: absolute domain [lo, hi].
struct VarInfo {
  VarRef var;
  std::string action;
  int spatial_factor = 1;
  int lo = 1;
  int hi = 1;
};

// All instances of one action sharing a replica index, across fired
// properties. Members from the same firing form one sub-group.
struct Group {
  std::string action;
  int spatial_factor = 1;
  std::vector<VarRef> members;
};

// One fired property: its instance table, anchor cycle, admissibility data.
struct FiredProperty {
  int firing = 0;          // ordinal within the scenario
  int property_index = 0;  // declaration index; the `prop` of its VarRefs
  std::string property_id;
  int anchor = 0;
  InstanceTable table;
  int horizon = 0;                  // latest admissible cycle for any instance
  std::vector<Strategy> admissible; // every admissible strategy, label order
  std::vector<std::string> labels;  // option labels aligned with admissible
};

struct ConstraintSet {
  std::vector<FiredProperty> properties;
  std::vector<VarInfo> variables;  // ordered by (firing, row)
  std::vector<TimingConstraint> timing;
  std::vector<Group> groups;  // action declaration order, replica ascending
  int gamma = 1;
  int horizon = 0;  // max per-property horizon

  // Inadmissible exact cycle tuples, blocked during search (per firing).
  std::vector<std::set<std::vector<int>>> blocked;

  int var_index(VarRef v) const;  // flat index into variables/assignments
};

// Builds the full constraint set for a scenario: timing rows from the
// instance tables, root-domain tightening to the admissible envelope,
// per-property horizon caps, cross-property groups, resource limit gamma.
// Throws Errc::no_admissible_strategy when a fired property has none.
ConstraintSet build_constraints(const SpecSuite& suite,
                                const Scenario& scenario, int gamma);

// Per-cycle processor demand of a total assignment (cycles indexed like
// cs.variables): for each action, coincident instances within one firing
// need distinct processors while firings share them. Result covers cycles
// 1..cs.horizon.
std::vector<int> demand_profile(const ConstraintSet& cs,
                                const std::vector<int>& cycles);

// Convenience: demand of explicit per-firing strategies.
std::vector<int> demand_profile(const SpecSuite& suite,
                                const Scenario& scenario,
                                const std::vector<Strategy>& per_firing);

// Secondary demand computation through group/sub-group counting; equals
// demand_profile on every assignment satisfying the timing constraints.
std::vector<int> eq3_demand_profile(const ConstraintSet& cs,
                                    const std::vector<int>& cycles);

std::string to_text(const ConstraintSet& cs);

}  // namespace relspec
