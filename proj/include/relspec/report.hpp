// ============================================================================
//  report.hpp — human- and machine-readable rendering of analysis results
// ============================================================================
#pragma once

#include <string>
#include <vector>

#include "relspec/planner.hpp"
#include "relspec/reliability.hpp"

namespace relspec {

struct RenderOptions {
  bool color = false;  // ANSI highlighting of the admissible column
};

// Strategy table of one property: option label, cycle-wise action columns
// spanning [1, horizon], way count, rounded reliability, admissible flag.
std::string render_property_table(const SpecSuite& suite,
                                  const PropertyAnalysis& analysis,
                                  const RenderOptions& opts = {});

// Schedule table: chosen option per property, cycle-wise allocation with
// the demand row, bisection trace, gamma_star.
std::string render_schedule(const Schedule& sched,
                            const RenderOptions& opts = {});

// Full analysis: suite digest, every fired property's table, the schedule.
std::string render_analysis(const SpecSuite& suite,
                            const std::string& scenario_id,
                            const std::vector<PropertyAnalysis>& properties,
                            const Schedule& sched,
                            const RenderOptions& opts = {});

// Machine-readable mirrors; values match the rendered tables exactly
// (reliabilities are the same 4-decimal roundings).
std::string analysis_json(const SpecSuite& suite,
                          const std::string& scenario_id,
                          const std::vector<PropertyAnalysis>& properties,
                          const Schedule* sched);
std::string strategies_json(const SpecSuite& suite,
                            const PropertyAnalysis& analysis);

}  // namespace relspec
