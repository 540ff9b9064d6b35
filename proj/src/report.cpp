// ============================================================================
//  report.cpp — table layout and JSON mirrors
// ============================================================================
#include "relspec/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace relspec {

namespace {

constexpr const char* kGreen = "\x1b[32m";
constexpr const char* kRed = "\x1b[31m";
constexpr const char* kReset = "\x1b[0m";

// column-aligned rendering; first row is the header
std::string layout(const std::vector<std::vector<std::string>>& rows,
                   const std::vector<std::string>& raw_last_col = {}) {
  std::vector<size_t> width;
  for (const auto& row : rows)
    for (size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.resize(c + 1, 0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::ostringstream out;
  for (size_t r = 0; r < rows.size(); ++r) {
    for (size_t c = 0; c < rows[r].size(); ++c) {
      std::string cell = rows[r][c];
      cell.resize(width[c], ' ');
      // the last column may carry ANSI codes appended after padding
      if (r > 0 && c + 1 == rows[r].size() && r - 1 < raw_last_col.size() &&
          !raw_last_col[r - 1].empty())
        cell = raw_last_col[r - 1];
      out << cell << (c + 1 == rows[r].size() ? "" : "  ");
    }
    out << "\n";
    if (r == 0) {
      std::string rule;
      for (size_t c = 0; c < width.size(); ++c)
        rule += std::string(width[c], '-') + (c + 1 == width.size() ? "" : "  ");
      out << rule << "\n";
    }
  }
  return out.str();
}

std::vector<std::string> cycle_items(const StrategyReport& report, int t) {
  std::vector<std::string> items;
  for (const MergedInstance& m : report.merged)
    if (m.cycle == t)
      for (size_t k = 0; k < m.rows.size(); ++k) items.push_back(m.action);
  return items;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (size_t i = 0; i < items.size(); ++i)
    out += (i ? "," : "") + items[i];
  return out;
}

int table_horizon(const PropertyAnalysis& analysis) {
  int h = 0;
  for (const StrategyReport& r : analysis.strategies)
    h = std::max(h, r.strategy.last_cycle());
  return h;
}

}  // namespace

std::string render_property_table(const SpecSuite& suite,
                                  const PropertyAnalysis& analysis,
                                  const RenderOptions& opts) {
  const PropertyPair* prop = suite.find_property(analysis.property_id);
  const int horizon = table_horizon(analysis);

  std::ostringstream head;
  head << "Property " << analysis.property_id;
  if (prop) head << "  (target " << format_reliability(prop->target) << ")";
  head << "\n";

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"Option"};
  for (int t = 1; t <= horizon; ++t) header.push_back("cycle " + std::to_string(t));
  header.insert(header.end(), {"Ways", "Reliability", "Admissible"});
  rows.push_back(std::move(header));

  std::vector<std::string> colored;
  for (const StrategyReport& r : analysis.strategies) {
    std::vector<std::string> row{r.label};
    for (int t = 1; t <= horizon; ++t) row.push_back(join(cycle_items(r, t)));
    row.push_back(std::to_string(r.way_count));
    row.push_back(format_reliability(r.reliability));
    const std::string flag = r.admissible ? "yes" : "no";
    row.push_back(flag);
    colored.push_back(opts.color ? std::string(r.admissible ? kGreen : kRed) +
                                       flag + kReset
                                 : "");
    rows.push_back(std::move(row));
  }
  return head.str() + layout(rows, colored);
}

std::string render_schedule(const Schedule& sched, const RenderOptions& opts) {
  (void)opts;
  std::ostringstream out;
  for (const ScheduledProperty& p : sched.properties) {
    out << p.property_id << ": option " << (p.option.empty() ? "?" : p.option)
        << "  reliability " << format_reliability(p.reliability);
    if (p.anchor != 0) out << "  (anchor " << p.anchor << ")";
    out << "\n";
  }

  std::vector<std::vector<std::string>> rows;
  rows.push_back({"Cycle", "Allocation", "Demand"});
  for (size_t t = 0; t < sched.demand.size(); ++t)
    rows.push_back({std::to_string(t + 1), join(sched.allocation[t]),
                    std::to_string(sched.demand[t])});
  out << layout(rows);

  if (!sched.probes.empty()) {
    out << "bisection:";
    for (const auto& [g, sat] : sched.probes)
      out << " " << g << (sat ? ":sat" : ":unsat");
    out << "\n";
  }
  out << "gamma_star = " << sched.gamma_star << "\n";
  return out.str();
}

std::string render_analysis(const SpecSuite& suite,
                            const std::string& scenario_id,
                            const std::vector<PropertyAnalysis>& properties,
                            const Schedule& sched, const RenderOptions& opts) {
  std::ostringstream out;
  out << "suite " << suite_digest(suite) << "  scenario " << scenario_id
      << "\n\n";
  for (const PropertyAnalysis& p : properties)
    out << render_property_table(suite, p, opts) << "\n";
  out << render_schedule(sched, opts);
  return out.str();
}

namespace {

nlohmann::json property_json(const SpecSuite& suite,
                             const PropertyAnalysis& analysis) {
  const PropertyPair* prop = suite.find_property(analysis.property_id);
  nlohmann::json strategies = nlohmann::json::array();
  const int horizon = table_horizon(analysis);
  for (const StrategyReport& r : analysis.strategies) {
    nlohmann::json cycles = nlohmann::json::array();
    for (int t = 1; t <= horizon; ++t) cycles.push_back(cycle_items(r, t));
    strategies.push_back({{"option", r.label},
                          {"cycles", std::move(cycles)},
                          {"assignment", r.strategy.cycles},
                          {"ways", r.way_count},
                          {"reliability", round_reliability(r.reliability)},
                          {"admissible", r.admissible}});
  }
  return {{"id", analysis.property_id},
          {"index", analysis.property_index},
          {"target", prop ? round_reliability(prop->target) : 0.0},
          {"strategies", std::move(strategies)}};
}

nlohmann::json schedule_json(const Schedule& sched) {
  nlohmann::json props = nlohmann::json::array();
  for (const ScheduledProperty& p : sched.properties)
    props.push_back({{"id", p.property_id},
                     {"anchor", p.anchor},
                     {"option", p.option},
                     {"assignment", p.strategy.cycles},
                     {"reliability", round_reliability(p.reliability)}});
  nlohmann::json probes = nlohmann::json::array();
  for (const auto& [g, sat] : sched.probes)
    probes.push_back({{"gamma", g}, {"sat", sat}});
  return {{"gamma_star", sched.gamma_star},
          {"properties", std::move(props)},
          {"allocation", sched.allocation},
          {"demand", sched.demand},
          {"probes", std::move(probes)}};
}

}  // namespace

std::string analysis_json(const SpecSuite& suite,
                          const std::string& scenario_id,
                          const std::vector<PropertyAnalysis>& properties,
                          const Schedule* sched) {
  nlohmann::json props = nlohmann::json::array();
  for (const PropertyAnalysis& p : properties)
    props.push_back(property_json(suite, p));
  nlohmann::json doc = {{"suite", suite_digest(suite)},
                        {"scenario", scenario_id},
                        {"properties", std::move(props)}};
  if (sched) doc["schedule"] = schedule_json(*sched);
  return doc.dump(2) + "\n";
}

std::string strategies_json(const SpecSuite& suite,
                            const PropertyAnalysis& analysis) {
  nlohmann::json doc = {{"suite", suite_digest(suite)},
                        {"property", property_json(suite, analysis)}};
  return doc.dump(2) + "\n";
}

}  // namespace relspec
