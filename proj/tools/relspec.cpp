// ============================================================================
//  relspec — analyze reliability-annotated safety specs, plan schedules,
//            export SMT-LIB2, and benchmark the planner.
//
//  Exit codes: 0 success, 1 diagnostics/usage, 2 no admissible strategy,
//              3 I/O failure.
// ============================================================================
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "relspec/bench.hpp"
#include "relspec/errors.hpp"
#include "relspec/parser.hpp"
#include "relspec/planner.hpp"
#include "relspec/report.hpp"
#include "relspec/smtlib.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kDiagnostics = 1;
constexpr int kNoStrategy = 2;
constexpr int kIo = 3;

bool use_color() {
  return isatty(fileno(stdout)) && std::getenv("NO_COLOR") == nullptr;
}

int load_suite(const std::string& path, relspec::SpecSuite& suite) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: file not found: " << path << "\n";
    return kIo;
  }
  std::ostringstream text;
  text << in.rdbuf();

  relspec::ParseResult parsed = relspec::parse_suite(text.str());
  for (const auto& d : parsed.diagnostics)
    std::cerr << path << ":" << relspec::to_text(d) << "\n";
  if (!parsed.suite || relspec::has_errors(parsed.diagnostics))
    return kDiagnostics;

  const auto checks = relspec::validate_suite(*parsed.suite);
  for (const auto& d : checks)
    std::cerr << path << ":" << relspec::to_text(d) << "\n";
  if (relspec::has_errors(checks)) return kDiagnostics;

  suite = std::move(*parsed.suite);
  return kOk;
}

// --scenario if given; otherwise the suite's single scenario
int resolve_scenario(const relspec::SpecSuite& suite, const std::string& flag,
                     relspec::Scenario& out) {
  if (!flag.empty()) {
    const relspec::Scenario* s = suite.find_scenario(flag);
    if (!s) {
      std::cerr << "error: unknown scenario: " << flag << "\n";
      return kDiagnostics;
    }
    out = *s;
    return kOk;
  }
  if (suite.scenarios.size() == 1) {
    out = suite.scenarios.front();
    return kOk;
  }
  std::cerr << "error: suite defines " << suite.scenarios.size()
            << " scenarios; pick one with --scenario\n";
  return kDiagnostics;
}

int parse_range(const std::string& text, int& lo, int& hi) {
  try {
    const size_t dots = text.find("..");
    if (dots == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, dots));
      hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    std::cerr << "error: malformed range: " << text << " (expected A or A..B)\n";
    return kDiagnostics;
  }
  return kOk;
}

int guard(const std::function<int()>& body) {
  try {
    return body();
  } catch (const relspec::Error& e) {
    if (e.code == relspec::Errc::no_admissible_strategy) {
      std::cerr << "NO_ADMISSIBLE_STRATEGY: " << e.subject << "\n";
      return kNoStrategy;
    }
    std::cerr << "error: " << e.what() << "\n";
    return kDiagnostics;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDiagnostics;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reliability/redundancy planner for timed safety specs"};
  app.require_subcommand(1);

  std::string file, scenario_flag, property_id, out_path;
  std::string spatial_range = "1", temporal_range = "1";
  bool json = false;
  int gamma = 1;
  relspec::BenchSpec bench;

  CLI::App* analyze = app.add_subcommand("analyze", "full suite analysis");
  analyze->add_option("file", file)->required();
  analyze->add_option("--scenario", scenario_flag);
  analyze->add_flag("--json", json);

  CLI::App* strategies =
      app.add_subcommand("strategies", "strategy table of one property");
  strategies->add_option("file", file)->required();
  strategies->add_option("--property", property_id)->required();
  strategies->add_flag("--json", json);

  CLI::App* minres =
      app.add_subcommand("min-resources", "minimal processor count");
  minres->add_option("file", file)->required();
  minres->add_option("--scenario", scenario_flag);

  CLI::App* exportsmt =
      app.add_subcommand("export-smt", "write the SMT-LIB2 encoding");
  exportsmt->add_option("file", file)->required();
  exportsmt->add_option("--gamma", gamma)->required();
  exportsmt->add_option("--scenario", scenario_flag);
  exportsmt->add_option("--out", out_path)->required();

  CLI::App* benchcmd = app.add_subcommand("bench", "scalability harness");
  benchcmd->add_option("--properties", bench.properties)->required();
  benchcmd->add_option("--actions", bench.actions_per_property)->required();
  benchcmd->add_option("--depth", bench.depth)->required();
  benchcmd->add_option("--spatial", spatial_range);
  benchcmd->add_option("--temporal", temporal_range);
  benchcmd->add_option("--seed", bench.seed)->required();
  benchcmd->add_option("--reps", bench.reps);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kDiagnostics;
  }

  relspec::RenderOptions render;
  render.color = use_color();

  if (analyze->parsed() || minres->parsed() || exportsmt->parsed()) {
    relspec::SpecSuite suite;
    if (int rc = load_suite(file, suite); rc != kOk) return rc;
    relspec::Scenario scen;
    if (int rc = resolve_scenario(suite, scenario_flag, scen); rc != kOk)
      return rc;

    if (exportsmt->parsed()) {
      if (gamma < 1) {
        std::cerr << "error: gamma must be >= 1\n";
        return kDiagnostics;
      }
      return guard([&] {
        const relspec::ConstraintSet cs =
            relspec::build_constraints(suite, scen, gamma);
        std::ofstream out(out_path);
        if (!out) {
          std::cerr << "error: cannot write " << out_path << "\n";
          return kIo;
        }
        out << relspec::export_smtlib(cs);
        if (!out.good()) {
          std::cerr << "error: short write to " << out_path << "\n";
          return kIo;
        }
        std::cout << out_path << "\n";
        return kOk;
      });
    }

    return guard([&] {
      const relspec::Schedule sched = relspec::min_resources(suite, scen);
      if (minres->parsed()) {
        std::cout << relspec::render_schedule(sched, render);
        return kOk;
      }
      std::vector<relspec::PropertyAnalysis> tables;
      for (const auto& [prop_id, anchor] : scen.firings)
        tables.push_back(relspec::admissible_strategies(
            suite, *suite.find_property(prop_id), anchor));
      if (json)
        std::cout << relspec::analysis_json(suite, scen.id, tables, &sched);
      else
        std::cout << relspec::render_analysis(suite, scen.id, tables, sched,
                                              render);
      return kOk;
    });
  }

  if (strategies->parsed()) {
    relspec::SpecSuite suite;
    if (int rc = load_suite(file, suite); rc != kOk) return rc;
    const relspec::PropertyPair* prop = suite.find_property(property_id);
    if (!prop) {
      std::cerr << "error: unknown property: " << property_id << "\n";
      return kDiagnostics;
    }
    return guard([&] {
      const relspec::PropertyAnalysis analysis =
          relspec::admissible_strategies(suite, *prop);
      if (json)
        std::cout << relspec::strategies_json(suite, analysis);
      else
        std::cout << relspec::render_property_table(suite, analysis, render);
      return kOk;
    });
  }

  // bench
  if (int rc = parse_range(spatial_range, bench.spatial_lo, bench.spatial_hi);
      rc != kOk)
    return rc;
  if (int rc = parse_range(temporal_range, bench.temporal_lo, bench.temporal_hi);
      rc != kOk)
    return rc;
  return guard([&] {
    std::cout << relspec::bench_csv(relspec::run_bench(bench));
    return kOk;
  });
}
