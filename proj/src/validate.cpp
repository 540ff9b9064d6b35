// ============================================================================
//  validate.cpp — structural checks on accepted suites
// ============================================================================
#include <set>

#include "relspec/parser.hpp"

namespace relspec {

std::string to_text(const Diagnostic& d) {
  std::string out;
  if (d.line > 0) out += std::to_string(d.line) + ":" + std::to_string(d.col) + ": ";
  out += d.severity == Severity::error ? "error: " : "warning: ";
  out += d.message;
  if (!d.subject.empty()) out += " [" + d.subject + "]";
  return out;
}

bool has_errors(const std::vector<Diagnostic>& ds) {
  for (const auto& d : ds)
    if (d.severity == Severity::error) return true;
  return false;
}

namespace {

struct Checker {
  const SpecSuite& suite;
  std::vector<Diagnostic> diags;

  void err(const std::string& subject, const std::string& msg, int line = 0) {
    diags.push_back({Severity::error, line, 0, subject, msg});
  }
  void warn(const std::string& subject, const std::string& msg) {
    diags.push_back({Severity::warning, 0, 0, subject, msg});
  }

  void check_window(const PropertyPair& p, const DelayWindow& w,
                    bool antecedent) {
    if (w.lo < 0) err(p.id, "window lower bound must be >= 0", p.line);
    if (w.unbounded()) {
      if (!antecedent)
        err(p.id, "unbounded window '$' is only permitted in an antecedent",
            p.line);
    } else if (w.hi < w.lo) {
      err(p.id, "window upper bound below lower bound", p.line);
    }
  }

  // antecedent: plain steps over sensed events, '$' allowed
  void check_trigger(const PropertyPair& p, const Chain& chain) {
    for (const auto& el : chain.elems) {
      const Step* s = std::get_if<Step>(&el.node);
      if (!s) {
        err(p.id, "antecedents must be plain event sequences", p.line);
        continue;
      }
      check_window(p, s->window, /*antecedent=*/true);
    }
  }

  // correctness: linear chain of outcome steps, bounded windows
  void check_correctness(const PropertyPair& p) {
    if (p.correctness.elems.empty()) {
      err(p.id, "empty correctness chain", p.line);
      return;
    }
    for (const auto& el : p.correctness.elems) {
      const Step* s = std::get_if<Step>(&el.node);
      if (!s) {
        err(p.id, "correctness chains take no redundancy annotations", p.line);
        continue;
      }
      check_window(p, s->window, false);
      if (!suite.find_outcome(s->event))
        err(p.id, "unknown outcome '" + s->event + "' in correctness chain",
            p.line);
    }
  }

  void check_rely_element(const PropertyPair& p, const Element& el,
                          bool inside_temporal) {
    if (const auto* s = std::get_if<Step>(&el.node)) {
      check_window(p, s->window, false);
      check_action_ref(p, s->event);
    } else if (const auto* sp = std::get_if<Spatial>(&el.node)) {
      check_window(p, sp->step.window, false);
      check_action_ref(p, sp->step.event);
      if (sp->count < 2) err(p.id, "spatial redundancy count must be >= 2", p.line);
    } else if (const auto* co = std::get_if<Consec>(&el.node)) {
      check_window(p, co->step.window, false);
      check_action_ref(p, co->step.event);
      if (co->count < 2)
        err(p.id, "consecutive redundancy count must be >= 2", p.line);
    } else {
      const auto& tm = std::get<Temporal>(el.node);
      if (inside_temporal)
        err(p.id, "temporal blocks cannot be nested", p.line);
      if (tm.count < 2) err(p.id, "temporal redundancy count must be >= 2", p.line);
      if (tm.block.elems.empty()) {
        err(p.id, "empty temporal block", p.line);
        return;
      }
      for (const auto& inner : tm.block.elems)
        check_rely_element(p, inner, /*inside_temporal=*/true);
    }
  }

  void check_action_ref(const PropertyPair& p, const std::string& name) {
    if (!suite.find_action(name))
      err(p.id, "unknown action '" + name + "' in reliability specification",
          p.line);
  }

  // every correctness outcome must be reachable through some action that the
  // reliability specification actually uses
  void check_outcome_coverage(const PropertyPair& p) {
    std::set<std::string> rely_outcomes;
    collect_outcomes(p.reliability_spec, rely_outcomes);
    for (const auto& el : p.correctness.elems) {
      const Step* s = std::get_if<Step>(&el.node);
      if (!s || !suite.find_outcome(s->event)) continue;
      if (!rely_outcomes.count(s->event))
        err(p.id,
            "correctness outcome '" + s->event +
                "' is not caused by any action in the reliability specification",
            p.line);
    }
  }

  void collect_outcomes(const Chain& chain, std::set<std::string>& out) {
    for (const auto& el : chain.elems) {
      const Step* s = nullptr;
      if (const auto* st = std::get_if<Step>(&el.node)) s = st;
      if (const auto* sp = std::get_if<Spatial>(&el.node)) s = &sp->step;
      if (const auto* co = std::get_if<Consec>(&el.node)) s = &co->step;
      if (const auto* tm = std::get_if<Temporal>(&el.node)) {
        collect_outcomes(tm->block, out);
        continue;
      }
      if (const ActionDef* a = s ? suite.find_action(s->event) : nullptr)
        out.insert(a->outcome);
    }
  }

  std::vector<Diagnostic> run() {
    if (suite.timebase_ms <= 0)
      err("", "missing or non-positive timebase declaration");
    if (suite.properties.empty()) err("", "a suite needs at least one property");

    std::set<std::string> names;
    for (const auto& a : suite.actions)
      if (!names.insert(a.name).second)
        err(a.name, "action declared more than once");
    for (const auto& o : suite.outcomes) {
      if (!names.insert(o.name).second)
        err(o.name, "outcome name collides with another declaration");
      if (!(o.reliability > 0.0 && o.reliability <= 1.0))
        err(o.name, "reliability must lie in (0, 1]");
    }

    std::set<std::string> prop_ids;
    for (const auto& p : suite.properties) {
      if (!prop_ids.insert(p.id).second)
        err(p.id, "property declared more than once", p.line);
      if (!(p.target > 0.0 && p.target < 1.0))
        err(p.id, "target must lie in (0, 1)", p.line);
      check_trigger(p, p.correct_trigger);
      check_trigger(p, p.trigger);
      check_correctness(p);
      if (p.reliability_spec.elems.empty()) {
        err(p.id, "empty reliability specification", p.line);
      } else {
        for (const auto& el : p.reliability_spec.elems)
          check_rely_element(p, el, false);
        check_outcome_coverage(p);
      }
    }

    std::set<std::string> scen_ids;
    for (const auto& s : suite.scenarios) {
      if (!scen_ids.insert(s.id).second)
        err(s.id, "scenario declared more than once");
      std::set<std::string> fired;
      for (const auto& [prop, anchor] : s.firings) {
        if (!suite.find_property(prop))
          err(s.id, "scenario fires unknown property '" + prop + "'");
        if (!fired.insert(prop).second)
          err(s.id, "scenario fires property '" + prop + "' more than once");
        if (anchor < 0) err(s.id, "anchor cycles must be >= 0");
      }
    }

    // unreferenced declarations are suspicious but not fatal
    std::set<std::string> used;
    for (const auto& p : suite.properties) collect_actions(p.reliability_spec, used);
    for (const auto& a : suite.actions)
      if (!used.count(a.name))
        warn(a.name, "action is never used by a reliability specification");
    return std::move(diags);
  }

  void collect_actions(const Chain& chain, std::set<std::string>& out) {
    for (const auto& el : chain.elems) {
      if (const auto* st = std::get_if<Step>(&el.node)) out.insert(st->event);
      if (const auto* sp = std::get_if<Spatial>(&el.node)) out.insert(sp->step.event);
      if (const auto* co = std::get_if<Consec>(&el.node)) out.insert(co->step.event);
      if (const auto* tm = std::get_if<Temporal>(&el.node))
        collect_actions(tm->block, out);
    }
  }
};

}  // namespace

std::vector<Diagnostic> validate_suite(const SpecSuite& suite) {
  Checker checker{suite, {}};
  return checker.run();
}

}  // namespace relspec
