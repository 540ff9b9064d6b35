// ============================================================================
//  ast.hpp
//
//  Object model for reliability-annotated safety specifications.
//
//  A suite declares a timebase, actions (each causing one outcome with a
//  known per-execution reliability), properties and scenarios. Each property
//  pairs a correctness requirement (a linear chain of outcome steps with
//  bounded delay windows) with a reliability specification (an action
//  sequence that may carry redundancy annotations):
//
//      act[~n]   n spatially redundant replicas, executed the same cycle
//      act[*k]   k consecutive executions on successive cycles
//      (seq)[=m] the whole block executed m times, each re-execution
//                starting strictly after the previous one
//
//  Delay prefixes use ##N (exactly N cycles) and ##[a:b] (between a and b
//  cycles); ##[a:$] is permitted only in antecedents.
// ============================================================================
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace relspec {

// --------------------------------------------------------------------------
//  Delay windows
// --------------------------------------------------------------------------
struct DelayWindow {
  static constexpr int kUnbounded = -1;

  int lo = 0;
  int hi = 0;  // kUnbounded encodes '$'

  bool unbounded() const { return hi == kUnbounded; }
  bool operator==(const DelayWindow&) const = default;
};

// --------------------------------------------------------------------------
//  Sequence expressions
// --------------------------------------------------------------------------
struct Step {
  std::string event;   // action, outcome or sensed-event name
  DelayWindow window;  // delay from the predecessor (or anchor)

  bool operator==(const Step&) const = default;
};

struct Spatial {  // step executed by `count` replicas in the same cycle
  Step step;
  int count = 2;
  bool operator==(const Spatial&) const = default;
};

struct Consec {  // step executed `count` times on consecutive cycles
  Step step;
  int count = 2;
  bool operator==(const Consec&) const = default;
};

struct Element;

struct Chain {  // ordered sequence; every element carries its own window
  std::vector<Element> elems;
  bool operator==(const Chain&) const;
};

struct Temporal {  // block re-executed `count` times
  Chain block;
  int count = 2;
  bool operator==(const Temporal&) const = default;
};

struct Element {
  std::variant<Step, Spatial, Consec, Temporal> node;
  bool operator==(const Element&) const = default;
};

inline bool Chain::operator==(const Chain& o) const { return elems == o.elems; }

// --------------------------------------------------------------------------
//  Declarations
// --------------------------------------------------------------------------
struct OutcomeDef {
  std::string name;
  double reliability = 0.0;  // probability the outcome holds per execution
  bool operator==(const OutcomeDef&) const = default;
};

struct ActionDef {
  std::string name;
  std::string outcome;  // the single outcome this action causes
  bool operator==(const ActionDef&) const = default;
};

struct PropertyPair {
  std::string id;
  Chain correct_trigger;    // antecedent of the correctness requirement
  Chain correctness;        // outcome steps, windows bounded
  Chain trigger;            // antecedent of the reliability specification
  Chain reliability_spec;   // action sequence with redundancy annotations
  double target = 0.0;      // required satisfaction probability
  int line = 0;             // declaration position, for diagnostics
  // Structural: the diagnostic position does not take part in equality.
  bool operator==(const PropertyPair&) const;
};

inline bool PropertyPair::operator==(const PropertyPair& o) const {
  return id == o.id && correct_trigger == o.correct_trigger &&
         correctness == o.correctness && trigger == o.trigger &&
         reliability_spec == o.reliability_spec && target == o.target;
}

struct Scenario {
  std::string id;
  // Fired properties with their anchor cycles, in declaration order.
  std::vector<std::pair<std::string, int>> firings;
  bool operator==(const Scenario&) const = default;
};

struct SpecSuite {
  int timebase_ms = 0;
  std::vector<OutcomeDef> outcomes;   // declaration order
  std::vector<ActionDef> actions;     // declaration order
  std::vector<PropertyPair> properties;
  std::vector<Scenario> scenarios;

  const ActionDef* find_action(const std::string& name) const;
  const OutcomeDef* find_outcome(const std::string& name) const;
  const PropertyPair* find_property(const std::string& id) const;
  const Scenario* find_scenario(const std::string& id) const;
  // Reliability of the outcome caused by `action`.
  double action_reliability(const std::string& action) const;

  bool operator==(const SpecSuite&) const = default;
};

// --------------------------------------------------------------------------
//  Operations
// --------------------------------------------------------------------------

// Canonical text form; parsing it back yields a structurally equal suite.
std::string to_text(const SpecSuite& suite);
std::string to_text(const Chain& chain);

// 64-bit FNV-1a hash of the canonical text, rendered as 16 hex digits.
std::string suite_digest(const SpecSuite& suite);

// Highest cycle index (relative to the anchor) any instance of a single
// execution can occupy: declared windows plus consecutive-repetition spans,
// with temporal re-executions NOT unrolled. Throws Errc::unbounded_window
// when the chain contains a '$' window.
int sequential_depth(const Chain& chain);

}  // namespace relspec
