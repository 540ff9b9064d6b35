// ============================================================================
//  ast.cpp — canonical printing, digests, depth computation
// ============================================================================
#include "relspec/ast.hpp"

#include <charconv>
#include <cstdio>

#include "relspec/errors.hpp"

namespace relspec {

// --------------------------------------------------------------------------
//  lookup helpers
// --------------------------------------------------------------------------
const ActionDef* SpecSuite::find_action(const std::string& name) const {
  for (const auto& a : actions)
    if (a.name == name) return &a;
  return nullptr;
}

const OutcomeDef* SpecSuite::find_outcome(const std::string& name) const {
  for (const auto& o : outcomes)
    if (o.name == name) return &o;
  return nullptr;
}

const PropertyPair* SpecSuite::find_property(const std::string& id) const {
  for (const auto& p : properties)
    if (p.id == id) return &p;
  return nullptr;
}

const Scenario* SpecSuite::find_scenario(const std::string& id) const {
  for (const auto& s : scenarios)
    if (s.id == id) return &s;
  return nullptr;
}

double SpecSuite::action_reliability(const std::string& action) const {
  const ActionDef* a = find_action(action);
  if (!a) return 0.0;
  const OutcomeDef* o = find_outcome(a->outcome);
  return o ? o->reliability : 0.0;
}

// --------------------------------------------------------------------------
//  canonical text
// --------------------------------------------------------------------------
namespace {

// Shortest round-trip decimal form ("0.8", not "0.80000000000000004").
std::string fmt_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, end);
}

void print_window(std::string& out, const DelayWindow& w) {
  if (w.unbounded()) {
    out += "##[" + std::to_string(w.lo) + ":$] ";
  } else if (w.lo == w.hi) {
    out += "##" + std::to_string(w.lo) + " ";
  } else {
    out += "##[" + std::to_string(w.lo) + ":" + std::to_string(w.hi) + "] ";
  }
}

void print_chain(std::string& out, const Chain& chain, bool first_hoisted);

// Leading window of an element (for a temporal block: its first step's).
const Step* leading_step(const Element& el) {
  if (const auto* s = std::get_if<Step>(&el.node)) return s;
  if (const auto* sp = std::get_if<Spatial>(&el.node)) return &sp->step;
  if (const auto* co = std::get_if<Consec>(&el.node)) return &co->step;
  const auto& tm = std::get<Temporal>(el.node);
  return tm.block.elems.empty() ? nullptr : leading_step(tm.block.elems.front());
}

// `with_window` = false when the caller already accounted for the leading
// window (block-internal first elements, or an omitted ##0).
void print_element(std::string& out, const Element& el, bool with_window) {
  if (const auto* s = std::get_if<Step>(&el.node)) {
    if (with_window) print_window(out, s->window);
    out += s->event;
  } else if (const auto* sp = std::get_if<Spatial>(&el.node)) {
    if (with_window) print_window(out, sp->step.window);
    out += sp->step.event + "[~" + std::to_string(sp->count) + "]";
  } else if (const auto* co = std::get_if<Consec>(&el.node)) {
    if (with_window) print_window(out, co->step.window);
    out += co->step.event + "[*" + std::to_string(co->count) + "]";
  } else {
    const auto& tm = std::get<Temporal>(el.node);
    // the block's leading window is written outside the parentheses
    if (with_window) {
      if (const Step* fs = leading_step(el)) print_window(out, fs->window);
    }
    bool plain_single = tm.block.elems.size() == 1 &&
                        std::holds_alternative<Step>(tm.block.elems.front().node);
    if (plain_single) {
      out += std::get<Step>(tm.block.elems.front().node).event;
    } else {
      out += "(";
      print_chain(out, tm.block, /*first_hoisted=*/true);
      out += ")";
    }
    out += "[=" + std::to_string(tm.count) + "]";
  }
}

void print_chain(std::string& out, const Chain& chain, bool first_hoisted) {
  for (size_t i = 0; i < chain.elems.size(); ++i) {
    if (i > 0) out += " ";
    bool with_window = true;
    if (i == 0) {
      if (first_hoisted) {
        with_window = false;  // window already printed outside the block
      } else {
        // a leading ##0 is left implicit
        const Step* fs = leading_step(chain.elems[i]);
        with_window = !(fs && fs->window.lo == 0 && fs->window.hi == 0);
      }
    }
    print_element(out, chain.elems[i], with_window);
  }
}

void print_seq_line(std::string& out, const char* tag, const Chain& ante,
                    const Chain& cons) {
  out += "  ";
  out += tag;
  out += ": ";
  if (!ante.elems.empty()) {
    print_chain(out, ante, false);
    out += " |-> ";
  }
  print_chain(out, cons, false);
  out += "\n";
}

}  // namespace

std::string to_text(const Chain& chain) {
  std::string out;
  print_chain(out, chain, false);
  return out;
}

std::string to_text(const SpecSuite& suite) {
  std::string out;
  out += "timebase " + std::to_string(suite.timebase_ms) + " ms\n\n";
  for (const auto& a : suite.actions) {
    const OutcomeDef* o = suite.find_outcome(a.outcome);
    out += "action " + a.name + " causes " + a.outcome + " reliability " +
           fmt_double(o ? o->reliability : 0.0) + "\n";
  }
  for (const auto& p : suite.properties) {
    out += "\nproperty " + p.id + " target " + fmt_double(p.target) + " {\n";
    print_seq_line(out, "correct", p.correct_trigger, p.correctness);
    print_seq_line(out, "rely", p.trigger, p.reliability_spec);
    out += "}\n";
  }
  if (!suite.scenarios.empty()) out += "\n";
  for (const auto& s : suite.scenarios) {
    out += "scenario " + s.id + ":";
    for (size_t i = 0; i < s.firings.size(); ++i) {
      out += i ? ", " : " ";
      out += s.firings[i].first + "@" + std::to_string(s.firings[i].second);
    }
    out += "\n";
  }
  return out;
}

std::string suite_digest(const SpecSuite& suite) {
  const std::string text = to_text(suite);
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// --------------------------------------------------------------------------
//  sequential depth
// --------------------------------------------------------------------------
namespace {

int window_hi(const DelayWindow& w) {
  if (w.unbounded())
    throw Error(Errc::unbounded_window, "",
                "sequential depth undefined for an unbounded window");
  return w.hi;
}

int element_span(const Element& el);

int chain_span(const Chain& chain) {
  int total = 0;
  for (const auto& el : chain.elems) total += element_span(el);
  return total;
}

int element_span(const Element& el) {
  if (const auto* s = std::get_if<Step>(&el.node)) return window_hi(s->window);
  if (const auto* sp = std::get_if<Spatial>(&el.node))
    return window_hi(sp->step.window);  // replicas share the cycle
  if (const auto* co = std::get_if<Consec>(&el.node))
    return window_hi(co->step.window) + (co->count - 1);
  // a single execution of the block; re-executions are not unrolled here
  return chain_span(std::get<Temporal>(el.node).block);
}

}  // namespace

int sequential_depth(const Chain& chain) { return chain_span(chain); }

}  // namespace relspec
