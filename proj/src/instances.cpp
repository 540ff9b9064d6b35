// ============================================================================
//  instances.cpp — reliability specification -> action-instance table
// ============================================================================
#include "relspec/instances.hpp"

namespace relspec {

namespace {

struct Flattener {
  InstanceTable table;
  int delta_counter = 0;

  int add_row(const std::string& action, TimePrefix prefix, int sf, int link,
              int replica_root, int reexec) {
    ActionInstance inst;
    inst.row = int(table.rows.size()) + 1;
    inst.action = action;
    inst.prefix = prefix;
    inst.spatial_factor = sf;
    inst.link = link;
    inst.replica_root = replica_root ? replica_root : inst.row;
    inst.reexec = reexec;
    table.rows.push_back(std::move(inst));
    return int(table.rows.size());
  }

  static TimePrefix from_window(const DelayWindow& w) {
    return {w.lo, w.hi, 0};
  }

  // Emits one element; `prev` is the row the element's first instance links
  // to (0 = anchor). `override_first` replaces the first instance's declared
  // prefix (used for temporal re-executions). Returns the last row emitted;
  // `first_row` receives the first.
  int emit_element(const Element& el, int prev, int reexec,
                   const TimePrefix* override_first, int* first_row) {
    if (const auto* s = std::get_if<Step>(&el.node)) {
      TimePrefix pfx = override_first ? *override_first : from_window(s->window);
      int r = add_row(s->event, pfx, 1, prev, 0, reexec);
      if (first_row) *first_row = r;
      return r;
    }
    if (const auto* sp = std::get_if<Spatial>(&el.node)) {
      TimePrefix pfx = override_first ? *override_first : from_window(sp->step.window);
      int root = add_row(sp->step.event, pfx, 1, prev, 0, reexec);
      if (first_row) *first_row = root;
      int last = root;
      for (int i = 2; i <= sp->count; ++i)
        last = add_row(sp->step.event, {0, 0, 0}, i, root, root, reexec);
      return last;
    }
    if (const auto* co = std::get_if<Consec>(&el.node)) {
      TimePrefix pfx = override_first ? *override_first : from_window(co->step.window);
      int r = add_row(co->step.event, pfx, 1, prev, 0, reexec);
      if (first_row) *first_row = r;
      for (int i = 2; i <= co->count; ++i)
        r = add_row(co->step.event, {1, 1, 0}, 1, r, 0, reexec);
      return r;
    }
    const auto& tm = std::get<Temporal>(el.node);
    // first execution: declared structure, linked like a plain element
    int exec_first = 0;
    int last = emit_chain(tm.block, prev, reexec, override_first, &exec_first);
    if (first_row) *first_row = exec_first;
    int prev_exec_first = exec_first;
    for (int i = 1; i < tm.count; ++i) {
      // re-execution i starts strictly after re-execution i-1, latest DELTA
      TimePrefix start{1, 0, ++delta_counter};
      int this_first = 0;
      last = emit_chain(tm.block, prev_exec_first, i, &start, &this_first);
      prev_exec_first = this_first;
    }
    return last;
  }

  int emit_chain(const Chain& chain, int prev, int reexec,
                 const TimePrefix* override_first, int* first_row) {
    int last = prev;
    for (size_t i = 0; i < chain.elems.size(); ++i) {
      int fr = 0;
      last = emit_element(chain.elems[i], last, reexec,
                          i == 0 ? override_first : nullptr, &fr);
      if (i == 0 && first_row) *first_row = fr;
    }
    return last;
  }
};

}  // namespace

InstanceTable flatten(const SpecSuite& suite, const PropertyPair& prop) {
  Flattener f;
  f.table.property_id = prop.id;
  f.table.property_index = 0;
  for (size_t i = 0; i < suite.properties.size(); ++i)
    if (suite.properties[i].id == prop.id)
      f.table.property_index = int(i) + 1;
  f.emit_chain(prop.reliability_spec, 0, 0, nullptr, nullptr);
  f.table.delta_count = f.delta_counter;
  return f.table;
}

std::string to_text(const InstanceTable& t) {
  std::string out;
  for (const auto& r : t.rows) {
    out += "tau_" + std::to_string(t.property_index) + "_" + std::to_string(r.row);
    out += ": " + r.action + " <" + std::to_string(r.prefix.lo) + ",";
    out += r.prefix.symbolic() ? "DELTA(" + std::to_string(r.prefix.delta) + ")"
                               : std::to_string(r.prefix.hi);
    out += "> sf=" + std::to_string(r.spatial_factor);
    out += r.link ? " -> tau_" + std::to_string(t.property_index) + "_" +
                        std::to_string(r.link)
                  : " -> anchor";
    out += "\n";
  }
  return out;
}

}  // namespace relspec
