// ============================================================================
//  smtlib.cpp — byte-stable SMT-LIB2 rendering
// ============================================================================
#include "relspec/smtlib.hpp"

#include <algorithm>
#include <sstream>

namespace relspec {

namespace {

std::string var_name(VarRef v) {
  return "tau_" + std::to_string(v.prop) + "_" + std::to_string(v.row);
}

}  // namespace

std::string export_smtlib(const ConstraintSet& cs) {
  std::ostringstream out;
  out << "(set-logic QF_LIA)\n";

  if (!cs.variables.empty()) {
    out << "(define-fun imax ((a Int) (b Int)) Int (ite (>= a b) a b))\n";
    out << "(declare-const gamma Int)\n";
    out << "(assert (= gamma " << cs.gamma << "))\n";

    for (const VarInfo& v : cs.variables)
      out << "(declare-const " << var_name(v.var) << " Int)\n";

    for (const TimingConstraint& tc : cs.timing) {
      if (!tc.base) {
        out << "(assert (and (>= " << var_name(tc.var) << " " << tc.lo
            << ") (<= " << var_name(tc.var) << " " << tc.hi << ")))\n";
      } else {
        const std::string diff =
            "(- " + var_name(tc.var) + " " + var_name(*tc.base) + ")";
        out << "(assert (and (>= " << diff << " " << tc.lo << ") (<= " << diff
            << " " << tc.hi << ")))\n";
      }
    }

    for (const FiredProperty& fp : cs.properties)
      for (const auto& row : fp.table.rows)
        out << "(assert (<= " << var_name(fp.table.var(row.row)) << " "
            << fp.horizon << "))\n";

    // learned blocking clauses: forbid exact per-property assignments
    for (size_t f = 0; f < cs.blocked.size() && f < cs.properties.size(); ++f) {
      const FiredProperty& fp = cs.properties[f];
      for (const std::vector<int>& tuple : cs.blocked[f]) {
        out << "(assert (not (and";
        for (size_t r = 0; r < tuple.size(); ++r)
          out << " (= " << var_name(fp.table.var(int(r) + 1)) << " "
              << tuple[r] << ")";
        out << ")))\n";
      }
    }

    // distinct action names, first-appearance order of the groups
    std::vector<std::string> actions;
    for (const Group& g : cs.groups)
      if (std::find(actions.begin(), actions.end(), g.action) == actions.end())
        actions.push_back(g.action);

    for (int t = 1; t <= cs.horizon; ++t) {
      std::vector<std::string> terms;
      for (const std::string& a : actions) {
        // per property: sum of (ite (= tau t) 1 0) over its instances of a
        std::vector<std::string> sums;
        for (const FiredProperty& fp : cs.properties) {
          std::vector<std::string> indicators;
          for (const auto& row : fp.table.rows)
            if (row.action == a)
              indicators.push_back("(ite (= " +
                                   var_name(fp.table.var(row.row)) + " " +
                                   std::to_string(t) + ") 1 0)");
          if (indicators.empty()) continue;
          if (indicators.size() == 1) {
            sums.push_back(indicators.front());
          } else {
            std::string s = "(+";
            for (const std::string& i : indicators) s += " " + i;
            s += ")";
            sums.push_back(std::move(s));
          }
        }
        if (sums.empty()) continue;
        std::string folded = sums.front();
        for (size_t i = 1; i < sums.size(); ++i)
          folded = "(imax " + folded + " " + sums[i] + ")";
        const std::string name = "dem_t" + std::to_string(t) + "_" + a;
        out << "(define-fun " << name << " () Int " << folded << ")\n";
        terms.push_back(name);
      }
      if (terms.empty()) continue;
      if (terms.size() == 1) {
        out << "(assert (<= " << terms.front() << " gamma))\n";
      } else {
        out << "(assert (<= (+";
        for (const std::string& name : terms) out << " " << name;
        out << ") gamma))\n";
      }
    }
  }

  out << "(check-sat)\n(get-model)\n";
  return out.str();
}

}  // namespace relspec
