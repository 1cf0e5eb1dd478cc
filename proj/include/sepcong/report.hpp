#pragma once

#include <sstream>
#include <string>

#include "json.hpp"

#include "theorems.hpp"

namespace sepcong {

  using ordered_json = nlohmann::ordered_json;

  inline ordered_json table_json(Semigroup const& s) {
    ordered_json rows = ordered_json::array();
    for (Element a = 0; a < s.order(); ++a) {
      auto r = s.row(a);
      rows.push_back(std::vector<Element>(r.begin(), r.end()));
    }
    return rows;
  }

  inline ordered_json witness_json(Witness const& w) {
    ordered_json j = ordered_json::object();
    if (w.congruence) {
      j["congruence"] = to_string(*w.congruence);
    }
    if (!w.selection.empty()) {
      j["selection"] = w.selection;
    }
    if (w.h) {
      j["h"] = to_string(*w.h);
    }
    if (!w.members.empty()) {
      ordered_json m = ordered_json::array();
      for (auto x : w.members) {
        m.push_back(to_string(x));
      }
      j["members"] = std::move(m);
    }
    if (w.subset) {
      j["subset"] = to_string(*w.subset);
    }
    return j;
  }

  inline ordered_json result_json(TheoremResult const& r) {
    ordered_json j;
    j["theorem"] = to_string(r.id);
    j["status"]  = to_string(r.status);
    j["detail"]  = r.detail;
    j["witness"] = r.witness ? witness_json(*r.witness) : ordered_json(nullptr);
    return j;
  }

  inline ordered_json entry_json(SemigroupReport const& e) {
    ordered_json j;
    j["index"]              = e.index;
    j["order"]              = e.semigroup.order();
    j["table"]              = table_json(e.semigroup);
    j["commutative"]        = e.semigroup.is_commutative();
    j["congruences"]        = e.congruences;
    j["monoid_congruences"] = e.monoid_congruences;
    ordered_json th         = ordered_json::object();
    for (auto id : kAllTheorems) {
      auto const& t = e.tally(id);
      th[std::string(to_string(id))] = {{"status", t.summary()},
                                        {"checks", t.checks()},
                                        {"pass", t.pass},
                                        {"fail", t.fail},
                                        {"not_applicable", t.not_applicable},
                                        {"candidate", t.candidate}};
    }
    j["theorems"] = std::move(th);
    if (e.corollary) {
      j["corollary5"] = {{"lhs", e.corollary->first}, {"rhs", e.corollary->second}};
    } else {
      j["corollary5"] = nullptr;
    }
    ordered_json findings = ordered_json::array();
    for (auto const& r : e.findings) {
      findings.push_back(result_json(r));
    }
    j["findings"] = std::move(findings);
    j["notes"]    = e.notes;
    j["error"]    = e.error ? ordered_json(*e.error) : ordered_json(nullptr);
    return j;
  }

  /// Machine-readable report. Timing is deliberately left out so identical
  /// runs serialize identically.
  inline ordered_json report_json(VerificationReport const& report) {
    ordered_json j;
    j["semigroups"] = report.entries.size();
    j["failures"]   = report.failures();
    j["candidates"] = report.candidates();
    j["notes"]      = report.notes();
    ordered_json entries = ordered_json::array();
    for (auto const& e : report.entries) {
      entries.push_back(entry_json(e));
    }
    j["entries"] = std::move(entries);
    return j;
  }

  inline std::string flat_table(Semigroup const& s) {
    std::string out;
    for (Element a = 0; a < s.order(); ++a) {
      if (a != 0) {
        out += '|';
      }
      for (Element b = 0; b < s.order(); ++b) {
        if (b != 0) {
          out += ' ';
        }
        out += std::to_string(s(a, b));
      }
    }
    return out;
  }

  /// Human-readable report carrying the same fields as report_json. The last
  /// line is "<N> semigroups, <F> failures".
  inline std::string report_text(VerificationReport const& report) {
    std::ostringstream out;
    for (auto const& e : report.entries) {
      out << '[' << e.index << "] order=" << e.semigroup.order() << " table=" << flat_table(e.semigroup)
          << " commutative=" << (e.semigroup.is_commutative() ? "yes" : "no")
          << " congruences=" << e.congruences << " monoid=" << e.monoid_congruences << '\n';
      out << "   ";
      for (auto id : kAllTheorems) {
        auto const& t = e.tally(id);
        out << ' ' << to_string(id) << '=' << t.summary() << '(' << t.pass << '/' << t.fail << '/'
            << t.not_applicable << '/' << t.candidate << ')';
      }
      if (e.corollary) {
        out << " C5:lhs=" << (e.corollary->first ? "true" : "false")
            << ",rhs=" << (e.corollary->second ? "true" : "false");
      }
      out << '\n';
      if (e.error) {
        out << "    error: " << *e.error << '\n';
      }
      for (auto const& r : e.findings) {
        out << "    " << to_string(r.id) << ' ' << to_string(r.status) << ": " << r.detail;
        if (r.witness) {
          out << " witness=" << witness_json(*r.witness).dump();
        }
        out << '\n';
      }
      for (auto const& n : e.notes) {
        out << "    note: " << n << '\n';
      }
    }
    out << "candidates=" << report.candidates() << " notes=" << report.notes() << '\n';
    out << report.entries.size() << " semigroups, " << report.failures() << " failures\n";
    return out.str();
  }

}  // namespace sepcong
