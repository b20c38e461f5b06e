#include "bispan/report_json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <ostream>

namespace bispan {

namespace {

void dump_into(std::string& out, const Json& j, int depth) {
  const std::string pad(static_cast<std::size_t>(depth + 1) * 2, ' ');
  const std::string close_pad(static_cast<std::size_t>(depth) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        out += Json(it.key()).dump();
        out += ": ";
        dump_into(out, it.value(), depth + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars (edges, subsets) stay on one line.
      bool flat = true;
      for (const auto& v : j) flat = flat && !v.is_object() && !(v.is_array() && v.size() > 2);
      if (flat) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i > 0) out += ", ";
          dump_into(out, j[i], depth + 1);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) out += ",\n";
        out += pad;
        dump_into(out, j[i], depth + 1);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_real(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

}  // namespace

std::string format_real(double v) {
  if (std::isnan(v)) return "null";
  if (std::isinf(v)) return v > 0 ? "1e308" : "-1e308";
  if (v == 0.0) return "0";
  // round to 12 significant digits first, then lay the digits out in fixed notation
  char sci[32];
  std::snprintf(sci, sizeof sci, "%.11e", std::abs(v));
  std::string digits{sci[0]};
  digits.append(sci + 2, 11);
  const int exponent = std::atoi(std::strchr(sci, 'e') + 1);

  std::string out = v < 0 ? "-" : "";
  if (exponent >= 11) {
    out += digits + std::string(static_cast<std::size_t>(exponent - 11), '0');
  } else if (exponent >= 0) {
    out += digits.substr(0, static_cast<std::size_t>(exponent) + 1) + "." +
           digits.substr(static_cast<std::size_t>(exponent) + 1);
  } else {
    out += "0." + std::string(static_cast<std::size_t>(-exponent - 1), '0') + digits;
  }
  if (out.find('.') != std::string::npos) {
    out.erase(out.find_last_not_of('0') + 1);
    if (out.back() == '.') out.pop_back();
  }
  return out;
}

std::string dump_json(const Json& doc) {
  std::string out;
  dump_into(out, doc, 0);
  out += '\n';
  return out;
}

Json edges_json(const std::vector<Edge>& edges) {
  Json arr = Json::array();
  for (const auto& e : edges) arr.push_back(Json::array({e.a, e.b}));
  return arr;
}

Json feasibility_json(const FeasibilityResult& result) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  if (const auto* cert = std::get_if<TreeCertificate>(&result)) {
    doc["feasible"] = true;
    doc["tree"] = edges_json(cert->edges);
  } else {
    doc["feasible"] = false;
    doc["violating_set"] = std::get<HallViolation>(result).subset;
  }
  return doc;
}

Json theorem_report_json(const TheoremReport& r) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["report"] = "theorem";
  doc["params"] = {{"k", r.k}, {"m", r.m}, {"n", r.n}};
  doc["tol"] = r.tol;
  doc["qstar"] = r.qstar;
  doc["q_extremal_graph"] = r.q_extremal_graph;
  doc["graphs_total"] = r.graphs_total;
  doc["graphs_connected"] = r.graphs_connected;
  doc["graphs_above_bound"] = r.graphs_above_bound;
  doc["certificates_verified"] = r.certificates_verified;
  doc["extremal_copies"] = r.extremal_copies;
  Json ces = Json::array();
  for (const auto& ce : r.counterexamples) {
    Json c;
    c["mask"] = ce.mask;
    c["q"] = ce.q;
    c["reason"] = ce.reason;
    c["edges"] = edges_json(ce.edges);
    ces.push_back(std::move(c));
  }
  doc["counterexamples"] = std::move(ces);
  doc["extremal_infeasible"] = r.extremal_infeasible;
  doc["extremal_attains_bound"] = r.extremal_attains_bound;
  doc["extremal_found"] = r.extremal_found;
  doc["ok"] = r.ok();
  return doc;
}

Json sweep_report_json(const SweepReport& r) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["report"] = "proof_sweep";
  doc["grid"] = {{"k", {r.grid.k_min, r.grid.k_max}},
                 {"m", {r.grid.m_min, r.grid.m_max}},
                 {"n_extra", {r.grid.n_extra_min, r.grid.n_extra_max}}};
  Json points = Json::array();
  for (const auto& p : r.points) {
    Json pt;
    pt["params"] = {{"k", p.params.k}, {"m", p.params.m}, {"n", p.params.n}, {"s", p.params.s}};
    pt["boundary"] = p.boundary;
    if (!p.boundary) {
      pt["q1"] = p.q1;
      pt["qstar"] = p.qstar;
      pt["q_dense"] = p.q_dense;
    }
    Json checks;
    for (const auto& c : p.checks) checks[c.name] = c.passed;
    pt["checks"] = std::move(checks);
    points.push_back(std::move(pt));
  }
  doc["points"] = std::move(points);
  doc["checks_run"] = r.checks_run;
  doc["failures"] = r.failures;
  doc["ok"] = r.ok();
  return doc;
}

Json monotonicity_report_json(const MonotonicityReport& r) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["report"] = "monotonicity";
  doc["seed"] = r.seed;
  doc["trials"] = r.trials;
  doc["violations"] = r.violations;
  doc["identical_pairs"] = r.identical_pairs;
  doc["identical_mismatches"] = r.identical_mismatches;
  doc["strict_checked"] = r.strict_checked;
  doc["strict_confirmed"] = r.strict_confirmed;
  doc["max_excess"] = r.max_excess;
  doc["ok"] = r.ok();
  return doc;
}

void write_summary(std::ostream& out, const TheoremReport& r) {
  out << "theorem check k=" << r.k << " m=" << r.m << " n=" << r.n << '\n'
      << "  q_*                  " << format_real(r.qstar) << '\n'
      << "  q(G_*) dense         " << format_real(r.q_extremal_graph) << '\n'
      << "  graphs               " << r.graphs_total << " total, " << r.graphs_connected
      << " connected, " << r.graphs_above_bound << " at or above bound\n"
      << "  certificates         " << r.certificates_verified << " verified\n"
      << "  copies of G_*        " << r.extremal_copies << '\n'
      << "  counterexamples      " << r.counterexamples.size() << '\n'
      << "  G_* infeasible       " << (r.extremal_infeasible ? "yes" : "no") << '\n'
      << "  G_* attains bound    " << (r.extremal_attains_bound ? "yes" : "no") << '\n'
      << "  result               " << verdict(r.ok()) << '\n';
}

void write_summary(std::ostream& out, const SweepReport& r) {
  out << "proof sweep k=" << r.grid.k_min << ".." << r.grid.k_max << " m=" << r.grid.m_min << ".."
      << r.grid.m_max << " n-extra=" << r.grid.n_extra_min << ".." << r.grid.n_extra_max << '\n'
      << "  points               " << r.points.size() << '\n'
      << "  checks               " << r.checks_run << '\n'
      << "  failures             " << r.failures.size() << '\n';
  for (const auto& f : r.failures) out << "    " << f << '\n';
  out << "  result               " << verdict(r.ok()) << '\n';
}

void write_summary(std::ostream& out, const MonotonicityReport& r) {
  out << "monotonicity fuzz seed=" << r.seed << " trials=" << r.trials << '\n'
      << "  violations           " << r.violations << '\n'
      << "  identical pairs      " << r.identical_pairs << " (" << r.identical_mismatches
      << " mismatched)\n"
      << "  exact strictness     " << r.strict_confirmed << " / " << r.strict_checked << '\n'
      << "  max q(H) - q(G)      " << format_real(r.max_excess) << '\n'
      << "  result               " << verdict(r.ok()) << '\n';
}

}  // namespace bispan
