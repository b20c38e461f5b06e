#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "bispan/errors.hpp"
#include "bispan/extremal.hpp"
#include "bispan/graph_io.hpp"
#include "bispan/polynomial.hpp"
#include "bispan/report_json.hpp"
#include "bispan/spectral.hpp"
#include "bispan/trees.hpp"

namespace bispan::cli {

namespace {

int emit_report(const Json& doc, bool ok, OutputFormat format, std::ostream& out, std::ostream& err,
                const auto& report) {
  if (format == OutputFormat::json) {
    out << dump_json(doc);
    write_summary(err, report);
  } else {
    write_summary(out, report);
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

int run_spectral(const CommandConfig& cfg, std::ostream& out) {
  const auto g = read_graph_file(cfg.graph_path);
  const double tol = cfg.tol > 0 ? cfg.tol : kDefaultSpectralTolerance;
  const auto est = signless_spectral_radius(g, tol);
  if (cfg.format == OutputFormat::json) {
    Json doc;
    doc["schema"] = kSchemaVersion;
    doc["command"] = "spectral";
    doc["m"] = g.left_size();
    doc["n"] = g.right_size();
    doc["edges"] = g.edge_count();
    doc["connected"] = is_connected(g);
    doc["q"] = est.value;
    doc["residual"] = est.residual;
    doc["iterations"] = est.iterations;
    doc["method"] = std::string(to_string(est.method));
    out << dump_json(doc);
  } else {
    out << "q(G) = " << format_real(est.value) << "  (residual " << format_real(est.residual) << ", "
        << est.iterations << " iterations, " << to_string(est.method) << ")\n";
  }
  return kExitOk;
}

int run_check_tree(const CommandConfig& cfg, std::ostream& out) {
  const auto g = read_graph_file(cfg.graph_path);
  const auto demand = cfg.k ? DegreeDemand::uniform(g.left_size(), *cfg.k)
                            : read_demand_file(*cfg.demand_path);
  if (demand.size() != g.left_size())
    throw InputError("demand file has " + std::to_string(demand.size()) + " entries, graph has m = " +
                     std::to_string(g.left_size()));
  const auto result = construct_tree(g, demand);
  if (cfg.format == OutputFormat::json) {
    out << dump_json(feasibility_json(result));
  } else if (const auto* cert = std::get_if<TreeCertificate>(&result)) {
    out << "feasible: spanning tree with " << cert->edges.size() << " edges\n";
    for (const auto& e : cert->edges) out << "  " << e.a << ' ' << e.b << '\n';
  } else {
    out << "infeasible: violating set {";
    const auto& s = std::get<HallViolation>(result).subset;
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? ", " : "") << s[i];
    out << "}\n";
  }
  return kExitOk;
}

int run_extremal(const CommandConfig& cfg, std::ostream& out) {
  const ExtremalParams p{cfg.k.value_or(0), cfg.m, cfg.n, cfg.s};
  validate(p);
  const auto g = build_extremal(p);
  if (cfg.graph_out) write_graph_file(*cfg.graph_out, g);

  // Reuse the sweep for this single point so the checks are identical.
  const auto extra = p.n - (p.k - 1) * p.m;
  const auto sweep = proof_sweep({p.k, p.k, p.m, p.m, extra, extra});
  const auto it = std::find_if(sweep.points.begin(), sweep.points.end(),
                               [&](const SweepPoint& pt) { return pt.params.s == p.s; });
  const auto& point = *it;

  std::ostringstream report;
  report << "extremal family k=" << p.k << " m=" << p.m << " n=" << p.n << " s=" << p.s << " (r=" << p.r()
         << ")\n"
         << "edges " << g.edge_count() << "\n"
         << "quotient matrix of Q (partition S | A-S | N(S) | B-N(S)):\n";
  print_matrix(report, quotient_matrix(g, extremal_partition(p)));
  report << "phi(x) = " << phi_coeffs(p) << '\n'
         << "psi(x) = " << psi_polynomial(p) << '\n'
         << "q1     = " << format_real(point.q1) << "  (largest root of phi)\n"
         << "q(G1)  = " << format_real(point.q_dense) << "  (dense eigensolver)\n"
         << "q_*    = " << format_real(point.qstar) << '\n'
         << "checks:\n";
  bool ok = true;
  for (const auto& c : point.checks) {
    report << "  " << (c.passed ? "ok   " : "FAIL ") << c.name << '\n';
    ok = ok && c.passed;
  }

  // Without --graph-out stdout is itself a graph file with the report as comments.
  if (!cfg.graph_out) write_graph(out, g);
  std::istringstream lines(report.str());
  for (std::string line; std::getline(lines, line);) out << (cfg.graph_out ? "" : "# ") << line << '\n';
  return ok ? kExitOk : kExitVerificationFailed;
}

int dispatch(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  switch (cfg.command) {
    case Subcommand::spectral:
      return run_spectral(cfg, out);
    case Subcommand::check_tree:
      return run_check_tree(cfg, out);
    case Subcommand::extremal:
      return run_extremal(cfg, out);
    case Subcommand::verify_theorem: {
      TheoremOptions opts;
      if (cfg.tol > 0) opts.tol = cfg.tol;
      opts.jobs = cfg.jobs;
      const auto r = theorem_check(cfg.k.value_or(0), cfg.m, cfg.n, opts);
      return emit_report(theorem_report_json(r), r.ok(), cfg.format, out, err, r);
    }
    case Subcommand::proof_sweep: {
      const auto r = proof_sweep(cfg.grid);
      return emit_report(sweep_report_json(r), r.ok(), cfg.format, out, err, r);
    }
    case Subcommand::monotonicity_fuzz: {
      const auto r = monotonicity_fuzz(cfg.trials, cfg.seed);
      return emit_report(monotonicity_report_json(r), r.ok(), cfg.format, out, err, r);
    }
  }
  return kExitInputError;
}

}  // namespace

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  auto parse = [&](const std::string& part) -> std::int64_t {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size()) throw InputError("bad range '" + text + "', expected a..b");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = parse(text);
    return {v, v};
  }
  const auto lo = parse(text.substr(0, dots));
  const auto hi = parse(text.substr(dots + 2));
  if (lo > hi) throw InputError("empty range '" + text + "'");
  return {lo, hi};
}

int run(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(config, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInputError;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degree-constrained spanning trees and signless Laplacian spectral bounds "
               "for bipartite graphs"};
  app.require_subcommand(1);
  CommandConfig cfg;
  std::string format = "json";
  const std::map<std::string, OutputFormat> formats{{"json", OutputFormat::json},
                                                    {"text", OutputFormat::text}};

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };

  auto* spectral = app.add_subcommand("spectral", "Signless Laplacian spectral radius q(G)");
  spectral->add_option("graph", cfg.graph_path, "Graph file")->required();
  spectral->add_option("--tol", cfg.tol, "Residual tolerance");
  add_format(spectral);

  auto* check = app.add_subcommand("check-tree", "Spanning tree with d_T(v) >= f(v) on A, or a violating set");
  check->add_option("graph", cfg.graph_path, "Graph file")->required();
  auto* k_opt = check->add_option("--k", cfg.k, "Uniform demand k >= 2");
  auto* f_opt = check->add_option("--f", cfg.demand_path, "Demand file, one integer per line");
  k_opt->excludes(f_opt);
  f_opt->excludes(k_opt);
  add_format(check);

  std::int64_t k_value = 0;
  auto* extremal = app.add_subcommand("extremal", "Build K_{s,(k-1)s} join K_{m-s,n-(k-1)s} and report");
  extremal->add_option("--k", k_value)->required();
  extremal->add_option("--m", cfg.m)->required();
  extremal->add_option("--n", cfg.n)->required();
  extremal->add_option("--s", cfg.s, "Defaults to 1 (the extremal graph G_*)");
  extremal->add_option("--graph-out", cfg.graph_out, "Write the graph here instead of stdout");

  auto* theorem = app.add_subcommand("verify-theorem", "Exhaustive check of the spectral condition");
  theorem->add_option("--k", k_value)->required();
  theorem->add_option("--m", cfg.m)->required();
  theorem->add_option("--n", cfg.n)->required();
  theorem->add_option("--tol", cfg.tol, "Bound tolerance (default 1e-7)");
  theorem->add_option("--jobs", cfg.jobs, "Worker threads (default: all cores)");
  add_format(theorem);

  std::string k_range = "3..5";
  std::string m_range = "3..5";
  std::string n_extra = "1..5";
  auto* sweep = app.add_subcommand("proof-sweep", "Pointwise check of every inequality on a grid");
  sweep->add_option("--k-range", k_range, "k range a..b")->capture_default_str();
  sweep->add_option("--m-range", m_range, "m range a..b")->capture_default_str();
  sweep->add_option("--n-extra", n_extra, "n - (k-1)m range a..b; 0 is the boundary")->capture_default_str();
  add_format(sweep);

  auto* fuzz = app.add_subcommand("monotonicity-fuzz", "q(H) <= q(G) for random connected spanning subgraphs");
  fuzz->add_option("--trials", cfg.trials)->capture_default_str();
  fuzz->add_option("--seed", cfg.seed)->capture_default_str();
  add_format(fuzz);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  cfg.format = formats.at(format);
  try {
    if (spectral->parsed()) {
      cfg.command = Subcommand::spectral;
    } else if (check->parsed()) {
      cfg.command = Subcommand::check_tree;
      if (!cfg.k && !cfg.demand_path) throw InputError("check-tree needs --k or --f");
    } else if (extremal->parsed()) {
      cfg.command = Subcommand::extremal;
      cfg.k = static_cast<int>(k_value);
    } else if (theorem->parsed()) {
      cfg.command = Subcommand::verify_theorem;
      cfg.k = static_cast<int>(k_value);
    } else if (sweep->parsed()) {
      cfg.command = Subcommand::proof_sweep;
      std::tie(cfg.grid.k_min, cfg.grid.k_max) = parse_range(k_range);
      std::tie(cfg.grid.m_min, cfg.grid.m_max) = parse_range(m_range);
      std::tie(cfg.grid.n_extra_min, cfg.grid.n_extra_max) = parse_range(n_extra);
    } else {
      cfg.command = Subcommand::monotonicity_fuzz;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return run(cfg, out, err);
}

}  // namespace bispan::cli
