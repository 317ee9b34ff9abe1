// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: single-point evaluation, table generation over a
// grid, and the verification suites with CSV/JSON reports.
//
// Exit codes: 0 success / all checks pass, 1 verification failures,
// 2 usage or domain errors (diagnostic on stderr).

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gelliptic/gjef.hpp"
#include "gelliptic/gtf.hpp"
#include "gelliptic/identities.hpp"
#include "gelliptic/report.hpp"

namespace {

using namespace gelliptic;

struct FnArgs {
  std::string fn;
  double p = 2.0;
  double q = 2.0;
  double r = 2.0;
  double k = 0.0;
  double x = 0.0;
};

double eval_fn(const FnArgs& a) {
  if (a.fn == "sin") return sin_pq(ParamPair(a.p, a.q), a.x);
  if (a.fn == "cos") return cos_pq(ParamPair(a.p, a.q), a.x);
  if (a.fn == "F") return F_pq(ParamPair(a.p, a.q), a.x);
  if (a.fn == "pi") return pi_extended(a.p, a.q);
  if (a.fn == "K_q1") return K_q1(a.p, a.r, a.k);
  if (a.fn == "E_q1") return E_q1(a.p, a.r, a.k);
  const ParamTriple pt(a.p, a.q, a.r);
  const Modulus mod = Modulus::make(pt, a.k);
  if (a.fn == "sn") return sn_pqr(pt, mod, a.x);
  if (a.fn == "cn") return cn_pqr(pt, mod, a.x);
  if (a.fn == "dn") return dn_pqr(pt, mod, a.x);
  if (a.fn == "am") return am_pqr(pt, mod, a.x);
  if (a.fn == "H") return H_pqr(pt, mod, a.x);
  if (a.fn == "K") return K_pqr(pt, mod);
  if (a.fn == "E") return E_pqr(pt, mod);
  throw std::domain_error("unknown function '" + a.fn + "'");
}

int run_eval(const FnArgs& a) {
  std::cout << format_double(eval_fn(a)) << "\n";
  return 0;
}

int run_table(FnArgs a, const std::string& k_grid, const std::string& x_grid,
              const std::string& format) {
  if (k_grid.empty() == x_grid.empty())
    throw std::domain_error("table: give exactly one of --k-grid or --x-grid");
  const bool vary_k = !k_grid.empty();
  const std::vector<double> grid = parse_grid(vary_k ? k_grid : x_grid);
  const std::string var = vary_k ? "k" : "x";
  if (format == "csv") {
    std::cout << var << ",value\n";
    for (double v : grid) {
      (vary_k ? a.k : a.x) = v;
      std::cout << format_double(v) << ',' << format_double(eval_fn(a)) << "\n";
    }
    return 0;
  }
  nlohmann::json points = nlohmann::json::array();
  for (double v : grid) {
    (vary_k ? a.k : a.x) = v;
    points.push_back({{var, v}, {"value", eval_fn(a)}});
  }
  const nlohmann::json doc{{"fn", a.fn}, {"p", a.p},      {"q", a.q},
                           {"r", a.r},   {"points", points}};
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int run_verify(const std::string& suite_str, std::optional<double> p,
               std::optional<double> q, std::optional<double> r,
               std::optional<double> tol, const std::string& format) {
  const std::optional<Suite> suite = suite_from_name(suite_str);
  if (!suite) throw std::domain_error("unknown suite '" + suite_str + "'");
  SuiteOptions opt;
  if (p || q || r) {
    if (!(p && q && r))
      throw std::domain_error("verify: give all of --p, --q, --r or none");
    opt.triple = std::array<double, 3>{*p, *q, *r};
  }
  opt.tol_override = tol;
  const std::vector<VerificationReport> reports = run_suite(*suite, opt);
  if (format == "csv")
    std::cout << reports_to_csv(reports);
  else
    std::cout << reports_to_json(suite_str, reports).dump(2) << "\n";
  const ReportSummary s = summarize(reports);
  if (s.failed > 0) {
    std::cerr << s.failed << " of " << s.total << " verification points failed\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized trigonometric / Jacobi elliptic function toolkit"};
  app.require_subcommand(1);

  FnArgs args;
  std::string k_grid, x_grid;
  std::string format = "json";

  CLI::App* eval = app.add_subcommand("eval", "evaluate a function at one point");
  eval->add_option("--fn", args.fn, "sn|cn|dn|am|H|K|E|K_q1|E_q1|sin|cos|F|pi")
      ->required();
  eval->add_option("--p", args.p);
  eval->add_option("--q", args.q);
  eval->add_option("--r", args.r);
  eval->add_option("--k", args.k);
  eval->add_option("--x", args.x);

  CLI::App* table = app.add_subcommand("table", "tabulate a function over a grid");
  table->add_option("--fn", args.fn)->required();
  table->add_option("--p", args.p);
  table->add_option("--q", args.q);
  table->add_option("--r", args.r);
  table->add_option("--k", args.k);
  table->add_option("--x", args.x);
  table->add_option("--k-grid", k_grid, "start:stop:step");
  table->add_option("--x-grid", x_grid, "start:stop:step");
  table->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  std::string suite;
  std::optional<double> vp, vq, vr, vtol;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite,
                     "legendre|wallis1|wallis2|recurrence|ode|inequalities|"
                     "pythagorean|roundtrip|derivative|all")
      ->required();
  verify->add_option("--p", vp);
  verify->add_option("--q", vq);
  verify->add_option("--r", vr);
  verify->add_option("--tol", vtol, "override per-point tolerance");
  verify->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (eval->parsed()) return run_eval(args);
    if (table->parsed()) return run_table(args, k_grid, x_grid, format);
    return run_verify(suite, vp, vq, vr, vtol, format);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
