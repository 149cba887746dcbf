// Command-line front end: verification suites and CSV tables for the
// classical and free Meixner families.
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 usage error.

#include "meixner/meixner.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace meixner;
using ordered_json = nlohmann::ordered_json;

struct ParamFlags {
  std::string lambda, eta, t = "1";
  std::string framework;
  bool have_lambda = false, have_eta = false;
};

void add_param_flags(CLI::App* cmd, ParamFlags& f) {
  cmd->add_option("--framework", f.framework, "classical or free")
      ->check(CLI::IsMember({"classical", "free"}));
  cmd->add_option("--lambda", f.lambda, "recurrence parameter lambda (rational p/q or decimal)");
  cmd->add_option("--eta", f.eta, "recurrence parameter eta >= 0");
  cmd->add_option("--t", f.t, "time parameter t > 0 (default 1)");
}

Framework parse_framework(const std::string& s) {
  return s == "free" ? Framework::Free : Framework::Classical;
}

// Points requested on the command line: explicit parameters give a single
// point per framework; no parameters select the built-in five-case grid.
std::vector<MeixnerParams> resolve_points(const ParamFlags& f) {
  const bool has_params = f.have_lambda || f.have_eta;
  std::vector<Framework> frameworks;
  if (f.framework.empty())
    frameworks = {Framework::Classical, Framework::Free};
  else
    frameworks = {parse_framework(f.framework)};
  std::vector<MeixnerParams> points;
  if (!has_params) {
    for (const auto& p : default_grid())
      if (f.framework.empty() || p.framework == frameworks.front()) points.push_back(p);
    return points;
  }
  const auto l = f.have_lambda ? parse_scalar(f.lambda) : ParsedScalar{};
  const auto e = f.have_eta ? parse_scalar(f.eta) : ParsedScalar{};
  const auto t = parse_scalar(f.t);
  const bool exact = !l.is_decimal && !e.is_decimal && !t.is_decimal;
  for (Framework fw : frameworks)
    points.emplace_back(fw, l.value, e.value, t.value, exact);
  return points;
}

MeixnerParams resolve_single_point(const ParamFlags& f) {
  const auto l = f.have_lambda ? parse_scalar(f.lambda) : ParsedScalar{};
  const auto e = f.have_eta ? parse_scalar(f.eta) : ParsedScalar{};
  const auto t = parse_scalar(f.t);
  const bool exact = !l.is_decimal && !e.is_decimal && !t.is_decimal;
  return MeixnerParams(f.framework.empty() ? Framework::Classical : parse_framework(f.framework),
                       l.value, e.value, t.value, exact);
}

int default_order() {
  if (const char* env = std::getenv("MEIXNER_ORDER")) {
    const int n = std::atoi(env);
    if (n >= 1) return std::max(n, 3);  // every suite needs order >= 3
  }
  return 16;
}

std::string csv_field(const std::string& s) {
  if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

// Number formatting for data rows: rationals stay "p/q" on the exact path,
// decimals force 17-significant-digit floats.
std::string format_value(const Rat& v, bool exact) {
  return exact ? to_string(v) : format_double(to_double(v));
}

void print_report_table(const std::vector<VerificationReport>& reports) {
  std::cout << "suite          framework  lambda  eta  t    order  status  max_abs_error  detail\n";
  for (const auto& r : reports) {
    char line[256];
    std::snprintf(line, sizeof line, "%-14s %-10s %-7s %-4s %-4s %-6d %-7s %-14s %s\n",
                  r.suite.c_str(), name(r.framework), to_string(r.lambda).c_str(),
                  to_string(r.eta).c_str(), to_string(r.t).c_str(), r.order,
                  r.pass ? "pass" : "fail", r.max_abs_error_str().c_str(), r.detail.c_str());
    std::cout << line;
  }
}

int run_verify(const ParamFlags& flags, const std::string& suite_arg, int order, double tol,
               const std::string& format) {
  const auto suites = parse_suites(suite_arg);
  const auto points = resolve_points(flags);
  std::vector<VerificationReport> reports;
  for (const auto& p : points)
    for (Suite s : suites) reports.push_back(run_suite(s, p, order, tol));

  if (format == "json") {
    for (const auto& r : reports) {
      ordered_json j;
      j["schema"] = 1;
      j["suite"] = r.suite;
      j["framework"] = name(r.framework);
      j["params"] = {{"lambda", to_string(r.lambda)}, {"eta", to_string(r.eta)}, {"t", to_string(r.t)}};
      j["order"] = r.order;
      j["status"] = r.pass ? "pass" : "fail";
      j["max_abs_error"] = r.max_abs_error_str();
      j["detail"] = r.detail;
      j["elapsed_ms"] = r.elapsed_ms;
      std::cout << j.dump() << "\n";
    }
  } else if (format == "csv") {
    std::cout << "suite,framework,lambda,eta,t,order,status,max_abs_error,detail\n";
    for (const auto& r : reports)
      std::cout << r.suite << "," << name(r.framework) << "," << to_string(r.lambda) << ","
                << to_string(r.eta) << "," << to_string(r.t) << "," << r.order << ","
                << (r.pass ? "pass" : "fail") << "," << r.max_abs_error_str() << ","
                << csv_field(r.detail) << "\n";
  } else {
    print_report_table(reports);
  }
  for (const auto& r : reports)
    if (!r.pass) return 1;
  return 0;
}

int run_table(const std::string& kind, const ParamFlags& flags, int n, const std::string& measure,
              const std::string& which) {
  const MeixnerParams p = resolve_single_point(flags);
  const bool exact = p.exact_inputs;

  auto measure_coeffs = [&](int upto) {
    return measure == "nu" ? nu_jacobi<Rat>(p, upto) : mu_jacobi<Rat>(p, upto);
  };

  if (kind == "poly") {
    const auto basis = ops_from_jacobi(measure_coeffs(std::max(n, 1)), n);
    std::cout << "n,coefficients\n";
    for (int k = 0; k <= n; ++k) {
      std::cout << k;
      for (int j = 0; j <= k; ++j) std::cout << "," << format_value(basis[k].coeff(j), exact);
      std::cout << "\n";
    }
  } else if (kind == "moments") {
    const auto m = moments(measure_coeffs(std::max(1, (n + 1) / 2)), n);
    std::cout << "n,moment\n";
    for (int k = 0; k <= n; ++k)
      std::cout << k << "," << format_value(m[static_cast<std::size_t>(k)], exact) << "\n";
  } else if (kind == "cumulants") {
    const auto m = moments(mu_jacobi<Rat>(p, std::max(n, 1)), n);
    const auto c = moments_to_cumulants(p.framework, m, n);
    std::cout << "n,cumulant\n";
    for (int k = 1; k <= n; ++k)
      std::cout << k << "," << format_value(c[static_cast<std::size_t>(k)], exact) << "\n";
  } else if (kind == "jacobi") {
    const auto J = measure_coeffs(std::max(n, 1));
    std::cout << "n,b,a\n";
    for (int k = 0; k <= n; ++k)
      std::cout << k << "," << format_value(J.b[static_cast<std::size_t>(k)], exact) << ","
                << format_value(J.a[static_cast<std::size_t>(k)], exact) << "\n";
  } else {  // series
    TruncatedSeries<Rat> s(n);
    if (which == "psi")
      s = p.framework == Framework::Free ? psi_free(p, n) : classical_psi<Rat>(p, n);
    else if (which == "psi-inv")
      s = psi_inv<Rat>(p, n);
    else if (which == "cumulant")
      s = cumulant_series<Rat>(p, std::max(n, 2)).truncated(n);
    else if (which == "c-compose-psi")
      s = p.framework == Framework::Free
              ? c_compose_psi_free<Rat>(scalar_from<Rat>(p.lambda), scalar_from<Rat>(p.eta), n)
              : cumulant_series<Rat>(p, std::max(n, 2)).compose(classical_psi<Rat>(p, n)).truncated(n);
    else
      throw std::invalid_argument("unknown series '" + which + "'");
    std::cout << "k,coefficient\n";
    for (int k = 0; k <= n; ++k) std::cout << k << "," << format_value(s[k], exact) << "\n";
  }
  return 0;
}

int run_quad(const ParamFlags& flags, int m, const std::string& measure, bool support) {
  const MeixnerParams p = resolve_single_point(flags);
  const int upto = std::max(m, 1);
  const auto J = measure == "nu" ? nu_jacobi<Rat>(p, upto) : mu_jacobi<Rat>(p, upto);
  const auto D = to_double_coeffs(J);
  if (support) {
    const auto [lo, hi] = support_estimate(D, m);
    std::cout << "lo,hi\n" << format_double(lo) << "," << format_double(hi) << "\n";
    return 0;
  }
  const auto rule = gauss_quadrature(D, m);
  std::cout << "node,weight\n";
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    std::cout << format_double(rule.nodes[i]) << "," << format_double(rule.weights[i]) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification tools for the classical and free Meixner polynomial classes"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run identity verification suites");
  ParamFlags vflags;
  add_param_flags(verify, vflags);
  std::string suite = "all", format = "table";
  int order = default_order();
  double tolerance = 1e-10;
  verify->add_option("--suite", suite, "lowering|raising|series|cumulants|decomposition|all");
  verify->add_option("--order,-n", order, "truncation order / max degree")
      ->check(CLI::Range(3, 64));
  verify->add_option("--format", format, "table|json|csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  verify->add_option("--tolerance", tolerance, "float-path tolerance (default 1e-10)");

  // table
  auto* table = app.add_subcommand("table", "emit CSV tables");
  ParamFlags tflags;
  std::string tkind, measure = "mu", which = "psi-inv";
  int tn = 8;
  table->add_option("kind", tkind, "poly|moments|cumulants|jacobi|series")
      ->required()
      ->check(CLI::IsMember({"poly", "moments", "cumulants", "jacobi", "series"}));
  add_param_flags(table, tflags);
  table->add_option("--order,-n", tn, "max index (inclusive)")->check(CLI::Range(0, 64));
  table->add_option("--measure", measure, "mu|nu")->check(CLI::IsMember({"mu", "nu"}));
  table->add_option("--which", which, "psi|psi-inv|cumulant|c-compose-psi");

  // quad
  auto* quad = app.add_subcommand("quad", "Gauss quadrature rules and support estimates");
  ParamFlags qflags;
  add_param_flags(quad, qflags);
  int qm = 8;
  bool qsupport = false;
  std::string qmeasure = "mu";
  quad->add_option("-m", qm, "node count")->check(CLI::Range(1, 500));
  quad->add_option("--measure", qmeasure, "mu|nu")->check(CLI::IsMember({"mu", "nu"}));
  quad->add_flag("--support", qsupport, "print the [min node, max node] support estimate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  vflags.have_lambda = verify->count("--lambda") > 0;
  vflags.have_eta = verify->count("--eta") > 0;
  tflags.have_lambda = table->count("--lambda") > 0;
  tflags.have_eta = table->count("--eta") > 0;
  qflags.have_lambda = quad->count("--lambda") > 0;
  qflags.have_eta = quad->count("--eta") > 0;

  try {
    if (app.got_subcommand(verify)) return run_verify(vflags, suite, order, tolerance, format);
    if (app.got_subcommand(table)) return run_table(tkind, tflags, tn, measure, which);
    if (app.got_subcommand(quad)) return run_quad(qflags, qm, qmeasure, qsupport);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
