#pragma once

#include <cstdlib>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "arctanpow/arctanpow.hpp"

namespace arctanpow::cli {

enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ARCTANPOW_PRECISION, when set, replaces the 256-bit default.
inline long default_precision() {
  const char* env = std::getenv("ARCTANPOW_PRECISION");
  if (env == nullptr || *env == '\0') return kDefaultPrecisionBits;
  char* end = nullptr;
  const long bits = std::strtol(env, &end, 10);
  if (*end != '\0' || bits < 16) throw UsageError("ARCTANPOW_PRECISION must be an integer >= 16");
  return bits;
}

struct Options {
  std::string format;
  long k_max = -1;
  long n_max = -1;
  long m_max = -1;
  long n = 1;
  std::string x;
  long precision = 0;
  long max_terms = 2000;
  long terms = 0;
  bool accelerate = false;
  bool fast = false;
  bool bruteforce = false;
  std::string suite;
  std::string what;
};

namespace detail {

inline int cmd_coeffs(const Options& o, std::ostream& out) {
  if (o.k_max < 0 || o.n_max < 0) throw UsageError("--kmax and --nmax must be >= 0");
  CoeffTable table;
  RouteSet routes;
  routes.bruteforce = o.bruteforce;
  fill_triangle(o.k_max, o.n_max, table, routes);
  const auto entries = table.entries(o.k_max, o.n_max);
  if (o.format == "json") {
    out << coeffs_json(entries).dump(2) << '\n';
  } else if (o.format == "plain") {
    for (const auto& e : entries)
      out << "t_" << e.index.k << "(" << e.index.n << ") = " << to_string(e.value) << "  [" << method_list(e.methods)
          << "]\n";
  } else {
    write_coeffs_csv(out, entries);
  }
  return kSuccess;
}

inline int cmd_eval(const Options& o, std::ostream& out) {
  if (o.n < 1) throw UsageError("-n must be >= 1");
  if (o.max_terms < 1) throw UsageError("--max-terms must be >= 1");
  BigFloat x(o.precision);
  try {
    x = BigFloat::parse(o.x, o.precision);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (abs(x) >= BigFloat(1, o.precision))
    throw UsageError("eval needs |x| < 1; use the `pi` subcommand for the sum at x = 1");
  CoeffTable table;
  const EvalResult r = eval_expansion(o.n, x, o.max_terms, table);
  const BigFloat oracle = direct_oracle(o.n, x);
  const BigFloat err = abs(r.value - oracle);
  const bool ok = err <= r.tail_bound + rounding_slack(o.precision);
  if (o.format == "plain") {
    out << "value      " << r.value.to_string() << "\noracle     " << oracle.to_string() << "\nterms      "
        << r.terms_used << "\ntail_bound " << r.tail_bound.to_string(20) << "\nabs_error  " << err.to_string(20)
        << "\n";
  } else {
    out << eval_report_json(o.n, o.x, r, oracle).dump(2) << '\n';
  }
  return ok ? kSuccess : kFailure;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  VerifyGrid grid = o.fast ? VerifyGrid::fast() : VerifyGrid{};
  if (o.k_max >= 0) grid.theorem1_k_max = grid.k_max = grid.digamma_k_max = o.k_max;
  if (o.n_max >= 0) grid.n_max = grid.table1_n_max = grid.t3_n_max = grid.degenerate_n_max = grid.series_n_max = o.n_max;
  if (o.m_max >= 0) grid.m_max = grid.lemma_m_max = o.m_max;

  std::vector<const Suite*> selected;
  if (o.suite == "all") {
    for (const auto& s : verify_suites()) selected.push_back(&s);
  } else if (const Suite* s = find_suite(o.suite)) {
    selected.push_back(s);
  } else {
    std::string names;
    for (const auto& s : verify_suites()) names += " " + std::string(s.name);
    throw UsageError("unknown suite '" + o.suite + "'; expected all or one of:" + names);
  }

  CoeffTable table;
  std::vector<VerifyReport> reports;
  for (const Suite* s : selected) reports.push_back(s->run(grid, table));

  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.pass();
  if (o.format == "plain") {
    for (const auto& r : reports) {
      out << (r.pass() ? "PASS " : "FAIL ") << r.identity << "  cases=" << r.cases << "  " << r.elapsed_ms << " ms\n";
      if (r.first_failure) out << "  first failure: " << to_json(r).at("first_failure").dump() << '\n';
      for (const auto& note : r.notes) out << "  " << note << '\n';
    }
  } else if (o.format == "csv") {
    out << "identity,cases,pass,elapsed_ms\n";
    for (const auto& r : reports) out << r.identity << ',' << r.cases << ',' << (r.pass() ? 1 : 0) << ',' << r.elapsed_ms << '\n';
  } else {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : reports) j.push_back(to_json(r));
    out << j.dump(2) << '\n';
  }
  return all_pass ? kSuccess : kFailure;
}

inline int cmd_pi(const Options& o, std::ostream& out) {
  if (o.n < 1) throw UsageError("-n must be >= 1");
  const long terms = o.terms > 0 ? o.terms : (o.accelerate ? 200 : 100000);
  CoeffTable table;
  const EvalResult r = pi_power_sum(o.n, terms, o.accelerate, table, o.precision);
  const BigFloat reference = pi_power_reference(o.n, o.precision);
  const BigFloat diff = abs(r.value - reference);
  const bool ok = r.heuristic_bound || diff <= r.tail_bound + rounding_slack(o.precision);
  if (o.format == "plain") {
    out << "value      " << r.value.to_string() << "\nreference  " << reference.to_string() << "\nabs_diff   "
        << diff.to_string(20) << "\nterms      " << r.terms_used << "\n";
  } else {
    nlohmann::ordered_json j;
    j["n"] = o.n;
    j["accelerated"] = o.accelerate;
    j["precision_bits"] = o.precision;
    j["terms_used"] = r.terms_used;
    j["value"] = r.value.to_string();
    j["reference"] = reference.to_string();
    j["abs_diff"] = diff.to_string(20);
    j["tail_bound"] = r.tail_bound.to_string(20);
    j["heuristic_bound"] = r.heuristic_bound;
    out << j.dump(2) << '\n';
  }
  return ok ? kSuccess : kFailure;
}

inline int cmd_table1(const Options& o, std::ostream& out) {
  const long n_max = o.n_max >= 0 ? o.n_max : 12;
  CoeffTable table;
  const VerifyReport report = verify_table1(n_max, table);
  if (o.format == "csv") {
    out << "m,printed,rederived,matches_printed\n";
    for (long m = 1; m <= 5; ++m) {
      const Poly p = printed_derivative_row(m), d = rederived_derivative_row(m);
      out << m << ",\"" << p.to_string("n") << "\",\"" << d.to_string("n") << "\"," << (p == d ? 1 : 0) << '\n';
    }
  } else if (o.format == "plain") {
    for (long m = 1; m <= 5; ++m)
      out << "m=" << m << "  " << rederived_derivative_row(m).to_string("n") << '\n';
    for (long m = 1; m <= 5; ++m) {
      out << "m=" << m << " values n=1.." << n_max << ":";
      for (long n = 1; n <= n_max; ++n) out << ' ' << to_string(derivative_coeff(n, m, table));
      out << '\n';
    }
    for (const auto& note : report.notes) out << note << '\n';
    out << (report.pass() ? "PASS" : "FAIL") << " (" << report.cases << " cases)\n";
  } else {
    nlohmann::ordered_json j;
    j["rows"] = nlohmann::ordered_json::array();
    for (long m = 1; m <= 5; ++m) {
      const Poly p = printed_derivative_row(m), d = rederived_derivative_row(m);
      nlohmann::ordered_json values = nlohmann::ordered_json::array();
      for (long n = 1; n <= n_max; ++n) values.push_back(to_string(derivative_coeff(n, m, table)));
      j["rows"].push_back({{"m", m}, {"printed", p.to_string("n")}, {"rederived", d.to_string("n")},
                           {"matches_printed", p == d}, {"values", values}});
    }
    j["errata"] = report.notes;
    j["verify"] = to_json(report);
    out << j.dump(2) << '\n';
  }
  return report.pass() ? kSuccess : kFailure;
}

inline int cmd_export(const Options& o, std::ostream& out) {
  const bool json = o.format == "json";
  if (o.what == "coeffs") {
    Options c = o;
    if (c.k_max < 0) c.k_max = 10;
    if (c.n_max < 0) c.n_max = 5;
    if (c.format == "plain") c.format = "csv";
    return cmd_coeffs(c, out);
  }
  if (o.what == "stirling") {
    const long n_max = o.n_max >= 0 ? o.n_max : 10;
    if (json) out << stirling_json(n_max).dump(2) << '\n';
    else write_stirling_csv(out, n_max);
    return kSuccess;
  }
  const long m_max = o.m_max >= 0 ? o.m_max : 14;
  if (json) out << p_json(m_max).dump(2) << '\n';
  else write_p_csv(out, m_max);
  return kSuccess;
}

}  // namespace detail

/// Runs one CLI invocation. Reports go to out, diagnostics to err.
/// Exit codes: 0 success, 1 verification or accuracy failure, 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  try {
    o.precision = default_precision();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  CLI::App app{"Exact coefficients, evaluation and identity checks for powers of arctan(x)/x"};
  app.require_subcommand(1);
  const std::vector<std::string> tabular{"csv", "json", "plain"};

  auto* coeffs = app.add_subcommand("coeffs", "Print the coefficient triangle t_k(n), cross-checked by every route");
  coeffs->add_option("--kmax", o.k_max, "Largest k")->required();
  coeffs->add_option("--nmax", o.n_max, "Largest n")->required();
  coeffs->add_flag("--bruteforce", o.bruteforce, "Also run the nested-sum route (small grids only)");
  coeffs->add_option("--format", o.format, "Output format (default csv)")->check(CLI::IsMember(tabular));

  auto* eval = app.add_subcommand("eval", "Evaluate the expansion at |x| < 1 and compare with a direct evaluation");
  eval->add_option("-n", o.n, "Power")->required();
  eval->add_option("-x", o.x, "Point, as a decimal string")->required();
  eval->add_option("--precision", o.precision, "Working precision in bits")->check(CLI::Range(16L, 1L << 20));
  eval->add_option("--max-terms", o.max_terms, "Maximum number of terms");
  eval->add_option("--format", o.format, "Output format (default json)")->check(CLI::IsMember({"json", "plain"}));

  auto* verify = app.add_subcommand("verify", "Run identity verification suites");
  verify->add_option("suite", o.suite, "Suite name or 'all'")->required();
  verify->add_option("--kmax", o.k_max, "Override the k bound");
  verify->add_option("--nmax", o.n_max, "Override the n bound");
  verify->add_option("--mmax", o.m_max, "Override the m bound");
  verify->add_flag("--fast", o.fast, "Use small grids");
  verify->add_option("--format", o.format, "Output format (default json)")->check(CLI::IsMember(tabular));

  auto* pi = app.add_subcommand("pi", "Sum the expansion at x = 1 and compare with pi^n / (2^n n!)");
  pi->add_option("-n", o.n, "Power")->required();
  pi->add_option("--terms", o.terms, "Number of terms (default 100000 plain, 200 accelerated)");
  pi->add_flag("--accelerate", o.accelerate, "Apply the Euler transform");
  pi->add_option("--precision", o.precision, "Working precision in bits")->check(CLI::Range(16L, 1L << 20));
  pi->add_option("--format", o.format, "Output format (default json)")->check(CLI::IsMember({"json", "plain"}));

  auto* table1 = app.add_subcommand("table1", "Derivative table at x = 0, printed versus re-derived");
  table1->add_option("--nmax", o.n_max, "Largest n to tabulate");
  table1->add_option("--format", o.format, "Output format (default json)")->check(CLI::IsMember(tabular));

  auto* exporter = app.add_subcommand("export", "Export coefficient, Stirling or p tables");
  exporter->add_option("what", o.what, "Table to export")->required()->check(CLI::IsMember({"coeffs", "stirling", "p"}));
  exporter->add_option("--kmax", o.k_max, "Largest k (coeffs)");
  exporter->add_option("--nmax", o.n_max, "Largest n (coeffs, stirling)");
  exporter->add_option("--mmax", o.m_max, "Largest m (p)");
  exporter->add_option("--format", o.format, "Output format (default csv)")->check(CLI::IsMember({"csv", "json"}));

  std::vector<std::string> argv_storage{"arctanpow"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    // --format is shared by every subcommand, so defaults are applied here.
    auto with_format = [&](const char* fallback) -> const Options& {
      if (o.format.empty()) o.format = fallback;
      return o;
    };
    if (*coeffs) return detail::cmd_coeffs(with_format("csv"), out);
    if (*eval) return detail::cmd_eval(with_format("json"), out);
    if (*verify) return detail::cmd_verify(with_format("json"), out);
    if (*pi) return detail::cmd_pi(with_format("json"), out);
    if (*table1) return detail::cmd_table1(with_format("json"), out);
    if (*exporter) return detail::cmd_export(with_format("csv"), out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CoeffClash& e) {
    err << "coefficient routes disagree: " << e.what() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace arctanpow::cli
