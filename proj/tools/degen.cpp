// Command-line frontend: exact values, triangular tables, generating-function
// coefficients, and the verification suites with machine-readable reports.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "degen/basics.hpp"
#include "degen/families.hpp"
#include "degen/poly.hpp"
#include "degen/rational.hpp"
#include "degen/stirling.hpp"
#include "degen/verify.hpp"

namespace {

using degen::LambdaPoly;
using degen::Rational;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Rational parse_rational(const std::string& text, const char* flag) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError(std::string("invalid rational for ") + flag + ": " + text);
  }
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  return out + "\"";
}

std::string join_coeffs(const std::vector<Rational>& coeffs) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ", ";
    out += coeffs[i].str();
  }
  return out;
}

struct ComputeArgs {
  std::string family;
  std::optional<int> n, k, r;
  std::optional<std::string> x, lambda;
};

int require_n(const ComputeArgs& a) {
  if (!a.n) throw UsageError("missing --n");
  if (*a.n < 0) throw UsageError("--n must be nonnegative");
  return *a.n;
}

std::string run_compute(const ComputeArgs& a) {
  const auto lambda = [&]() -> std::optional<Rational> {
    if (!a.lambda) return std::nullopt;
    return parse_rational(*a.lambda, "--lambda");
  }();
  const auto x = [&]() -> std::optional<Rational> {
    if (!a.x) return std::nullopt;
    return parse_rational(*a.x, "--x");
  }();

  if (a.family == "ffl") {
    const int n = require_n(a);
    if (!x || !lambda) throw UsageError("ffl needs --x and --lambda");
    return degen::falling_factorial_lambda(*x, static_cast<unsigned>(n), *lambda).str();
  }
  if (a.family == "s1" || a.family == "s2") {
    const int n = require_n(a);
    if (!a.k) throw UsageError("missing --k");
    const LambdaPoly entry =
        a.family == "s1" ? degen::s1_lambda(n, *a.k) : degen::s2_lambda(n, *a.k);
    if (lambda) return entry.eval(*lambda).str();
    return degen::format_poly(entry);
  }
  if (a.family == "bell" || a.family == "fubini") {
    const int n = require_n(a);
    const degen::DensePoly<LambdaPoly> poly =
        a.family == "bell" ? degen::bell_poly(n) : degen::fubini_poly(n);
    if (x && !lambda) throw UsageError("--x needs --lambda");
    if (lambda && x) return degen::eval_lambda(poly, *lambda).eval(*x).str();
    if (lambda) return degen::format_poly(degen::eval_lambda(poly, *lambda), "x");
    return degen::format_poly_in_x(poly);
  }
  if (a.family == "bernoulli" || a.family == "euler") {
    const int n = require_n(a);
    if (!lambda) throw UsageError("missing --lambda");
    const Rational at = x ? *x : Rational(0);
    return (a.family == "bernoulli" ? degen::bernoulli_carlitz(n, *lambda, at)
                                    : degen::euler_degenerate(n, *lambda, at))
        .str();
  }
  if (a.family == "polybernoulli") {
    const int n = require_n(a);
    if (!lambda) throw UsageError("missing --lambda");
    if (!a.r) throw UsageError("missing --r");
    const Rational at = x ? *x : Rational(0);
    return degen::poly_bernoulli(n, *a.r, *lambda, at).str();
  }
  if (a.family == "dlog") {
    const int n = require_n(a);
    if (lambda) return degen::degenerate_log(*lambda, static_cast<std::size_t>(n))[static_cast<std::size_t>(n)].str();
    if (n == 0) return "0";
    LambdaPoly acc{Rational(1)};
    for (int i = 1; i < n; ++i) acc *= LambdaPoly{Rational(-i), Rational(1)};  // L - i
    acc = acc * degen::factorial(static_cast<unsigned long>(n)).inverse();
    return degen::format_poly(acc);
  }
  throw UsageError("unknown family: " + a.family);
}

std::string run_table(const std::string& family, int max_n, const std::string& format) {
  if (max_n < 0) throw UsageError("--max-n must be nonnegative");
  auto entry = [&](int n, int k) -> std::string {
    if (family == "s1") return degen::format_poly(degen::s1_lambda(n, k));
    if (family == "s2") return degen::format_poly(degen::s2_lambda(n, k));
    if (family == "bell") return degen::format_poly(degen::bell_poly(n).coeff(static_cast<std::size_t>(k)));
    if (family == "fubini")
      return degen::format_poly(degen::fubini_poly(n).coeff(static_cast<std::size_t>(k)));
    throw UsageError("unknown table family: " + family);
  };
  std::vector<std::vector<std::string>> rows;
  for (int n = 0; n <= max_n; ++n) {
    std::vector<std::string> row;
    for (int k = 0; k <= n; ++k) row.push_back(entry(n, k));
    rows.push_back(std::move(row));
  }
  if (format == "csv") {
    std::string out;
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        out += csv_field(row[i]);
      }
      out += "\r\n";
    }
    return out;
  }
  if (format == "json") {
    nlohmann::json j;
    j["schema"] = 1;
    j["family"] = family;
    j["max_n"] = max_n;
    j["rows"] = rows;
    return j.dump(2) + "\n";
  }
  throw UsageError("unknown format: " + format);
}

std::string run_series(const std::string& gf, int order, const std::string& lambda_text,
                       const std::optional<std::string>& x_text, const std::optional<int>& r) {
  if (order < 0) throw UsageError("--order must be nonnegative");
  const Rational lambda = parse_rational(lambda_text, "--lambda");
  const auto req_order = static_cast<std::size_t>(order);
  auto x_or = [&](long def) {
    return x_text ? parse_rational(*x_text, "--x") : Rational(def);
  };
  std::vector<Rational> coeffs;
  if (gf == "dexp")
    coeffs = degen::degenerate_exp(x_or(1), lambda, req_order).coeffs();
  else if (gf == "dlog")
    coeffs = degen::degenerate_log(lambda, req_order).coeffs();
  else if (gf == "bernoulli")
    coeffs = degen::bernoulli_gf(lambda, x_or(0), req_order).coeffs();
  else if (gf == "fubini")
    coeffs = degen::fubini_gf(lambda, x_or(1), req_order).coeffs();
  else if (gf == "euler")
    coeffs = degen::euler_gf(lambda, x_or(0), req_order).coeffs();
  else if (gf == "polybernoulli") {
    if (!r) throw UsageError("missing --r");
    coeffs = degen::poly_bernoulli_gf(*r, lambda, x_or(0), req_order).coeffs();
  } else {
    throw UsageError("unknown generating function: " + gf);
  }
  return join_coeffs(coeffs) + "\n";
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation and identity verification for deformed special sequences"};
  app.require_subcommand(1);

  ComputeArgs compute_args;
  auto* compute = app.add_subcommand("compute", "print one exact value or lambda-polynomial");
  compute->add_option("family", compute_args.family,
                      "ffl | s1 | s2 | bell | fubini | bernoulli | euler | polybernoulli | dlog")
      ->required();
  std::optional<int> c_n, c_k, c_r;
  std::optional<std::string> c_x, c_lambda;
  compute->add_option("--n", c_n, "index n");
  compute->add_option("--k", c_k, "column k");
  compute->add_option("--r", c_r, "polylog order");
  compute->add_option("--x", c_x, "evaluation point x (rational)");
  compute->add_option("--lambda", c_lambda, "deformation parameter (rational)");

  std::string t_family, t_format = "csv", t_out;
  int t_max_n = 8;
  auto* table = app.add_subcommand("table", "emit a triangular table");
  table->add_option("family", t_family, "s1 | s2 | bell | fubini")->required();
  table->add_option("--max-n", t_max_n, "largest row index");
  table->add_option("--format", t_format, "csv | json");
  table->add_option("--out", t_out, "output path (default stdout)");

  std::string s_gf, s_lambda, s_out;
  std::optional<std::string> s_x;
  std::optional<int> s_r;
  int s_order = 16;
  auto* series = app.add_subcommand("series", "print generating-function coefficients c0..cN");
  series->add_option("gf", s_gf, "dexp | dlog | bernoulli | fubini | euler | polybernoulli")
      ->required();
  series->add_option("--order", s_order, "truncation order N");
  series->add_option("--lambda", s_lambda, "deformation parameter (rational)")->required();
  series->add_option("--x", s_x, "evaluation point x (rational)");
  series->add_option("--r", s_r, "polylog order");
  series->add_option("--out", s_out, "output path (default stdout)");

  degen::SuiteConfig config;
  std::string v_suites = "all", v_out;
  std::optional<std::uint64_t> v_seed;
  auto* verify = app.add_subcommand("verify", "run verification suites and write a JSON report");
  verify->add_option("--suites", v_suites, "comma list: basics,stirling,families,transform,opcalc,all");
  verify->add_option("--max-n", config.max_n, "largest index in the grids");
  verify->add_option("--truncation", config.truncation, "series truncation order");
  verify->add_option("--seed", v_seed, "grid seed (64-bit)");
  verify->add_option("--out", v_out, "report path (default stdout)");
  std::string v_fault;
  verify->add_option("--inject-fault", v_fault, "offset the right side of one registry id (self-test)")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) {
      compute_args.n = c_n;
      compute_args.k = c_k;
      compute_args.r = c_r;
      compute_args.x = c_x;
      compute_args.lambda = c_lambda;
      std::cout << run_compute(compute_args) << "\n";
    } else if (table->parsed()) {
      write_output(t_out, run_table(t_family, t_max_n, t_format));
    } else if (series->parsed()) {
      write_output(s_out, run_series(s_gf, s_order, s_lambda, s_x, s_r));
    } else if (verify->parsed()) {
      config.suites = split_csv(v_suites);
      if (v_seed) {
        config.seed = *v_seed;
      } else if (const char* env = std::getenv("DEGEN_SEED")) {
        try {
          config.seed = std::stoull(env);
        } catch (const std::exception&) {
          throw UsageError(std::string("invalid DEGEN_SEED: ") + env);
        }
      }
      config.output_path = v_out;
      config.inject_fault = v_fault;
      const degen::VerificationReport report = degen::run_verification(config);
      write_output(v_out, degen::report_to_json(report));
      std::cerr << report.records.size() << " checks, " << report.failures << " failures\n";
      return report.failures == 0 ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
