#include "degen/transform.hpp"

#include <stdexcept>

#include "degen/basics.hpp"
#include "degen/families.hpp"
#include "degen/stirling.hpp"

namespace degen {

Rational eval_dseries(const DegenerateSeries& f, const Rational& t) {
  Rational acc(0);
  Rational basis(1);  // running (t)_{k,lam}
  Rational factor = t;
  for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
    if (k > 0) {
      basis *= factor;
      factor -= f.lambda;
    }
    acc += f.coeffs[k] * basis;
  }
  return acc;
}

Rational dseries_derivative_at_zero(const DegenerateSeries& f) {
  Rational acc(0);
  Rational weight(1);  // running (-1)^(k-1) lam^(k-1) (k-1)!
  for (std::size_t k = 1; k < f.coeffs.size(); ++k) {
    if (k > 1) weight *= -f.lambda * Rational(static_cast<long>(k - 1));
    acc += f.coeffs[k] * weight;
  }
  return acc;
}

Rational finite_difference(const DegenerateSeries& f, int n, const Rational& y, const Rational& z) {
  if (n < 0) throw std::invalid_argument("negative difference order");
  Rational acc(0);
  for (int k = 0; k <= n; ++k) {
    Rational term = binomial(n, k) * eval_dseries(f, y + z * Rational(k));
    if (k % 2 != 0) term = -term;
    acc += term;
  }
  return acc;
}

namespace {

// Classical Stirling numbers from their own recurrences; deliberately not
// routed through the deformed tables so the two sides of T9 stay independent.
Rational classical_s2(int n, int k) {
  static std::vector<std::vector<Rational>> rows{{Rational(1)}};
  if (k < 0 || k > n) return Rational(0);
  while (static_cast<int>(rows.size()) <= n) {
    const auto& prev = rows.back();
    const int pn = static_cast<int>(rows.size()) - 1;
    std::vector<Rational> row(rows.size() + 1, Rational(0));
    for (int j = 1; j <= pn + 1; ++j) {
      row[static_cast<std::size_t>(j)] = (j - 1 <= pn ? prev[static_cast<std::size_t>(j - 1)] : Rational(0));
      if (j <= pn) row[static_cast<std::size_t>(j)] += Rational(j) * prev[static_cast<std::size_t>(j)];
    }
    rows.push_back(std::move(row));
  }
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Rational classical_s1_signed(int n, int k) {
  static std::vector<std::vector<Rational>> rows{{Rational(1)}};
  if (k < 0 || k > n) return Rational(0);
  while (static_cast<int>(rows.size()) <= n) {
    const auto& prev = rows.back();
    const int pn = static_cast<int>(rows.size()) - 1;
    std::vector<Rational> row(rows.size() + 1, Rational(0));
    for (int j = 1; j <= pn + 1; ++j) {
      row[static_cast<std::size_t>(j)] = (j - 1 <= pn ? prev[static_cast<std::size_t>(j - 1)] : Rational(0));
      if (j <= pn) row[static_cast<std::size_t>(j)] -= Rational(pn) * prev[static_cast<std::size_t>(j)];
    }
    rows.push_back(std::move(row));
  }
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Rational signed_factorial(int n) {
  Rational v = factorial(static_cast<unsigned long>(n));
  return n % 2 != 0 ? -v : v;
}

struct Comparison {
  Rational lhs;
  Rational rhs;
};
using Comparisons = std::vector<Comparison>;

int require_int(const std::optional<int>& v, const char* name) {
  if (!v) throw std::invalid_argument(std::string("missing parameter: ") + name);
  return *v;
}

Rational require_rat(const std::optional<Rational>& v, const char* name) {
  if (!v) throw std::invalid_argument(std::string("missing parameter: ") + name);
  return *v;
}

std::vector<Rational> require_f(const IdentityParams& p) {
  if (!p.f || p.f->empty()) throw std::invalid_argument("missing parameter: f");
  return *p.f;
}

Rational require_nonzero(Rational v, const char* name) {
  if (v.is_zero()) throw std::domain_error(std::string(name) + " must be nonzero");
  return v;
}

int require_nonneg(int v, const char* name) {
  if (v < 0) throw std::domain_error(std::string(name) + " must be nonnegative");
  return v;
}

Comparisons check_t1(const IdentityParams& p) {
  const int n = require_nonneg(require_int(p.n, "n"), "n");
  const int m = require_nonneg(require_int(p.m, "m"), "m");
  const Rational y = require_rat(p.y, "y");
  const Rational z = require_nonzero(require_rat(p.z, "z"), "z");
  const Rational lam = require_rat(p.lambda, "lambda");
  Rational lhs(0);
  for (int k = 0; k <= n; ++k) {
    Rational term = binomial(n, k) * falling_factorial_lambda(y + z * Rational(k), m, lam);
    if (k % 2 != 0) term = -term;
    lhs += term;
  }
  Rational sum(0);
  for (int q = 0; q <= m; ++q)
    sum += binomial(m, q) * pow(z, q) * falling_factorial_lambda(y, m - q, lam) *
           s2_lambda_at(q, n, lam / z);
  return {{lhs, signed_factorial(n) * sum}};
}

Comparisons check_t3(const IdentityParams& p) {
  const int n = require_nonneg(require_int(p.n, "n"), "n");
  const Rational y = require_rat(p.y, "y");
  const Rational z = require_nonzero(require_rat(p.z, "z"), "z");
  const Rational lam = require_rat(p.lambda, "lambda");
  const DegenerateSeries f{require_f(p), lam};
  const Rational lhs = finite_difference(f, n, y, z);
  const Rational lz = lam / z;
  Rational sum(0);
  for (int m = 0; m <= f.support(); ++m) {
    Rational inner(0);
    for (int q = 0; q <= m; ++q)
      inner += binomial(m, q) * s2_lambda_at(q, n, lz) * pow(z, q) *
               falling_factorial_lambda(y, m - q, lam);
    sum += f.coeffs[static_cast<std::size_t>(m)] * inner;
  }
  Comparisons out{{lhs, signed_factorial(n) * sum}};
  if (y.is_zero()) {
    Rational special(0);
    for (int m = 0; m <= f.support(); ++m)
      special += f.coeffs[static_cast<std::size_t>(m)] * s2_lambda_at(m, n, lz) * pow(z, m);
    out.push_back({lhs, signed_factorial(n) * special});
  }
  return out;
}

Comparisons check_t4(const IdentityParams& p) {
  const int n = require_nonneg(require_int(p.n, "n"), "n");
  const Rational y = require_rat(p.y, "y");
  const Rational z = require_nonzero(require_rat(p.z, "z"), "z");
  const Rational lam = require_rat(p.lambda, "lambda");
  Rational lhs(0);
  for (int k = 0; k <= n; ++k) {
    Rational term = binomial(n, k) * falling_factorial_lambda(y + z * Rational(k), n, lam);
    if (k % 2 != 0) term = -term;
    lhs += term;
  }
  return {{lhs, signed_factorial(n) * pow(z, n)}};
}

Comparisons check_t6(const IdentityParams& p) {
  const Rational z = require_nonzero(require_rat(p.z, "z"), "z");
  const Rational lam = require_rat(p.lambda, "lambda");
  const DegenerateSeries f{require_f(p), lam};
  Rational lhs(0);
  for (int n = 1; n <= f.support(); ++n)
    lhs += finite_difference(f, n, Rational(0), z) / Rational(n);
  return {{lhs, -z * dseries_derivative_at_zero(f)}};
}

Comparisons check_l5(const IdentityParams& p) {
  const int n = require_int(p.n, "n");
  if (n < 1) throw std::domain_error("needs n >= 1");
  const Rational lam = require_rat(p.lambda, "lambda");
  Rational lhs(0);
  for (int k = 1; k <= n; ++k) {
    Rational term = s2_lambda_at(n, k, lam) * factorial(static_cast<unsigned long>(k - 1));
    if ((k - 1) % 2 != 0) term = -term;
    lhs += term;
  }
  Rational rhs = pow(lam, n - 1) * factorial(static_cast<unsigned long>(n - 1));
  if ((n - 1) % 2 != 0) rhs = -rhs;
  return {{lhs, rhs}};
}

Comparisons check_l8(const IdentityParams& p) {
  const int n = require_nonneg(require_int(p.n, "n"), "n");
  const int q = require_nonneg(require_int(p.p, "p"), "p");
  const Rational z = require_nonzero(require_rat(p.z, "z"), "z");
  const Rational lam = require_rat(p.lambda, "lambda");
  Rational lhs(0);
  for (int k = 0; k <= n; ++k) {
    Rational term = binomial(n, k) * lambda_binomial(z * Rational(k), static_cast<unsigned>(q), lam);
    if (k % 2 != 0) term = -term;
    lhs += term;
  }
  const Rational rhs = signed_factorial(n) / factorial(static_cast<unsigned long>(q)) *
                       s2_lambda_at(q, n, lam / z) * pow(z, q);
  return {{lhs, rhs}};
}

Comparisons check_t9(const IdentityParams& p) {
  const int n = require_nonneg(require_int(p.n, "n"), "n");
  const int q = require_nonneg(require_int(p.p, "p"), "p");
  if (q < n) throw std::domain_error("needs p >= n (the sums run m = n..p)");
  const Rational z = require_nonzero(require_rat(p.z, "z"), "z");
  const Rational lam = require_rat(p.lambda, "lambda");
  Rational lhs(0), rhs(0);
  for (int m = n; m <= q; ++m) {
    lhs += classical_s2(m, n) * classical_s1_signed(q, m) * pow(z, m);
    rhs += s2_lambda_at(m, n, lam / z) * s1_lambda_at(q, m, lam) * pow(z, m);
  }
  return {{lhs, rhs}};
}

Comparisons check_t10(const IdentityParams& p) {
  const Rational x = require_rat(p.x, "x");
  const Rational y = require_rat(p.y, "y");
  const Rational z = require_nonzero(require_rat(p.z, "z"), "z");
  const Rational lam = require_rat(p.lambda, "lambda");
  const DegenerateSeries f{require_f(p), lam};
  const Rational lz = lam / z;
  Rational lhs(0);
  for (int n = 0; n <= f.support(); ++n)
    lhs += pow(x, n) / factorial(static_cast<unsigned long>(n)) * finite_difference(f, n, y, z);
  Rational rhs(0);
  for (int m = 0; m <= f.support(); ++m) {
    Rational inner(0);
    for (int q = 0; q <= m; ++q)
      inner += binomial(m, q) * falling_factorial_lambda(y, m - q, lam) * pow(z, q) *
               bell_poly_value(q, lz, -x);
    rhs += f.coeffs[static_cast<std::size_t>(m)] * inner;
  }
  Comparisons out{{lhs, rhs}};
  if (y.is_zero()) {
    Rational special(0);
    for (int m = 0; m <= f.support(); ++m)
      special += f.coeffs[static_cast<std::size_t>(m)] * pow(z, m) * bell_poly_value(m, lz, -x);
    out.push_back({lhs, special});
  }
  return out;
}

Comparisons check_t11(const IdentityParams& p) {
  const int q34 = require_nonneg(require_int(p.p, "p"), "p");
  const Rational x = require_rat(p.x, "x");
  const Rational y = require_rat(p.y, "y");
  const Rational z = require_nonzero(require_rat(p.z, "z"), "z");
  const Rational lam = require_rat(p.lambda, "lambda");
  const DegenerateSeries f{require_f(p), lam};
  const Rational lz = lam / z;
  Rational lhs(0);
  for (int n = 0; n <= f.support(); ++n) lhs += pow(x, n) * finite_difference(f, n, y, z);
  Rational rhs(0);
  for (int m = 0; m <= f.support(); ++m) {
    Rational inner(0);
    for (int q = 0; q <= m; ++q)
      inner += binomial(m, q) * falling_factorial_lambda(y, m - q, lam) * pow(z, q) *
               fubini_poly_value(q, lz, -x);
    rhs += f.coeffs[static_cast<std::size_t>(m)] * inner;
  }
  Comparisons out{{lhs, rhs}};
  if (y.is_zero()) {
    Rational special(0);
    for (int m = 0; m <= f.support(); ++m)
      special += f.coeffs[static_cast<std::size_t>(m)] * pow(z, m) * fubini_poly_value(m, lz, -x);
    out.push_back({lhs, special});
  }
  // Deformed-binomial instance: the same transform applied to binom(z*k, p)
  // collapses to a single Fubini value.
  Rational lhs34(0);
  for (int n = 0; n <= q34; ++n) {
    Rational diff(0);
    for (int k = 0; k <= n; ++k) {
      Rational term = binomial(n, k) * lambda_binomial(z * Rational(k), static_cast<unsigned>(q34), lam);
      if (k % 2 != 0) term = -term;
      diff += term;
    }
    lhs34 += pow(x, n) * diff;
  }
  const Rational rhs34 =
      pow(z, q34) * fubini_poly_value(q34, lz, -x) / factorial(static_cast<unsigned long>(q34));
  out.push_back({lhs34, rhs34});
  return out;
}

Comparisons check_t12(const IdentityParams& p) {
  const Rational x = require_rat(p.x, "x");
  const Rational z = require_nonzero(require_rat(p.z, "z"), "z");
  const Rational lam = require_rat(p.lambda, "lambda");
  const DegenerateSeries f{require_f(p), lam};
  Rational lhs(0);
  for (int n = 1; n <= f.support(); ++n)
    lhs += pow(x, n) / Rational(n) * finite_difference(f, n, Rational(0), z);
  Rational rhs(0);
  const Rational lz = lam / z;
  for (int m = 1; m <= f.support(); ++m) {
    Rational inner(0);
    for (int q = 1; q <= m; ++q) {
      Rational term = s2_lambda_at(m, q, lz) * factorial(static_cast<unsigned long>(q - 1)) * pow(x, q);
      if (q % 2 != 0) term = -term;
      inner += term;
    }
    rhs += f.coeffs[static_cast<std::size_t>(m)] * pow(z, m) * inner;
  }
  return {{lhs, rhs}};
}

Comparisons check_t13(const IdentityParams& p) {
  const int r = require_int(p.r, "r");
  const Rational y = require_rat(p.y, "y");
  const Rational z = require_nonzero(require_rat(p.z, "z"), "z");
  const Rational lam = require_rat(p.lambda, "lambda");
  const DegenerateSeries f{require_f(p), lam};
  const Rational lz = lam / z;
  const int m_max = f.support();

  Rational lhs(0);
  for (int n = 0; n <= m_max; ++n)
    lhs += pow(Rational(n + 1), -static_cast<long>(r)) * finite_difference(f, n, y, z);

  // Route via the poly-Bernoulli generating function at argument y/z.
  const Series<Rational> pb = poly_bernoulli_gf(r, lz, y / z, static_cast<std::size_t>(m_max) + 2);
  Rational via_gf(0);
  for (int m = 0; m <= m_max; ++m) {
    Rational term = f.coeffs[static_cast<std::size_t>(m)] * pow(z, m) *
                    factorial(static_cast<unsigned long>(m)) * pb[static_cast<std::size_t>(m)];
    if (m % 2 != 0) term = -term;
    via_gf += term;
  }

  // Route via the Stirling sums.
  Rational via_stirling(0);
  for (int m = 0; m <= m_max; ++m) {
    Rational inner(0);
    for (int q = 0; q <= m; ++q) {
      Rational jsum(0);
      for (int j = 0; j <= q; ++j) {
        Rational term = factorial(static_cast<unsigned long>(j)) * s2_lambda_at(q, j, lz) *
                        pow(Rational(j + 1), -static_cast<long>(r));
        if (j % 2 != 0) term = -term;
        jsum += term;
      }
      inner += binomial(m, q) * pow(z, q) * falling_factorial_lambda(y, m - q, lam) * jsum;
    }
    via_stirling += f.coeffs[static_cast<std::size_t>(m)] * inner;
  }
  return {{lhs, via_gf}, {lhs, via_stirling}};
}

Comparisons check_t14(const IdentityParams& p) {
  const int n = require_nonneg(require_int(p.n, "n"), "n");
  const Rational lam = require_rat(p.lambda, "lambda");
  const Rational lhs = bernoulli_carlitz(n, lam, Rational(0));
  // Weight (-lam)^m (1)_{m+1,1/lam} / (m+1)! in its closed form
  // (-1)^m (lam-1)(lam-2)...(lam-m) / (m+1)!, polynomial in lam.
  auto weight = [&](int m) {
    Rational w = falling_factorial(lam - Rational(1), static_cast<unsigned>(m)) /
                 factorial(static_cast<unsigned long>(m + 1));
    return m % 2 != 0 ? -w : w;
  };
  auto inner = [&](int m) {
    Rational acc(0);
    for (int k = 0; k <= m; ++k) {
      Rational term = binomial(m, k) * falling_factorial_lambda(Rational(k), static_cast<unsigned>(n), lam);
      if (k % 2 != 0) term = -term;
      acc += term;
    }
    return acc;
  };
  Rational truncated(0);
  for (int m = 0; m <= n; ++m) truncated += weight(m) * inner(m);
  // The dropped tail must vanish term by term, not be assumed to.
  Rational extended = truncated;
  for (int m = n + 1; m <= n + 4; ++m) extended += weight(m) * inner(m);
  return {{lhs, truncated}, {lhs, extended}};
}

Comparisons check_e58(const IdentityParams& p) {
  const Rational z = require_nonzero(require_rat(p.z, "z"), "z");
  const Rational lam = require_rat(p.lambda, "lambda");
  const DegenerateSeries f{require_f(p), lam};
  const Rational lz = lam / z;
  const int m_max = f.support();
  Rational lhs(0);
  for (int n = 0; n <= m_max; ++n)
    lhs += pow(Rational(1, 2), n) * finite_difference(f, n, Rational(0), z);
  Rational via_fubini(0);
  for (int m = 0; m <= m_max; ++m)
    via_fubini +=
        f.coeffs[static_cast<std::size_t>(m)] * pow(z, m) * fubini_poly_value(m, lz, Rational(-1, 2));
  const std::size_t order = static_cast<std::size_t>(m_max) + 3;
  const Series<Rational> b_full = bernoulli_gf(lz, Rational(0), order);
  const Series<Rational> b_half = bernoulli_gf(lz / Rational(2), Rational(0), order);
  Rational via_bernoulli(0);
  for (int m = 0; m <= m_max; ++m) {
    const Rational beta_full =
        factorial(static_cast<unsigned long>(m + 1)) * b_full[static_cast<std::size_t>(m + 1)];
    const Rational beta_half =
        factorial(static_cast<unsigned long>(m + 1)) * b_half[static_cast<std::size_t>(m + 1)];
    via_bernoulli += f.coeffs[static_cast<std::size_t>(m)] * pow(z, m) * Rational(2) / Rational(m + 1) *
                     (beta_full - pow(Rational(2), m + 1) * beta_half);
  }
  return {{lhs, via_fubini}, {lhs, via_bernoulli}};
}

Comparisons check_e69(const IdentityParams& p) {
  const Rational y = require_rat(p.y, "y");
  const Rational lam = require_rat(p.lambda, "lambda");
  const DegenerateSeries f{require_f(p), lam};
  const int m_max = f.support();
  Rational lhs(0);
  for (int n = 0; n <= m_max; ++n)
    lhs += pow(Rational(1, 2), n) * finite_difference(f, n, y, Rational(1));
  const Series<Rational> eg = euler_gf(lam, y, static_cast<std::size_t>(m_max) + 2);
  Rational via_euler(0);
  for (int m = 0; m <= m_max; ++m)
    via_euler += f.coeffs[static_cast<std::size_t>(m)] * factorial(static_cast<unsigned long>(m)) *
                 eg[static_cast<std::size_t>(m)];
  Rational via_fubini(0);
  for (int m = 0; m <= m_max; ++m) {
    Rational inner(0);
    for (int q = 0; q <= m; ++q)
      inner += binomial(m, q) * falling_factorial_lambda(y, m - q, lam) *
               fubini_poly_value(q, lam, Rational(-1, 2));
    via_fubini += f.coeffs[static_cast<std::size_t>(m)] * inner;
  }
  return {{lhs, via_euler}, {lhs, via_fubini}};
}

Comparisons check_e71(const IdentityParams& p) {
  const int m = require_nonneg(require_int(p.m, "m"), "m");
  const Rational lam = require_rat(p.lambda, "lambda");
  const Rational lhs = euler_degenerate(m, lam, Rational(1, 2));
  Rational rhs(0);
  for (int n = 0; n <= m; ++n) {
    Rational diff(0);
    for (int k = 0; k <= n; ++k) {
      Rational term = binomial(n, k) *
                      falling_factorial_lambda(Rational(1, 2) + Rational(k), static_cast<unsigned>(m), lam);
      if (k % 2 != 0) term = -term;
      diff += term;
    }
    rhs += pow(Rational(1, 2), n) * diff;
  }
  return {{lhs, rhs}};
}

std::string format_coeffs(const std::vector<Rational>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  out += "]";
  return out;
}

}  // namespace

const std::vector<std::string>& registry_ids() {
  static const std::vector<std::string> ids = {"T1",  "T3",  "T4",  "T6",  "L5",
                                               "L8",  "T9",  "T10", "T11", "T12",
                                               "T13", "T14", "E58", "E69", "E71"};
  return ids;
}

IdentityCheckResult verify_identity(const std::string& identity_id, const IdentityParams& params,
                                    bool perturb_rhs) {
  Comparisons comparisons;
  if (identity_id == "T1")
    comparisons = check_t1(params);
  else if (identity_id == "T3")
    comparisons = check_t3(params);
  else if (identity_id == "T4")
    comparisons = check_t4(params);
  else if (identity_id == "T6")
    comparisons = check_t6(params);
  else if (identity_id == "L5")
    comparisons = check_l5(params);
  else if (identity_id == "L8")
    comparisons = check_l8(params);
  else if (identity_id == "T9")
    comparisons = check_t9(params);
  else if (identity_id == "T10")
    comparisons = check_t10(params);
  else if (identity_id == "T11")
    comparisons = check_t11(params);
  else if (identity_id == "T12")
    comparisons = check_t12(params);
  else if (identity_id == "T13")
    comparisons = check_t13(params);
  else if (identity_id == "T14")
    comparisons = check_t14(params);
  else if (identity_id == "E58")
    comparisons = check_e58(params);
  else if (identity_id == "E69")
    comparisons = check_e69(params);
  else if (identity_id == "E71")
    comparisons = check_e71(params);
  else
    throw std::invalid_argument("unknown identity id: " + identity_id);

  if (perturb_rhs)
    for (auto& c : comparisons) c.rhs += Rational(1);

  IdentityCheckResult result;
  result.identity_id = identity_id;
  auto echo_int = [&](const char* name, const std::optional<int>& v) {
    if (v) result.params.emplace_back(name, std::to_string(*v));
  };
  auto echo_rat = [&](const char* name, const std::optional<Rational>& v) {
    if (v) result.params.emplace_back(name, v->str());
  };
  echo_int("n", params.n);
  echo_int("m", params.m);
  echo_int("p", params.p);
  echo_int("r", params.r);
  echo_rat("x", params.x);
  echo_rat("y", params.y);
  echo_rat("z", params.z);
  echo_rat("lambda", params.lambda);
  if (params.f) result.params.emplace_back("f", format_coeffs(*params.f));

  const Comparison* shown = &comparisons.front();
  bool pass = true;
  for (const auto& c : comparisons)
    if (c.lhs != c.rhs) {
      shown = &c;
      pass = false;
      break;
    }
  result.lhs = shown->lhs.str();
  result.rhs = shown->rhs.str();
  result.pass = pass;
  return result;
}

}  // namespace degen
