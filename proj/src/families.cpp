#include "degen/families.hpp"

#include <stdexcept>

#include "degen/basics.hpp"
#include "degen/stirling.hpp"

namespace degen {

std::size_t default_order(int n) {
  if (n < 0) throw std::invalid_argument("negative index");
  return std::max<std::size_t>(16, static_cast<std::size_t>(n) + 2);
}

namespace {

Rational extract(const Series<Rational>& s, int n) {
  return factorial(static_cast<unsigned long>(n)) * s[static_cast<std::size_t>(n)];
}

}  // namespace

Series<Rational> bell_gf(const Rational& lambda, const Rational& x, std::size_t order) {
  // exp(x*u) as an outer series in u, composed with u = e_lam(t) - 1.
  Series<Rational> outer(order);
  Rational term(1);
  outer[0] = term;
  for (std::size_t k = 1; k <= order; ++k) {
    term = term * x / Rational(static_cast<long>(k));
    outer[k] = term;
  }
  const Series<Rational> inner = degenerate_exp(Rational(1), lambda, order) - Series<Rational>::unit(order);
  return series_compose(outer, inner);
}

Series<Rational> fubini_gf(const Rational& lambda, const Rational& x, std::size_t order) {
  const Series<Rational> u = degenerate_exp(Rational(1), lambda, order) - Series<Rational>::unit(order);
  const Series<Rational> den = Series<Rational>::unit(order) - x * u;
  return series_div(Series<Rational>::unit(order), den);
}

Series<Rational> bernoulli_gf(const Rational& lambda, const Rational& x, std::size_t order) {
  // t/(e_lam(t)-1) = 1 / ((e_lam(t)-1)/t); the shifted denominator has unit
  // constant term, so one extra input order is enough.
  const Series<Rational> e1 =
      degenerate_exp(Rational(1), lambda, order + 1) - Series<Rational>::unit(order + 1);
  const Series<Rational> den = shift_down(e1);
  return series_div(degenerate_exp(x, lambda, order), den);
}

Series<Rational> euler_gf(const Rational& lambda, const Rational& x, std::size_t order) {
  const Series<Rational> den =
      degenerate_exp(Rational(1), lambda, order) + Series<Rational>::unit(order);
  return series_div(Rational(2) * degenerate_exp(x, lambda, order), den);
}

Series<Rational> polylog_compose(int k, const Series<Rational>& u) {
  if (!u[0].is_zero()) throw std::domain_error("polylog substitution needs zero constant term");
  const std::size_t order = u.order();
  Series<Rational> result(order);
  Series<Rational> power = Series<Rational>::unit(order);
  for (std::size_t j = 1; j <= order; ++j) {
    power = power * u;
    const Rational w = pow(Rational(static_cast<long>(j)), -static_cast<long>(k));
    for (std::size_t i = j; i <= order; ++i) result[i] += w * power[i];
  }
  return result;
}

Series<Rational> poly_bernoulli_gf(int k, const Rational& lambda, const Rational& x, std::size_t order) {
  // u = 1 - e_lam(-t) has zero constant term and unit t-coefficient, so
  // Li_k(u)/u is computed by shifting both numerator and denominator down.
  const Series<Rational> u = Series<Rational>::unit(order + 1) -
                             scale_variable(degenerate_exp(Rational(1), lambda, order + 1), Rational(-1));
  const Series<Rational> ratio = series_div(shift_down(polylog_compose(k, u)), shift_down(u));
  return ratio * scale_variable(degenerate_exp(x, lambda, order), Rational(-1));
}

DensePoly<LambdaPoly> bell_poly(int n) {
  if (n < 0) throw std::invalid_argument("negative index");
  std::vector<LambdaPoly> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = s2_lambda(n, k);
  return DensePoly<LambdaPoly>(std::move(c));
}

DensePoly<LambdaPoly> fubini_poly(int n) {
  if (n < 0) throw std::invalid_argument("negative index");
  std::vector<LambdaPoly> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k)
    c[static_cast<std::size_t>(k)] = s2_lambda(n, k) * factorial(static_cast<unsigned long>(k));
  return DensePoly<LambdaPoly>(std::move(c));
}

Rational bell_poly_value(int n, const Rational& lambda, const Rational& x) {
  Rational acc(0);
  Rational xp(1);
  for (int k = 0; k <= n; ++k) {
    acc += s2_lambda_at(n, k, lambda) * xp;
    xp *= x;
  }
  return acc;
}

Rational fubini_poly_value(int n, const Rational& lambda, const Rational& x) {
  Rational acc(0);
  Rational xp(1);
  for (int k = 0; k <= n; ++k) {
    acc += factorial(static_cast<unsigned long>(k)) * s2_lambda_at(n, k, lambda) * xp;
    xp *= x;
  }
  return acc;
}

Rational bell_via_gf(int n, const Rational& lambda, const Rational& x) {
  return extract(bell_gf(lambda, x, default_order(n)), n);
}

Rational fubini_via_gf(int n, const Rational& lambda, const Rational& x) {
  return extract(fubini_gf(lambda, x, default_order(n)), n);
}

Rational bernoulli_carlitz(int n, const Rational& lambda, const Rational& x) {
  return extract(bernoulli_gf(lambda, x, default_order(n)), n);
}

Rational euler_degenerate(int n, const Rational& lambda, const Rational& x) {
  return extract(euler_gf(lambda, x, default_order(n)), n);
}

Rational poly_bernoulli(int n, int k, const Rational& lambda, const Rational& x) {
  return extract(poly_bernoulli_gf(k, lambda, x, default_order(n)), n);
}

Rational poly_bernoulli_explicit(int n, int k, const Rational& lambda) {
  if (n < 0) throw std::invalid_argument("negative index");
  Rational acc(0);
  for (int j = 0; j <= n; ++j) {
    Rational term = factorial(static_cast<unsigned long>(j)) *
                    pow(Rational(j + 1), -static_cast<long>(k)) * s2_lambda_at(n, j, lambda);
    if ((n - j) % 2 != 0) term = -term;
    acc += term;
  }
  return acc;
}

std::array<Rational, 3> fubini_half_triple(int n, const Rational& lambda) {
  const Rational via_fubini = fubini_poly_value(n, lambda, Rational(-1, 2));

  const std::size_t order = default_order(n + 1);
  const Series<Rational> b_full = bernoulli_gf(lambda, Rational(0), order);
  const Series<Rational> b_half = bernoulli_gf(lambda / Rational(2), Rational(0), order);
  const Rational via_bernoulli = Rational(2) / Rational(n + 1) *
                                 (extract(b_full, n + 1) - pow(Rational(2), n + 1) * extract(b_half, n + 1));

  Rational via_stirling(0);
  for (int p = 0; p <= n; ++p) {
    Rational term = factorial(static_cast<unsigned long>(p)) * pow(Rational(1, 2), p) *
                    s2_lambda_at(n, p, lambda);
    if (p % 2 != 0) term = -term;
    via_stirling += term;
  }
  return {via_fubini, via_bernoulli, via_stirling};
}

std::pair<std::vector<Rational>, std::vector<Rational>> fubini_geometric_sides(int m,
                                                                               const Rational& lambda,
                                                                               std::size_t order) {
  if (m < 0) throw std::invalid_argument("negative index");
  if (order < static_cast<std::size_t>(m)) throw std::invalid_argument("order must cover m");
  // u = x/(1-x) = x + x^2 + ...; evaluate the Fubini polynomial at the series.
  Series<Rational> u(order, 'x');
  for (std::size_t i = 1; i <= order; ++i) u[i] = Rational(1);
  const DensePoly<Rational> fm = eval_lambda(fubini_poly(m), lambda);
  Series<Rational> value(order, 'x');
  for (std::size_t i = fm.coeffs().size(); i-- > 0;)
    value = value * u + fm.coeff(i) * Series<Rational>::unit(order, 'x');
  Series<Rational> geo(order, 'x');
  for (std::size_t i = 0; i <= order; ++i) geo[i] = Rational(1);
  const Series<Rational> lhs = value * geo;
  std::vector<Rational> expected;
  expected.reserve(order + 1);
  for (std::size_t nn = 0; nn <= order; ++nn)
    expected.push_back(
        falling_factorial_lambda(Rational(static_cast<long>(nn)), static_cast<unsigned>(m), lambda));
  return {lhs.coeffs(), std::move(expected)};
}

bool fubini_geometric_identity(int m, const Rational& lambda, std::size_t order) {
  const auto [lhs, rhs] = fubini_geometric_sides(m, lambda, order);
  return lhs == rhs;
}

std::pair<Rational, Rational> h_derivative_sides(const Rational& mu, const Rational& gamma,
                                                 const Rational& lambda, int m, std::size_t order) {
  if (mu == Rational(-1)) throw std::domain_error("needs mu != -1");
  if (m < 0) throw std::invalid_argument("negative index");
  if (order < static_cast<std::size_t>(m)) throw std::invalid_argument("order must cover m");
  const Series<Rational> den =
      mu * scale_variable(degenerate_exp(Rational(1), lambda, order), gamma) + Series<Rational>::unit(order);
  const Series<Rational> h = series_div(Series<Rational>::unit(order), den);
  const Rational lhs = extract(h, m);
  const Rational one_plus_mu = Rational(1) + mu;
  const Rational rhs = pow(gamma, m) * fubini_poly_value(m, lambda, -mu / one_plus_mu) / one_plus_mu;
  return {lhs, rhs};
}

bool h_derivative_identity(const Rational& mu, const Rational& gamma, const Rational& lambda, int m,
                           std::size_t order) {
  const auto [lhs, rhs] = h_derivative_sides(mu, gamma, lambda, m, order);
  return lhs == rhs;
}

std::pair<Rational, Rational> euler_fubini_sides(int n, const Rational& lambda, const Rational& x) {
  const Rational lhs = euler_degenerate(n, lambda, x);
  Rational rhs(0);
  for (int m = 0; m <= n; ++m)
    rhs += binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(m)) *
           fubini_poly_value(m, lambda, Rational(-1, 2)) *
           falling_factorial_lambda(x, static_cast<unsigned>(n - m), lambda);
  return {lhs, rhs};
}

bool euler_fubini_identity(int n, const Rational& lambda, const Rational& x) {
  const auto [lhs, rhs] = euler_fubini_sides(n, lambda, x);
  return lhs == rhs;
}

}  // namespace degen
