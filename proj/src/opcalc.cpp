#include "degen/opcalc.hpp"

#include <stdexcept>

#include "degen/basics.hpp"
#include "degen/stirling.hpp"

namespace degen {

LambdaExpPoly LambdaExpPoly::monomial(int a, int b, LambdaPoly coeff) {
  LambdaExpPoly p;
  p.add_term(a, b, coeff);
  return p;
}

LambdaExpPoly LambdaExpPoly::from_poly(const DensePoly<LambdaPoly>& p) {
  LambdaExpPoly out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    out.add_term(static_cast<int>(i), 0, p.coeffs()[i]);
  return out;
}

void LambdaExpPoly::add_term(int a, int b, const LambdaPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(Exponent{a, b}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool LambdaExpPoly::is_ordinary() const {
  for (const auto& [exp, coeff] : terms_)
    if (exp.second != 0) return false;
  return true;
}

LambdaExpPoly operator+(const LambdaExpPoly& lhs, const LambdaExpPoly& rhs) {
  LambdaExpPoly out = lhs;
  for (const auto& [exp, coeff] : rhs.terms_) out.add_term(exp.first, exp.second, coeff);
  return out;
}

LambdaExpPoly operator*(const LambdaPoly& s, const LambdaExpPoly& p) {
  LambdaExpPoly out;
  for (const auto& [exp, coeff] : p.terms_) out.add_term(exp.first, exp.second, s * coeff);
  return out;
}

std::string LambdaExpPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [exp, coeff] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + format_poly(coeff) + ")*x^(" + std::to_string(exp.first);
    if (exp.second != 0) out += (exp.second > 0 ? "+" : "") + std::to_string(exp.second) + "*L";
    out += ")";
  }
  return out;
}

LambdaExpPoly apply_xd_operator(const LambdaExpPoly& f) {
  LambdaExpPoly out;
  for (const auto& [exp, coeff] : f.terms()) {
    const LambdaPoly exponent{Rational(exp.first), Rational(exp.second)};  // a + b*L
    out.add_term(exp.first, exp.second - 1, coeff * exponent);
  }
  return out;
}

LambdaExpPoly stirling_operator_form(const LambdaExpPoly& f, int n) {
  if (n < 0) throw std::invalid_argument("negative operator power");
  if (!f.is_ordinary()) throw std::invalid_argument("needs an ordinary polynomial operand");
  LambdaExpPoly out;
  for (const auto& [exp, coeff] : f.terms()) {
    const int a = exp.first;
    for (int k = 0; k <= n && k <= a; ++k) {
      // x^k D^k x^a = (a)_k x^a; the x^(-nL) factor shifts b to -n.
      const Rational drop = falling_factorial(Rational(a), static_cast<unsigned>(k));
      out.add_term(a, -n, s2_lambda(n, k) * drop * coeff);
    }
  }
  return out;
}

std::pair<LambdaExpPoly, LambdaExpPoly> operational_formula_sides(const LambdaExpPoly& f, int n) {
  LambdaExpPoly iterated = f;
  for (int i = 0; i < n; ++i) iterated = apply_xd_operator(iterated);
  return {iterated, stirling_operator_form(f, n)};
}

bool operational_formula_check(const LambdaExpPoly& f, int n) {
  const auto [iterated, stirling_form] = operational_formula_sides(f, n);
  return iterated == stirling_form;
}

namespace {

std::vector<Rational> truncate_coeffs(const Series<Rational>& s, std::size_t keep) {
  return {s.coeffs().begin(), s.coeffs().begin() + static_cast<std::ptrdiff_t>(keep + 1)};
}

}  // namespace

std::pair<std::vector<Rational>, std::vector<Rational>> dobinski_sides(int n, const Rational& lambda,
                                                                       std::size_t order) {
  if (n < 0) throw std::invalid_argument("negative index");
  if (order < static_cast<std::size_t>(n)) throw std::invalid_argument("order must cover n");
  Series<Rational> weighted(order, 'x');
  Rational fact(1);
  for (std::size_t l = 0; l <= order; ++l) {
    if (l > 0) fact *= Rational(static_cast<long>(l));
    weighted[l] =
        falling_factorial_lambda(Rational(static_cast<long>(l)), static_cast<unsigned>(n), lambda) / fact;
  }
  Series<Rational> bell_series(order, 'x');
  for (int k = 0; k <= n; ++k) bell_series[static_cast<std::size_t>(k)] = s2_lambda_at(n, k, lambda);
  Series<Rational> expx(order, 'x');
  Rational f2(1);
  for (std::size_t l = 0; l <= order; ++l) {
    if (l > 0) f2 *= Rational(static_cast<long>(l));
    expx[l] = f2.inverse();
  }
  const Series<Rational> product = bell_series * expx;
  const std::size_t keep = order - static_cast<std::size_t>(n);
  return {truncate_coeffs(weighted, keep), truncate_coeffs(product, keep)};
}

bool dobinski_check(int n, const Rational& lambda, std::size_t order) {
  const auto [lhs, rhs] = dobinski_sides(n, lambda, order);
  return lhs == rhs;
}

std::pair<std::vector<Rational>, std::vector<Rational>> operator_series_sides(int n,
                                                                              const Series<Rational>& g,
                                                                              const Rational& lambda) {
  if (n < 0) throw std::invalid_argument("negative index");
  const std::size_t order = g.order();
  if (order < static_cast<std::size_t>(n)) throw std::invalid_argument("order must cover n");
  Series<Rational> weighted(order, 'x');
  for (std::size_t k = 0; k <= order; ++k)
    weighted[k] =
        g[k] * falling_factorial_lambda(Rational(static_cast<long>(k)), static_cast<unsigned>(n), lambda);
  Series<Rational> stirling_route(order, 'x');
  for (int k = 0; k <= n; ++k) {
    Series<Rational> dk = g;
    for (int i = 0; i < k; ++i) dk = derivative(dk);
    stirling_route =
        stirling_route + s2_lambda_at(n, k, lambda) * shift_up(dk, static_cast<std::size_t>(k), order);
  }
  const std::size_t keep = order - static_cast<std::size_t>(n);
  return {truncate_coeffs(weighted, keep), truncate_coeffs(stirling_route, keep)};
}

bool operator_series_check(int n, const Series<Rational>& g, const Rational& lambda) {
  const auto [lhs, rhs] = operator_series_sides(n, g, lambda);
  return lhs == rhs;
}

}  // namespace degen
