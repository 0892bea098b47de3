#pragma once

#include <map>
#include <string>
#include <utility>

#include "degen/poly.hpp"
#include "degen/rational.hpp"
#include "degen/series.hpp"

namespace degen {

/// Finite sum of terms c(L) * x^(a + b*L) with integer a, b and coefficients
/// polynomial in the deformation parameter. Keys are unique and zero
/// coefficients are never stored.
class LambdaExpPoly {
public:
  using Exponent = std::pair<int, int>;  // (a, b) in a + b*L

  LambdaExpPoly() = default;

  static LambdaExpPoly monomial(int a, int b, LambdaPoly coeff = LambdaPoly(Rational(1)));

  /// Lifts an ordinary polynomial in x (all exponents integer, b = 0).
  static LambdaExpPoly from_poly(const DensePoly<LambdaPoly>& p);

  void add_term(int a, int b, const LambdaPoly& coeff);

  bool is_zero() const { return terms_.empty(); }
  bool is_ordinary() const;  // every b == 0
  const std::map<Exponent, LambdaPoly>& terms() const { return terms_; }

  friend LambdaExpPoly operator+(const LambdaExpPoly& lhs, const LambdaExpPoly& rhs);
  friend LambdaExpPoly operator*(const LambdaPoly& s, const LambdaExpPoly& p);
  friend bool operator==(const LambdaExpPoly& lhs, const LambdaExpPoly& rhs) {
    return lhs.terms_ == rhs.terms_;
  }
  friend bool operator!=(const LambdaExpPoly& lhs, const LambdaExpPoly& rhs) { return !(lhs == rhs); }

  std::string str() const;

private:
  std::map<Exponent, LambdaPoly> terms_;
};

/// One application of the operator x^(1-L) * d/dx: the term c * x^(a+bL)
/// maps to c * (a+bL) * x^(a+(b-1)L).
LambdaExpPoly apply_xd_operator(const LambdaExpPoly& f);

/// x^(-nL) * sum_k S2(n,k) x^k D^k f for an ordinary polynomial f; throws
/// std::invalid_argument when f has deformed exponents.
LambdaExpPoly stirling_operator_form(const LambdaExpPoly& f, int n);

/// Iterating the operator n times against the Stirling form, symbolically in
/// the deformation parameter.
std::pair<LambdaExpPoly, LambdaExpPoly> operational_formula_sides(const LambdaExpPoly& f, int n);
bool operational_formula_check(const LambdaExpPoly& f, int n);

/// The x-series sum_l (l)_{n,lam} x^l / l! against the Bell polynomial times
/// exp(x); both sides truncated to order N-n because the polynomial-series
/// product loses the top orders.
std::pair<std::vector<Rational>, std::vector<Rational>> dobinski_sides(int n, const Rational& lambda,
                                                                       std::size_t order);
bool dobinski_check(int n, const Rational& lambda, std::size_t order);

/// Single-slice check of the operator on a general series g: the weighted
/// series sum_k g_k (k)_{n,lam} x^k against the Stirling-form route
/// sum_k S2(n,k) x^k D^k g, both truncated to order N-n.
std::pair<std::vector<Rational>, std::vector<Rational>> operator_series_sides(int n,
                                                                              const Series<Rational>& g,
                                                                              const Rational& lambda);
bool operator_series_check(int n, const Series<Rational>& g, const Rational& lambda);

}  // namespace degen
