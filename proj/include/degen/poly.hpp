#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "degen/rational.hpp"

namespace degen {

/// Dense univariate polynomial over a commutative ring R. Trailing zero
/// coefficients are trimmed, so degree() of the zero polynomial is -1.
template <class R>
class DensePoly {
public:
  DensePoly() = default;
  DensePoly(R constant) : c_{std::move(constant)} { trim(); }
  explicit DensePoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
  DensePoly(std::initializer_list<R> coeffs) : c_(coeffs) { trim(); }

  static DensePoly monomial(R coeff, std::size_t power) {
    std::vector<R> c(power + 1, R(0));
    c[power] = std::move(coeff);
    return DensePoly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<R>& coeffs() const { return c_; }

  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(0); }

  /// Horner evaluation at a point of the same ring.
  R eval(const R& x) const {
    R acc{0};
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  DensePoly operator-() const {
    std::vector<R> c(c_);
    for (auto& v : c) v = -v;
    return DensePoly(std::move(c));
  }

  friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
    std::vector<R> c(std::max(a.c_.size(), b.c_.size()), R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
    return DensePoly(std::move(c));
  }
  friend DensePoly operator-(const DensePoly& a, const DensePoly& b) { return a + (-b); }

  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return DensePoly();
    std::vector<R> c(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return DensePoly(std::move(c));
  }

  friend DensePoly operator*(const R& s, const DensePoly& p) {
    std::vector<R> c(p.c_);
    for (auto& v : c) v = s * v;
    return DensePoly(std::move(c));
  }
  friend DensePoly operator*(const DensePoly& p, const R& s) { return s * p; }

  DensePoly& operator+=(const DensePoly& o) { return *this = *this + o; }
  DensePoly& operator-=(const DensePoly& o) { return *this = *this - o; }
  DensePoly& operator*=(const DensePoly& o) { return *this = *this * o; }

  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const DensePoly& a, const DensePoly& b) { return !(a == b); }

private:
  void trim() {
    while (!c_.empty() && c_.back() == R(0)) c_.pop_back();
  }

  std::vector<R> c_;
};

/// Polynomial in the deformation parameter, coefficient i = multiplier of the
/// i-th power of the symbol "L".
using LambdaPoly = DensePoly<Rational>;

inline Rational ring_inverse(const Rational& r) { return r.inverse(); }

/// Only nonzero constants are invertible in the polynomial ring.
template <class R>
DensePoly<R> ring_inverse(const DensePoly<R>& p) {
  if (p.degree() != 0) throw std::domain_error("non-constant polynomial is not invertible");
  return DensePoly<R>(ring_inverse(p.coeff(0)));
}

inline DensePoly<Rational> eval_lambda(const DensePoly<LambdaPoly>& p, const Rational& lambda) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) c.push_back(q.eval(lambda));
  return DensePoly<Rational>(std::move(c));
}

/// Canonical text form: terms in increasing power, explicit signs, "*" between
/// a non-unit coefficient and the symbol, e.g. "1 - 3/2*L + L^2".
std::string format_poly(const DensePoly<Rational>& p, std::string_view symbol = "L");

/// Same layout with symbol "x"; non-constant coefficients are parenthesized,
/// e.g. "(1 - L)*x + x^2".
std::string format_poly_in_x(const DensePoly<LambdaPoly>& p);

}  // namespace degen
