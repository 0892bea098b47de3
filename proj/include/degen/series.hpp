#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "degen/poly.hpp"
#include "degen/rational.hpp"

namespace degen {

/// Formal power series truncated at a fixed order N: exactly N+1 coefficients,
/// and no operation ever reads or writes past index N. The variable tag is an
/// annotation only; arithmetic and equality ignore it.
template <class R>
class Series {
public:
  explicit Series(std::size_t order, char var = 't') : c_(order + 1, R(0)), var_(var) {}

  Series(std::vector<R> coeffs, char var = 't') : c_(std::move(coeffs)), var_(var) {
    if (c_.empty()) throw std::invalid_argument("series needs at least the constant coefficient");
  }

  static Series unit(std::size_t order, char var = 't') {
    Series s(order, var);
    s.c_[0] = R(1);
    return s;
  }

  /// The series equal to its own variable: [0, 1, 0, ...].
  static Series identity(std::size_t order, char var = 't') {
    Series s(order, var);
    if (order >= 1) s.c_[1] = R(1);
    return s;
  }

  std::size_t order() const { return c_.size() - 1; }
  char var() const { return var_; }
  const std::vector<R>& coeffs() const { return c_; }

  R& operator[](std::size_t i) { return c_.at(i); }
  const R& operator[](std::size_t i) const { return c_.at(i); }

  Series operator-() const {
    Series s(*this);
    for (auto& v : s.c_) v = -v;
    return s;
  }

  friend Series operator+(const Series& a, const Series& b) {
    check_orders(a, b);
    Series s(a);
    for (std::size_t i = 0; i < s.c_.size(); ++i) s.c_[i] = s.c_[i] + b.c_[i];
    return s;
  }
  friend Series operator-(const Series& a, const Series& b) { return a + (-b); }

  /// Cauchy product truncated at the common order.
  friend Series operator*(const Series& a, const Series& b) {
    check_orders(a, b);
    Series s(a.order(), a.var_);
    for (std::size_t n = 0; n <= a.order(); ++n) {
      R acc{0};
      for (std::size_t i = 0; i <= n; ++i) acc = acc + a.c_[i] * b.c_[n - i];
      s.c_[n] = std::move(acc);
    }
    return s;
  }

  friend Series operator*(const R& s, const Series& a) {
    Series out(a);
    for (auto& v : out.c_) v = s * v;
    return out;
  }
  friend Series operator*(const Series& a, const R& s) { return s * a; }

  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

private:
  static void check_orders(const Series& a, const Series& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
  }

  std::vector<R> c_;
  char var_;
};

/// Triangular back-substitution on coefficients; the denominator's constant
/// term must be a unit of the coefficient ring.
template <class R>
Series<R> series_div(const Series<R>& num, const Series<R>& den) {
  if (num.order() != den.order()) throw std::invalid_argument("series order mismatch");
  const R inv0 = ring_inverse(den[0]);  // throws std::domain_error on non-unit
  Series<R> q(num.order(), num.var());
  for (std::size_t n = 0; n <= num.order(); ++n) {
    R acc = num[n];
    for (std::size_t i = 1; i <= n; ++i) acc = acc - den[i] * q[n - i];
    q[n] = acc * inv0;
  }
  return q;
}

/// Substitutes inner into outer; inner must have zero constant term so every
/// truncated coefficient is exact.
template <class R>
Series<R> series_compose(const Series<R>& outer, const Series<R>& inner) {
  if (outer.order() != inner.order()) throw std::invalid_argument("series order mismatch");
  if (!(inner[0] == R(0))) throw std::domain_error("composition needs zero inner constant term");
  const std::size_t n = outer.order();
  Series<R> result(n, inner.var());
  result[0] = outer[0];
  Series<R> power = Series<R>::unit(n, inner.var());
  for (std::size_t k = 1; k <= n; ++k) {
    power = power * inner;  // valuation >= k, so higher powers cannot reach order n
    for (std::size_t i = k; i <= n; ++i) result[i] = result[i] + outer[k] * power[i];
  }
  return result;
}

template <class R>
Series<R> series_pow(const Series<R>& base, unsigned k) {
  Series<R> result = Series<R>::unit(base.order(), base.var());
  for (unsigned i = 0; i < k; ++i) result = result * base;
  return result;
}

/// Division by the variable: requires a zero constant term, drops the order by one.
template <class R>
Series<R> shift_down(const Series<R>& s) {
  if (!(s[0] == R(0))) throw std::domain_error("shift_down needs zero constant term");
  if (s.order() == 0) throw std::invalid_argument("shift_down needs positive order");
  std::vector<R> c(s.coeffs().begin() + 1, s.coeffs().end());
  return Series<R>(std::move(c), s.var());
}

/// Multiplication by the k-th power of the variable, re-truncated at `order`.
template <class R>
Series<R> shift_up(const Series<R>& s, std::size_t k, std::size_t order) {
  Series<R> out(order, s.var());
  for (std::size_t i = 0; i + k <= order && i <= s.order(); ++i) out[i + k] = s[i];
  return out;
}

/// Formal derivative; the order drops by one.
template <class R>
Series<R> derivative(const Series<R>& s) {
  if (s.order() == 0) throw std::invalid_argument("derivative needs positive order");
  std::vector<R> c(s.order(), R(0));
  for (std::size_t i = 1; i <= s.order(); ++i) c[i - 1] = R(static_cast<long>(i)) * s[i];
  return Series<R>(std::move(c), s.var());
}

/// Variable rescaling t -> c*t: multiplies coefficient n by c^n.
inline Series<Rational> scale_variable(const Series<Rational>& s, const Rational& c) {
  Series<Rational> out(s);
  Rational p(1);
  for (std::size_t i = 1; i <= s.order(); ++i) {
    p *= c;
    out[i] = out[i] * p;
  }
  return out;
}

}  // namespace degen
