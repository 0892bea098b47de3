#include "degen/basics.hpp"

#include <stdexcept>

namespace degen {

Rational falling_factorial_lambda(const Rational& x, unsigned n, const Rational& lambda) {
  Rational acc(1);
  Rational factor = x;
  for (unsigned j = 0; j < n; ++j) {
    acc *= factor;
    factor -= lambda;
  }
  return acc;
}

Rational falling_factorial(const Rational& x, unsigned n) {
  return falling_factorial_lambda(x, n, Rational(1));
}

Rational lambda_binomial(const Rational& t, unsigned p, const Rational& lambda) {
  return falling_factorial_lambda(t, p, lambda) / factorial(p);
}

LambdaPoly falling_factorial_lambda_sym(const Rational& x, unsigned n) {
  LambdaPoly acc(Rational(1));
  for (unsigned j = 0; j < n; ++j)
    acc *= LambdaPoly{x, Rational(-static_cast<long>(j))};  // x - j*L
  return acc;
}

DensePoly<LambdaPoly> falling_factorial_in_x(unsigned n) {
  DensePoly<LambdaPoly> acc(LambdaPoly(Rational(1)));
  for (unsigned j = 0; j < n; ++j)
    acc *= DensePoly<LambdaPoly>{LambdaPoly(Rational(-static_cast<long>(j))), LambdaPoly(Rational(1))};
  return acc;
}

DensePoly<LambdaPoly> falling_factorial_lambda_in_x(unsigned n) {
  DensePoly<LambdaPoly> acc(LambdaPoly(Rational(1)));
  for (unsigned j = 0; j < n; ++j)
    acc *= DensePoly<LambdaPoly>{LambdaPoly::monomial(Rational(-static_cast<long>(j)), 1),
                                 LambdaPoly(Rational(1))};  // x - j*L
  return acc;
}

Series<Rational> degenerate_exp(const Rational& x, const Rational& lambda, std::size_t order) {
  Series<Rational> s(order);
  Rational num(1);       // running (x)_{n,lam}
  Rational fact(1);      // running n!
  Rational factor = x;
  s[0] = Rational(1);
  for (std::size_t n = 1; n <= order; ++n) {
    num *= factor;
    factor -= lambda;
    fact *= Rational(static_cast<long>(n));
    s[n] = num / fact;
  }
  return s;
}

Series<Rational> degenerate_log(const Rational& lambda, std::size_t order) {
  Series<Rational> s(order);
  Rational num(1);   // running (lam-1)(lam-2)...(lam-n+1)
  Rational fact(1);
  for (std::size_t n = 1; n <= order; ++n) {
    if (n >= 2) num *= lambda - Rational(static_cast<long>(n - 1));
    fact *= Rational(static_cast<long>(n));
    s[n] = num / fact;
  }
  return s;
}

std::array<Rational, 3> scaling_identity_sides(const Rational& z, const Rational& k, unsigned p,
                                               const Rational& lambda) {
  if (z.is_zero() || k.is_zero()) throw std::domain_error("scaling identity needs z != 0 and k != 0");
  const Rational direct = falling_factorial_lambda(z * k, p, lambda);
  const Rational via_k = pow(k, static_cast<long>(p)) * falling_factorial_lambda(z, p, lambda / k);
  const Rational via_z = pow(z, static_cast<long>(p)) * falling_factorial_lambda(k, p, lambda / z);
  return {direct, via_k, via_z};
}

bool scaling_identity_check(const Rational& z, const Rational& k, unsigned p, const Rational& lambda) {
  const auto sides = scaling_identity_sides(z, k, p, lambda);
  return sides[0] == sides[1] && sides[0] == sides[2];
}

std::pair<Rational, Rational> binomial_convolution_sides(const Rational& y, const Rational& z,
                                                         const Rational& k, unsigned m,
                                                         const Rational& lambda) {
  const Rational lhs = falling_factorial_lambda(y + z * k, m, lambda);
  Rational rhs(0);
  for (unsigned l = 0; l <= m; ++l)
    rhs += binomial(m, l) * falling_factorial_lambda(z * k, l, lambda) *
           falling_factorial_lambda(y, m - l, lambda);
  return {lhs, rhs};
}

bool binomial_convolution_check(const Rational& y, const Rational& z, const Rational& k, unsigned m,
                                const Rational& lambda) {
  const auto [lhs, rhs] = binomial_convolution_sides(y, z, k, m, lambda);
  return lhs == rhs;
}

std::pair<Rational, Rational> scaled_convolution_sides(const Rational& y, const Rational& z,
                                                       const Rational& k, unsigned m,
                                                       const Rational& lambda) {
  if (z.is_zero()) throw std::domain_error("scaled convolution needs z != 0");
  const Rational lhs = falling_factorial_lambda(y + z * k, m, lambda);
  Rational rhs(0);
  for (unsigned p = 0; p <= m; ++p)
    rhs += binomial(m, p) * pow(z, static_cast<long>(p)) *
           falling_factorial_lambda(y, m - p, lambda) * falling_factorial_lambda(k, p, lambda / z);
  return {lhs, rhs};
}

bool scaled_convolution_check(const Rational& y, const Rational& z, const Rational& k, unsigned m,
                              const Rational& lambda) {
  const auto [lhs, rhs] = scaled_convolution_sides(y, z, k, m, lambda);
  return lhs == rhs;
}

}  // namespace degen
