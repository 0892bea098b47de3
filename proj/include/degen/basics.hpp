#pragma once

#include <array>
#include <utility>

#include "degen/poly.hpp"
#include "degen/rational.hpp"
#include "degen/series.hpp"

namespace degen {

/// (x)_{n,lam} = x(x-lam)(x-2lam)...(x-(n-1)lam); the empty product is 1.
Rational falling_factorial_lambda(const Rational& x, unsigned n, const Rational& lambda);

/// Classical falling factorial (x)_n = x(x-1)...(x-n+1).
Rational falling_factorial(const Rational& x, unsigned n);

/// (t)_{p,lam} / p!.
Rational lambda_binomial(const Rational& t, unsigned p, const Rational& lambda);

/// (x)_{n,lam} with the deformation parameter kept symbolic.
LambdaPoly falling_factorial_lambda_sym(const Rational& x, unsigned n);

/// (x)_n expanded in powers of x (coefficients are constants).
DensePoly<LambdaPoly> falling_factorial_in_x(unsigned n);

/// (x)_{n,lam} expanded in powers of x with symbolic lambda coefficients.
DensePoly<LambdaPoly> falling_factorial_lambda_in_x(unsigned n);

/// Deformed exponential: coefficient n is (x)_{n,lam} / n!.
Series<Rational> degenerate_exp(const Rational& x, const Rational& lambda, std::size_t order);

/// Deformed logarithm of 1+t: coefficient 0 is 0, coefficient n >= 1 is
/// (lam-1)(lam-2)...(lam-n+1)/n!. Polynomial in lam, so lam = 0 is fine and
/// reproduces the classical log(1+t).
Series<Rational> degenerate_log(const Rational& lambda, std::size_t order);

/// The three routes of (zk)_{p,lam} = k^p (z)_{p,lam/k} = z^p (k)_{p,lam/z},
/// each computed independently. Throws std::domain_error when z or k is zero.
std::array<Rational, 3> scaling_identity_sides(const Rational& z, const Rational& k, unsigned p,
                                               const Rational& lambda);
bool scaling_identity_check(const Rational& z, const Rational& k, unsigned p, const Rational& lambda);

/// (y+zk)_{m,lam} against sum_l C(m,l) (zk)_{l,lam} (y)_{m-l,lam}.
std::pair<Rational, Rational> binomial_convolution_sides(const Rational& y, const Rational& z,
                                                         const Rational& k, unsigned m,
                                                         const Rational& lambda);
bool binomial_convolution_check(const Rational& y, const Rational& z, const Rational& k, unsigned m,
                                const Rational& lambda);

/// (y+zk)_{m,lam} against sum_p C(m,p) z^p (y)_{m-p,lam} (k)_{p,lam/z}; z != 0.
std::pair<Rational, Rational> scaled_convolution_sides(const Rational& y, const Rational& z,
                                                       const Rational& k, unsigned m,
                                                       const Rational& lambda);
bool scaled_convolution_check(const Rational& y, const Rational& z, const Rational& k, unsigned m,
                              const Rational& lambda);

}  // namespace degen
