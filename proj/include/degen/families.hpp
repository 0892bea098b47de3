#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "degen/poly.hpp"
#include "degen/rational.hpp"
#include "degen/series.hpp"

namespace degen {

// Generating-function builders. Each returns the full truncated series so a
// caller extracting many indices pays for one series, not one per index.

/// exp(x * (e_lam(t) - 1)).
Series<Rational> bell_gf(const Rational& lambda, const Rational& x, std::size_t order);

/// 1 / (1 - x * (e_lam(t) - 1)).
Series<Rational> fubini_gf(const Rational& lambda, const Rational& x, std::size_t order);

/// t * e_lam^x(t) / (e_lam(t) - 1).
Series<Rational> bernoulli_gf(const Rational& lambda, const Rational& x, std::size_t order);

/// 2 * e_lam^x(t) / (e_lam(t) + 1).
Series<Rational> euler_gf(const Rational& lambda, const Rational& x, std::size_t order);

/// Li_k(1 - e_lam(-t)) / (1 - e_lam(-t)) * e_lam^x(-t).
Series<Rational> poly_bernoulli_gf(int k, const Rational& lambda, const Rational& x, std::size_t order);

/// sum_{j>=1} u^j / j^k for any integer k; u must have zero constant term.
Series<Rational> polylog_compose(int k, const Series<Rational>& u);

// Stirling-sum polynomials in x (coefficients symbolic in lambda).

/// Bell polynomial: coefficient of x^k is S2(n,k).
DensePoly<LambdaPoly> bell_poly(int n);

/// Fubini polynomial: coefficient of x^k is k! * S2(n,k).
DensePoly<LambdaPoly> fubini_poly(int n);

// Scalar values. The *_value forms go through the Stirling sums; the plain
// forms extract n! * [t^n] from the generating function at truncation order
// max(16, n+2). The two routes share nothing above the series engine.

Rational bell_poly_value(int n, const Rational& lambda, const Rational& x);
Rational fubini_poly_value(int n, const Rational& lambda, const Rational& x);
Rational bell_via_gf(int n, const Rational& lambda, const Rational& x);
Rational fubini_via_gf(int n, const Rational& lambda, const Rational& x);
Rational bernoulli_carlitz(int n, const Rational& lambda, const Rational& x);
Rational euler_degenerate(int n, const Rational& lambda, const Rational& x);
Rational poly_bernoulli(int n, int k, const Rational& lambda, const Rational& x);

/// sum_j (-1)^(n-j) j!/(j+1)^k S2(n,j) at the given lambda; the independent
/// route for poly_bernoulli at x = 0.
Rational poly_bernoulli_explicit(int n, int k, const Rational& lambda);

/// Three independently computed quantities that must coincide:
///   [0] F_n(-1/2) via the Fubini polynomial,
///   [1] 2/(n+1) * (beta_{n+1,lam} - 2^{n+1} beta_{n+1,lam/2}),
///   [2] sum_p (-1)^p p!/2^p S2(n,p).
std::array<Rational, 3> fubini_half_triple(int n, const Rational& lambda);

/// Coefficients of (1/(1-x)) F_m(x/(1-x)) against (n)_{m,lam} for n <= order.
std::pair<std::vector<Rational>, std::vector<Rational>> fubini_geometric_sides(int m,
                                                                               const Rational& lambda,
                                                                               std::size_t order);
bool fubini_geometric_identity(int m, const Rational& lambda, std::size_t order);

/// m! [t^m] 1/(mu e_lam(gamma t) + 1) against gamma^m F_m(-mu/(1+mu)) / (1+mu).
/// Throws std::domain_error when mu = -1.
std::pair<Rational, Rational> h_derivative_sides(const Rational& mu, const Rational& gamma,
                                                 const Rational& lambda, int m, std::size_t order);
bool h_derivative_identity(const Rational& mu, const Rational& gamma, const Rational& lambda, int m,
                           std::size_t order);

/// E_n(x) against sum_m C(n,m) F_m(-1/2) (x)_{n-m,lam}, Euler side from the
/// generating function, Fubini side from the Stirling sums.
std::pair<Rational, Rational> euler_fubini_sides(int n, const Rational& lambda, const Rational& x);
bool euler_fubini_identity(int n, const Rational& lambda, const Rational& x);

/// Truncation order used for single-coefficient extraction of index n.
std::size_t default_order(int n);

}  // namespace degen
