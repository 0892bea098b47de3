#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "degen/basics.hpp"

using degen::Rational;
using degen::Series;

namespace {

const std::vector<Rational> kSamples = {Rational(0),    Rational(1),     Rational(-1),
                                        Rational(1, 2), Rational(-1, 3), Rational(2, 5),
                                        Rational(7, 3)};

Series<Rational> make(std::vector<Rational> c) { return Series<Rational>(std::move(c)); }

}  // namespace

TEST_CASE("deformed falling factorial") {
  CHECK(degen::falling_factorial_lambda(Rational(17, 5), 0, Rational(3)) == Rational(1));
  CHECK(degen::falling_factorial_lambda(Rational(2), 3, Rational(1, 2)) == Rational(3));
  CHECK(degen::falling_factorial_lambda(Rational(1), 2, Rational(1)) == Rational(0));
}

TEST_CASE("zero deformation gives plain powers") {
  for (unsigned n = 0; n <= 12; ++n)
    for (const auto& x : kSamples)
      CHECK(degen::falling_factorial_lambda(x, n, Rational(0)) ==
            degen::pow(x, static_cast<long>(n)));
}

TEST_CASE("classical falling factorial") {
  CHECK(degen::falling_factorial(Rational(5), 0) == Rational(1));
  CHECK(degen::falling_factorial(Rational(5), 3) == Rational(60));
  CHECK(degen::falling_factorial(Rational(1, 2), 2) == Rational(-1, 4));
}

TEST_CASE("deformed binomial") {
  CHECK(degen::lambda_binomial(Rational(9, 7), 0, Rational(4)) == Rational(1));
  CHECK(degen::lambda_binomial(Rational(2), 3, Rational(1, 2)) == Rational(1, 2));
  // deformation 1 is the classical binomial coefficient, 0 is t^p/p!
  CHECK(degen::lambda_binomial(Rational(3), 2, Rational(1)) == Rational(3));
  CHECK(degen::lambda_binomial(Rational(3), 2, Rational(0)) == Rational(9, 2));
}

TEST_CASE("symbolic falling factorial matches sampled one") {
  for (unsigned n = 0; n <= 6; ++n)
    for (const auto& lam : kSamples) {
      const auto sym = degen::falling_factorial_lambda_sym(Rational(5, 3), n);
      CHECK(sym.eval(lam) == degen::falling_factorial_lambda(Rational(5, 3), n, lam));
    }
}

TEST_CASE("x-expansions agree with direct products") {
  for (unsigned n = 0; n <= 6; ++n) {
    const auto classical = degen::falling_factorial_in_x(n);
    const auto deformed = degen::falling_factorial_lambda_in_x(n);
    for (const auto& x : kSamples)
      for (const auto& lam : kSamples) {
        CHECK(degen::eval_lambda(classical, lam).eval(x) == degen::falling_factorial(x, n));
        CHECK(degen::eval_lambda(deformed, lam).eval(x) ==
              degen::falling_factorial_lambda(x, n, lam));
      }
  }
}

TEST_CASE("deformed exponential coefficients") {
  CHECK(degen::degenerate_exp(Rational(1), Rational(0), 3) ==
        make({Rational(1), Rational(1), Rational(1, 2), Rational(1, 6)}));
  CHECK(degen::degenerate_exp(Rational(1), Rational(1), 3) ==
        make({Rational(1), Rational(1), Rational(0), Rational(0)}));
  CHECK(degen::degenerate_exp(Rational(2), Rational(1, 2), 3) ==
        make({Rational(1), Rational(2), Rational(3, 2), Rational(1, 2)}));
}

TEST_CASE("exponential coefficients vanish once the deformation hits 1/(n-1)") {
  // (1)_{n,1/m} contains the factor 1 - m/m at n = m+1, so coefficients die
  // from there on; for other deformations nothing cancels.
  const auto third = degen::degenerate_exp(Rational(1), Rational(1, 3), 8);
  for (std::size_t n = 0; n <= 3; ++n) CHECK(third[n] != Rational(0));
  for (std::size_t n = 4; n <= 8; ++n) CHECK(third[n] == Rational(0));
  const auto generic = degen::degenerate_exp(Rational(1), Rational(2, 5), 8);
  for (std::size_t n = 0; n <= 8; ++n) CHECK(generic[n] != Rational(0));
}

TEST_CASE("deformed logarithm coefficients") {
  CHECK(degen::degenerate_log(Rational(0), 3) ==
        make({Rational(0), Rational(1), Rational(-1, 2), Rational(1, 3)}));
  for (const auto& lam : kSamples) {
    const auto s = degen::degenerate_log(lam, 3);
    CHECK(s[2] == (lam - Rational(1)) / Rational(2));
    CHECK(s[3] == (lam - Rational(1)) * (lam - Rational(2)) / Rational(6));
  }
}

TEST_CASE("deformed logarithm matches the binomial expansion of (1+t)^lam") {
  // ((1+t)^lam - 1)/lam has coefficient binom(lam, n)/lam for n >= 1.
  const Rational lam(2, 3);
  const std::size_t order = 10;
  const auto s = degen::degenerate_log(lam, order);
  for (std::size_t n = 1; n <= order; ++n) {
    const Rational c =
        degen::falling_factorial(lam, static_cast<unsigned>(n)) /
        degen::factorial(static_cast<unsigned long>(n));
    CHECK(s[n] == c / lam);
  }
}

TEST_CASE("exponential and logarithm are mutually inverse") {
  const std::size_t order = 16;
  const auto ident = Series<Rational>::identity(order);
  for (const auto& lam : kSamples) {
    const auto shifted = degen::degenerate_exp(Rational(1), lam, order) - Series<Rational>::unit(order);
    const auto lg = degen::degenerate_log(lam, order);
    CHECK(series_compose(lg, shifted) == ident);
    CHECK(series_compose(shifted, lg) == ident);
  }
}

TEST_CASE("scaling identity") {
  CHECK(degen::scaling_identity_check(Rational(4, 3), Rational(-2), 0, Rational(1, 5)));
  const auto sides = degen::scaling_identity_sides(Rational(2), Rational(3), 2, Rational(1, 2));
  CHECK(sides[0] == Rational(33));
  CHECK(sides[1] == Rational(33));
  CHECK(sides[2] == Rational(33));
  CHECK(degen::scaling_identity_check(Rational(1), Rational(1), 5, Rational(7, 3)));
  CHECK_THROWS_AS(degen::scaling_identity_check(Rational(0), Rational(1), 2, Rational(1)),
                  std::domain_error);
  CHECK_THROWS_AS(degen::scaling_identity_check(Rational(1), Rational(0), 2, Rational(1)),
                  std::domain_error);
  for (unsigned p = 0; p <= 8; ++p)
    CHECK(degen::scaling_identity_check(Rational(-5, 2), Rational(3, 7), p, Rational(-1, 3)));
}

TEST_CASE("binomial convolution") {
  CHECK(degen::binomial_convolution_check(Rational(3, 2), Rational(-2), Rational(5), 0, Rational(1)));
  CHECK(degen::binomial_convolution_check(Rational(3, 2), Rational(-2), Rational(5), 1, Rational(1)));
  const auto [lhs, rhs] =
      degen::binomial_convolution_sides(Rational(1), Rational(2), Rational(1), 2, Rational(1, 3));
  CHECK(lhs == Rational(8));
  CHECK(rhs == Rational(8));
  for (unsigned m = 0; m <= 10; ++m)
    CHECK(degen::binomial_convolution_check(Rational(-1, 2), Rational(2, 3), Rational(7, 5), m,
                                            Rational(-2, 7)));
}

TEST_CASE("scaled convolution") {
  for (unsigned m = 0; m <= 10; ++m)
    for (const auto& lam : kSamples)
      CHECK(degen::scaled_convolution_check(Rational(5, 4), Rational(-3, 2), Rational(2, 9), m, lam));
  CHECK_THROWS_AS(degen::scaled_convolution_check(Rational(1), Rational(0), Rational(1), 2, Rational(1)),
                  std::domain_error);
}
