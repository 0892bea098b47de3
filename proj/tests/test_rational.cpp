#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "degen/rational.hpp"

using degen::Rational;

TEST_CASE("construction canonicalizes") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, 7).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("canonical form is preserved by arithmetic") {
  const Rational a(3, 4), b(1, 4);
  const Rational sum = a + b;  // 1
  CHECK(sum == Rational(1));
  CHECK(sum.den() == 1);
  const Rational prod = Rational(2, 3) * Rational(3, 2);
  CHECK(prod.num() == 1);
  CHECK(prod.den() == 1);
  const Rational diff = Rational(1, 6) - Rational(1, 6);
  CHECK(diff.is_zero());
  CHECK(diff.den() == 1);
  CHECK(gcd(mpz_class((Rational(10, 4) / Rational(5, 6)).num()),
            mpz_class((Rational(10, 4) / Rational(5, 6)).den())) == 1);
}

TEST_CASE("parse and print round-trip") {
  CHECK(Rational::parse("5").str() == "5");
  CHECK(Rational::parse("-5").str() == "-5");
  CHECK(Rational::parse("+5").str() == "5");
  CHECK(Rational::parse("3/6").str() == "1/2");
  CHECK(Rational::parse("-3/6").str() == "-1/2");
  CHECK(Rational::parse("7/3") == Rational(7, 3));
  CHECK(Rational::parse("123456789012345678901234567890/2").str() ==
        "61728394506172839450617283945");
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("/2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
}

TEST_CASE("division and inversion guard zero") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
  CHECK(Rational(2, 3).inverse() == Rational(3, 2));
}

TEST_CASE("integer powers, both signs") {
  CHECK(degen::pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(degen::pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(degen::pow(Rational(-1, 2), 2) == Rational(1, 4));
  CHECK(degen::pow(Rational(-1, 2), -3) == Rational(-8));
  CHECK(degen::pow(Rational(7, 5), 0) == Rational(1));
  CHECK(degen::pow(Rational(0), 5) == Rational(0));
  CHECK_THROWS_AS(degen::pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("factorials and binomials") {
  CHECK(degen::factorial(0) == Rational(1));
  CHECK(degen::factorial(5) == Rational(120));
  CHECK(degen::factorial(20).str() == "2432902008176640000");
  CHECK(degen::binomial(5, 2) == Rational(10));
  CHECK(degen::binomial(5, 0) == Rational(1));
  CHECK(degen::binomial(4, 7) == Rational(0));
}

TEST_CASE("comparisons") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(Rational(5, 2) > Rational(2));
  CHECK(Rational(1, 2) != Rational(1, 3));
}
