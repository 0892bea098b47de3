#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "degen/basics.hpp"
#include "degen/stirling.hpp"

using degen::LambdaPoly;
using degen::Rational;

namespace {

// Plain classical recurrences, local to the tests, used as oracles for the
// zero-deformation specialization.
long oracle_s2(int n, int k) {
  if (n == 0 && k == 0) return 1;
  if (k < 0 || k > n || n < 0) return 0;
  return oracle_s2(n - 1, k - 1) + k * oracle_s2(n - 1, k);
}

long oracle_s1_signed(int n, int k) {
  if (n == 0 && k == 0) return 1;
  if (k < 0 || k > n || n < 0) return 0;
  return oracle_s1_signed(n - 1, k - 1) - (n - 1) * oracle_s1_signed(n - 1, k);
}

std::vector<Rational> ladder(int count) {
  std::vector<Rational> out;
  for (int j = 0; j < count; ++j) out.emplace_back(j - 2, j + 1);
  return out;
}

}  // namespace

TEST_CASE("second kind, frozen small entries") {
  CHECK(degen::s2_lambda(0, 0) == LambdaPoly(Rational(1)));
  CHECK(degen::s2_lambda(4, 4) == LambdaPoly(Rational(1)));
  CHECK(degen::s2_lambda(2, 1) == LambdaPoly({Rational(1), Rational(-1)}));   // 1 - L
  CHECK(degen::s2_lambda(3, 2) == LambdaPoly({Rational(3), Rational(-3)}));   // 3 - 3L
  CHECK(degen::s2_lambda(3, 0).is_zero());
  CHECK(degen::s2_lambda(2, 5).is_zero());
  CHECK(degen::s2_lambda(2, -1).is_zero());
}

TEST_CASE("explicit alternating sum, frozen values") {
  CHECK(degen::s2_lambda_explicit(3, 2, Rational(0)) == Rational(3));
  for (const auto& lam : ladder(6))
    CHECK(degen::s2_lambda_explicit(2, 1, lam) == Rational(1) - lam);
  CHECK(degen::s2_lambda_explicit(1, 3, Rational(7, 2)) == Rational(0));
  CHECK(degen::s2_lambda_explicit(0, 4, Rational(-2, 3)) == Rational(0));
}

TEST_CASE("recurrence agrees with the explicit sum beyond the degree bound") {
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k)
      for (const auto& lam : ladder(n + 2))
        CHECK(degen::s2_lambda_at(n, k, lam) == degen::s2_lambda_explicit(n, k, lam));
}

TEST_CASE("first kind, frozen small entries") {
  CHECK(degen::s1_lambda(0, 0) == LambdaPoly(Rational(1)));
  CHECK(degen::s1_lambda(3, 3) == LambdaPoly(Rational(1)));
  CHECK(degen::s1_lambda(2, 1) == LambdaPoly({Rational(-1), Rational(1)}));  // -1 + L
  for (int n = 1; n <= 8; ++n) CHECK(degen::s1_lambda(n, 0).is_zero());
}

TEST_CASE("first kind inverts the basis change") {
  // (x)_n must equal sum_k S1(n,k) (x)_{k,lam} at sampled points.
  for (int n = 0; n <= 8; ++n)
    for (const auto& lam : ladder(5))
      for (const auto& x : ladder(4)) {
        Rational acc(0);
        for (int k = 0; k <= n; ++k)
          acc += degen::s1_lambda_at(n, k, lam) *
                 degen::falling_factorial_lambda(x, static_cast<unsigned>(k), lam);
        CHECK(acc == degen::falling_factorial(x, static_cast<unsigned>(n)));
      }
}

TEST_CASE("orthogonality of the two kinds") {
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) CHECK(degen::orthogonality_defect(n, k).is_zero());
}

TEST_CASE("zero deformation reproduces the classical numbers") {
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(degen::s2_lambda_at(n, k, Rational(0)) == Rational(oracle_s2(n, k)));
      CHECK(degen::s1_lambda_at(n, k, Rational(0)) == Rational(oracle_s1_signed(n, k)));
    }
}

TEST_CASE("alternating factorial sum collapses to a monomial") {
  for (int n = 1; n <= 12; ++n) {
    LambdaPoly lhs;
    for (int k = 1; k <= n; ++k) {
      LambdaPoly term = degen::s2_lambda(n, k) * degen::factorial(static_cast<unsigned long>(k - 1));
      if ((k - 1) % 2 != 0) term = term * Rational(-1);
      lhs += term;
    }
    LambdaPoly rhs = LambdaPoly::monomial(degen::factorial(static_cast<unsigned long>(n - 1)),
                                          static_cast<std::size_t>(n - 1));
    if ((n - 1) % 2 != 0) rhs = rhs * Rational(-1);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("tables grow monotonically and stay consistent") {
  degen::StirlingTable table(degen::StirlingKind::second);
  table.ensure(4);
  const LambdaPoly early = table.at(4, 2);
  table.ensure(9);
  CHECK(table.at(4, 2) == early);
  CHECK(table.max_n() == 9);
  table.ensure(3);  // no shrink
  CHECK(table.max_n() == 9);

  degen::StirlingTable first(degen::StirlingKind::first);
  first.ensure(5);
  CHECK(first.at(2, 1) == LambdaPoly({Rational(-1), Rational(1)}));
}
