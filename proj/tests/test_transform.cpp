#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "degen/transform.hpp"

using degen::DegenerateSeries;
using degen::IdentityParams;
using degen::Rational;

namespace {

const std::vector<Rational> kSamples = {Rational(0),    Rational(1),     Rational(-1),
                                        Rational(1, 2), Rational(-1, 3), Rational(2, 5),
                                        Rational(7, 3)};

struct Rng {
  std::uint64_t s = 0xfeedbeefu;
  std::uint64_t next() {
    s += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  Rational rat() {
    const long num = static_cast<long>(next() % 19) - 9;
    const long den = static_cast<long>(next() % 6) + 1;
    return Rational(num, den);
  }
  std::vector<Rational> coeffs(int support) {
    std::vector<Rational> out;
    for (int i = 0; i <= support; ++i) out.push_back(rat());
    return out;
  }
};

}  // namespace

TEST_CASE("evaluation in the deformed basis") {
  CHECK(degen::eval_dseries({{Rational(9, 4)}, Rational(1, 3)}, Rational(-5)) == Rational(9, 4));
  CHECK(degen::eval_dseries({{Rational(0), Rational(0), Rational(1)}, Rational(1, 2)}, Rational(2)) ==
        Rational(3));
  CHECK(degen::eval_dseries({{Rational(1), Rational(1)}, Rational(2, 7)}, Rational(5, 3)) ==
        Rational(1) + Rational(5, 3));
}

TEST_CASE("derivative at zero") {
  CHECK(degen::dseries_derivative_at_zero({{Rational(4, 9)}, Rational(1)}) == Rational(0));
  CHECK(degen::dseries_derivative_at_zero({{Rational(0), Rational(1)}, Rational(5)}) == Rational(1));
  CHECK(degen::dseries_derivative_at_zero({{Rational(0), Rational(0), Rational(1)}, Rational(1, 3)}) ==
        Rational(-1, 3));
}

TEST_CASE("finite difference basics") {
  const DegenerateSeries f{{Rational(2), Rational(-1), Rational(3)}, Rational(1, 2)};
  CHECK(degen::finite_difference(f, 0, Rational(3, 2), Rational(5)) ==
        degen::eval_dseries(f, Rational(3, 2)));
  // a pure top basis element gives the closed form (-1)^n n! z^n
  for (int n = 0; n <= 5; ++n) {
    std::vector<Rational> delta(static_cast<std::size_t>(n) + 1, Rational(0));
    delta.back() = Rational(1);
    const DegenerateSeries g{delta, Rational(2, 5)};
    Rational expect = degen::factorial(static_cast<unsigned long>(n)) *
                      degen::pow(Rational(3, 2), n);
    if (n % 2 != 0) expect = -expect;
    CHECK(degen::finite_difference(g, n, Rational(-2), Rational(3, 2)) == expect);
  }
}

TEST_CASE("differences beyond the support vanish") {
  Rng rng;
  for (int support = 0; support <= 5; ++support) {
    const DegenerateSeries f{rng.coeffs(support), Rational(1, 2)};
    for (int n = support + 1; n <= support + 4; ++n)
      for (const auto& z : {Rational(1), Rational(-2, 3), Rational(7, 3)})
        CHECK(degen::finite_difference(f, n, Rational(3, 7), z) == Rational(0));
  }
}

TEST_CASE("finite difference is linear in the coefficients") {
  Rng rng;
  for (int trial = 0; trial < 10; ++trial) {
    const int support = 1 + static_cast<int>(rng.next() % 5);
    const DegenerateSeries f{rng.coeffs(support), Rational(-1, 3)};
    const DegenerateSeries g{rng.coeffs(support), Rational(-1, 3)};
    const Rational alpha = rng.rat(), beta = rng.rat();
    std::vector<Rational> mixed;
    for (int i = 0; i <= support; ++i)
      mixed.push_back(alpha * f.coeffs[static_cast<std::size_t>(i)] +
                      beta * g.coeffs[static_cast<std::size_t>(i)]);
    const DegenerateSeries h{mixed, Rational(-1, 3)};
    const int n = static_cast<int>(rng.next() % 5);
    const Rational y = rng.rat(), z = Rational(5, 4);
    CHECK(degen::finite_difference(h, n, y, z) ==
          alpha * degen::finite_difference(f, n, y, z) + beta * degen::finite_difference(g, n, y, z));
  }
}

TEST_CASE("frozen registry examples") {
  {
    IdentityParams p;
    p.n = 2;
    p.y = Rational(1);
    p.z = Rational(3);
    p.lambda = Rational(1, 5);
    const auto res = degen::verify_identity("T4", p);
    CHECK(res.pass);
    CHECK(res.lhs == "18");
    CHECK(res.rhs == "18");
  }
  {
    IdentityParams p;
    p.n = 1;
    p.lambda = Rational(19, 4);
    const auto res = degen::verify_identity("L5", p);
    CHECK(res.pass);
    CHECK(res.lhs == "1");
  }
  {
    IdentityParams p;
    p.n = 1;
    p.lambda = Rational(2, 7);
    const auto res = degen::verify_identity("T14", p);
    CHECK(res.pass);
    CHECK(res.lhs == "-5/14");
  }
}

TEST_CASE("zero deformation reduces the weighted transform to the classical one") {
  // At lambda 0 with z = 1, y = 0 the series becomes an ordinary polynomial
  // sum a_m t^m, and the transform must match a direct classical evaluation.
  auto classical_s2 = [](int n, int k) {
    if (n == 0 && k == 0) return Rational(1);
    if (k < 1 || k > n) return Rational(0);
    std::vector<std::vector<long>> rows{{1}};
    for (int i = 1; i <= n; ++i) {
      std::vector<long> row(static_cast<std::size_t>(i) + 1, 0);
      for (int j = 1; j <= i; ++j) {
        const auto& prev = rows.back();
        const long up = j <= i - 1 ? prev[static_cast<std::size_t>(j)] : 0;
        const long left = j - 1 <= i - 1 ? prev[static_cast<std::size_t>(j - 1)] : 0;
        row[static_cast<std::size_t>(j)] = left + j * up;
      }
      rows.push_back(std::move(row));
    }
    return Rational(rows.back()[static_cast<std::size_t>(k)]);
  };
  Rng rng;
  for (int support = 0; support <= 5; ++support) {
    const std::vector<Rational> a = rng.coeffs(support);
    for (int n = 0; n <= support + 1; ++n) {
      Rational direct(0);
      for (int k = 0; k <= n; ++k) {
        // f(k) = sum_m a_m k^m
        Rational fk(0);
        for (int m = 0; m <= support; ++m)
          fk += a[static_cast<std::size_t>(m)] * degen::pow(Rational(k), m);
        Rational term = degen::binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)) * fk;
        if (k % 2 != 0) term = -term;
        direct += term;
      }
      Rational stirling_sum(0);
      for (int m = 0; m <= support; ++m)
        stirling_sum += a[static_cast<std::size_t>(m)] * classical_s2(m, n);
      Rational expect = degen::factorial(static_cast<unsigned long>(n)) * stirling_sum;
      if (n % 2 != 0) expect = -expect;
      CHECK(direct == expect);

      IdentityParams p;
      p.n = n;
      p.y = Rational(0);
      p.z = Rational(1);
      p.lambda = Rational(0);
      p.f = a;
      const auto res = degen::verify_identity("T3", p);
      CHECK(res.pass);
      CHECK(res.lhs == direct.str());
    }
  }
}

TEST_CASE("registry smoke run over a small grid") {
  Rng rng;
  const std::vector<Rational> fcoeffs = rng.coeffs(3);
  for (const auto& id : degen::registry_ids()) {
    IdentityParams p;
    p.n = 2;
    p.m = 2;
    p.p = 3;
    p.r = 2;
    p.x = Rational(1, 2);
    p.y = Rational(-1, 3);
    p.z = Rational(2, 5);
    p.lambda = Rational(7, 3);
    p.f = fcoeffs;
    const auto res = degen::verify_identity(id, p);
    CHECK(res.pass);
    CHECK(res.identity_id == id);
  }
}

TEST_CASE("usage and domain errors") {
  CHECK_THROWS_AS(degen::verify_identity("nope", {}), std::invalid_argument);
  {
    IdentityParams p;  // T1 without m
    p.n = 1;
    p.y = Rational(0);
    p.z = Rational(1);
    p.lambda = Rational(0);
    CHECK_THROWS_AS(degen::verify_identity("T1", p), std::invalid_argument);
  }
  {
    IdentityParams p;  // zero z
    p.n = 1;
    p.m = 1;
    p.y = Rational(0);
    p.z = Rational(0);
    p.lambda = Rational(0);
    CHECK_THROWS_AS(degen::verify_identity("T1", p), std::domain_error);
  }
  {
    IdentityParams p;  // T9 needs p >= n
    p.n = 3;
    p.p = 1;
    p.z = Rational(1);
    p.lambda = Rational(1, 2);
    CHECK_THROWS_AS(degen::verify_identity("T9", p), std::domain_error);
  }
  {
    IdentityParams p;  // L5 needs n >= 1
    p.n = 0;
    p.lambda = Rational(1);
    CHECK_THROWS_AS(degen::verify_identity("L5", p), std::domain_error);
  }
}

TEST_CASE("perturbed right side must fail with exact values") {
  IdentityParams p;
  p.n = 2;
  p.y = Rational(1);
  p.z = Rational(3);
  p.lambda = Rational(1, 5);
  const auto res = degen::verify_identity("T4", p, true);
  CHECK_FALSE(res.pass);
  CHECK(res.lhs == "18");
  CHECK(res.rhs == "19");
}
