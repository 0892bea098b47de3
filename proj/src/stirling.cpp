#include "degen/stirling.hpp"

#include <cassert>
#include <stdexcept>

#include "degen/basics.hpp"

namespace degen {

void StirlingTable::ensure(int max_n) {
  if (max_n < 0) throw std::invalid_argument("negative table size");
  if (max_n <= this->max_n()) return;
  if (kind_ == StirlingKind::second)
    grow_second(max_n);
  else
    grow_first(max_n);
}

LambdaPoly StirlingTable::at(int n, int k) {
  if (n < 0) throw std::invalid_argument("negative row");
  if (k < 0 || k > n) return LambdaPoly();
  ensure(n);
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

void StirlingTable::grow_second(int target) {
  if (rows_.empty()) rows_.push_back({LambdaPoly(Rational(1))});
  for (int n = max_n(); n < target; ++n) {
    const auto& prev = rows_.back();
    std::vector<LambdaPoly> row(static_cast<std::size_t>(n) + 2, LambdaPoly());
    for (int k = 0; k <= n + 1; ++k) {
      LambdaPoly v;
      if (k >= 1 && k - 1 <= n) v += prev[static_cast<std::size_t>(k - 1)];
      if (k <= n)
        v += LambdaPoly{Rational(k), Rational(-n)} * prev[static_cast<std::size_t>(k)];  // (k - n*L)
      row[static_cast<std::size_t>(k)] = std::move(v);
    }
    rows_.push_back(std::move(row));
  }
}

void StirlingTable::grow_first(int target) {
  // Coefficients of (x)_n in the deformed basis: expand both bases in
  // monomials and back-substitute from the top degree down. The deformed
  // basis polynomial of degree k is monic in x, so the solve is exact.
  for (int n = max_n() + 1; n <= target; ++n) {
    DensePoly<LambdaPoly> remainder = falling_factorial_in_x(static_cast<unsigned>(n));
    std::vector<LambdaPoly> row(static_cast<std::size_t>(n) + 1, LambdaPoly());
    for (int k = n; k >= 0; --k) {
      const LambdaPoly c = remainder.coeff(static_cast<std::size_t>(k));
      row[static_cast<std::size_t>(k)] = c;
      if (!c.is_zero())
        remainder -= falling_factorial_lambda_in_x(static_cast<unsigned>(k)) * c;
    }
    assert(remainder.is_zero());
    rows_.push_back(std::move(row));
  }
}

namespace {

StirlingTable& shared_table(StirlingKind kind) {
  static StirlingTable second(StirlingKind::second);
  static StirlingTable first(StirlingKind::first);
  return kind == StirlingKind::second ? second : first;
}

}  // namespace

LambdaPoly s2_lambda(int n, int k) { return shared_table(StirlingKind::second).at(n, k); }

LambdaPoly s1_lambda(int n, int k) { return shared_table(StirlingKind::first).at(n, k); }

Rational s2_lambda_at(int n, int k, const Rational& lambda) { return s2_lambda(n, k).eval(lambda); }

Rational s1_lambda_at(int n, int k, const Rational& lambda) { return s1_lambda(n, k).eval(lambda); }

Rational s2_lambda_explicit(int n, int k, const Rational& lambda) {
  if (n < 0 || k < 0) throw std::invalid_argument("negative index");
  Rational acc(0);
  for (int l = 0; l <= k; ++l) {
    Rational term = binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(l)) *
                    falling_factorial_lambda(Rational(l), static_cast<unsigned>(n), lambda);
    if ((k - l) % 2 != 0) term = -term;
    acc += term;
  }
  return acc / factorial(static_cast<unsigned long>(k));
}

LambdaPoly orthogonality_defect(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
  LambdaPoly acc;
  for (int m = k; m <= n; ++m) acc += s2_lambda(n, m) * s1_lambda(m, k);
  if (n == k) acc -= LambdaPoly(Rational(1));
  return acc;
}

}  // namespace degen
