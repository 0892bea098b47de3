#pragma once

#include <vector>

#include "degen/poly.hpp"
#include "degen/rational.hpp"

namespace degen {

enum class StirlingKind { first, second };

/// Triangular cache of deformed Stirling numbers, symbolic in lambda. The
/// table only grows; a completed table is immutable and safe to read from any
/// thread. Growth is a single-writer operation: callers must serialize
/// concurrent ensure() calls (contract, not mechanism).
class StirlingTable {
public:
  explicit StirlingTable(StirlingKind kind) : kind_(kind) {}

  StirlingKind kind() const { return kind_; }
  int max_n() const { return static_cast<int>(rows_.size()) - 1; }

  void ensure(int max_n);

  /// Zero polynomial outside the triangle (k < 0, k > n); grows on demand.
  LambdaPoly at(int n, int k);

private:
  void grow_second(int target);
  void grow_first(int target);

  StirlingKind kind_;
  std::vector<std::vector<LambdaPoly>> rows_;
};

/// Second kind, from the additive recurrence
/// S2(n+1,k) = S2(n,k-1) + (k - n*L) * S2(n,k), S2(0,0) = 1.
/// Served from a shared table; symbolic entries are the single source of
/// truth and rational-lambda queries evaluate them.
LambdaPoly s2_lambda(int n, int k);

/// First kind, by exact triangular change of basis between the classical
/// falling-factorial basis and the deformed one.
LambdaPoly s1_lambda(int n, int k);

Rational s2_lambda_at(int n, int k, const Rational& lambda);
Rational s1_lambda_at(int n, int k, const Rational& lambda);

/// Independent route for the second kind: the alternating binomial sum
/// (1/k!) sum_l C(k,l) (-1)^(k-l) (l)_{n,lam}. Does not touch the table.
Rational s2_lambda_explicit(int n, int k, const Rational& lambda);

/// sum_m S2(n,m) S1(m,k) minus the Kronecker delta; zero when the two kinds
/// are mutually inverse.
LambdaPoly orthogonality_defect(int n, int k);

}  // namespace degen
