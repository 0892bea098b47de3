#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "degen/rational.hpp"

namespace degen {

/// Finite-support series in the deformed falling-factorial basis:
/// f(t) = sum_{k=0}^{M} a_k (t)_{k,lam}. The top coefficient may be zero;
/// the transform identities quantify over indices, not degree.
struct DegenerateSeries {
  std::vector<Rational> coeffs;  // a_0 .. a_M
  Rational lambda;

  int support() const { return static_cast<int>(coeffs.size()) - 1; }
};

Rational eval_dseries(const DegenerateSeries& f, const Rational& t);

/// f'(0) = sum_{k>=1} a_k (-1)^(k-1) lam^(k-1) (k-1)!.
Rational dseries_derivative_at_zero(const DegenerateSeries& f);

/// Alternating binomial transform sum_k C(n,k) (-1)^k f(y + z*k); vanishes
/// for n greater than the support.
Rational finite_difference(const DegenerateSeries& f, int n, const Rational& y, const Rational& z);

/// Parameter bundle for the identity registry; each identity requires its own
/// subset and rejects calls with that subset incomplete.
struct IdentityParams {
  std::optional<int> n, m, p, r;
  std::optional<Rational> x, y, z, lambda;
  std::optional<std::vector<Rational>> f;
};

struct IdentityCheckResult {
  std::string identity_id;
  std::vector<std::pair<std::string, std::string>> params;  // echoed in fixed order
  std::string lhs;
  std::string rhs;
  bool pass;  // pass == (lhs == rhs); extra routes fold into rhs on mismatch
};

/// Stable ids of the registered identities, in canonical report order.
const std::vector<std::string>& registry_ids();

/// Evaluates both sides of the named identity by two code paths that share
/// only the exact-arithmetic core. Unknown id -> std::invalid_argument;
/// parameter domain violations -> std::domain_error. When perturb_rhs is set
/// (harness self-test) the right side is offset by one before comparison.
IdentityCheckResult verify_identity(const std::string& identity_id, const IdentityParams& params,
                                    bool perturb_rhs = false);

}  // namespace degen
