#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "schur_ample/partition.hpp"
#include "schur_ample/report.hpp"

namespace schur_ample {

/// Full parameter tuple of the main effectivity theorem, with every invariant
/// re-checkable. All entries are exact integers.
struct BoundLedger {
  long N = 0, c = 0;
  Partition lambda;
  long k = 0;        // number of parts
  long weight = 0;   // |λ*₊| = 2λ₁ + λ₂ + … + λ_k
  std::vector<mpz_class> delta, m, epsilon;
  mpz_class r, u;
  std::vector<mpz_class> d;  // d_i = δ_i (r+1) + ε_i

  /// Re-validate every invariant; throws with a description on failure.
  void validate() const;
  json to_json() const;
};

struct ParamOverrides {
  std::optional<std::vector<mpz_class>> delta, m, epsilon;
  std::optional<mpz_class> r;
};

/// Fill the theorem's parameter list with minimal admissible values (or the
/// given overrides) and validate: δ_i = N + k(N-k), m_i = ceil(Π δ_j^{k+1} / δ_i),
/// ε_i = 1, r = 1 + |λ*₊| Σ m_p (ε_p + δ_p).
BoundLedger theorem_params(long N, long c, const Partition& lambda,
                           const ParamOverrides& overrides = {});

/// The uniform degree bound (1 + 2c |λ*₊| (N + k(N-k))^{c(k+1)+1})², computed
/// from the gcd-normalized partition. `intro_variant` drops the +1 in the
/// exponent; both conventions are exposed, and the default is the one that
/// reproduces the N=5, c=2, λ=(1,1) reference value just under 6e16.
mpz_class corollary_bound(long N, long c, const Partition& lambda, bool intro_variant = false);

/// Deterministic decomposition d₀ = p(d+1) + q(d+2) with p, q >= 0, valid for
/// every d₀ >= d(d+1): q = d₀ mod (d+1), p = (d₀-q)/(d+1) - q.
std::pair<mpz_class, mpz_class> decompose_degree(const mpz_class& d, const mpz_class& d0);

/// Factorization plan for one target degree: count copies of d+1 and d+2.
struct CoupFactor {
  mpz_class degree;
  mpz_class count;
};
struct CoupPlanEntry {
  mpz_class target;  // d_i
  mpz_class p, q;
  std::vector<CoupFactor> factors;
};
struct CoupPlan {
  mpz_class base_degree;  // d = δ(r+1) for the fixed parameter choices
  std::vector<CoupPlanEntry> entries;
  json to_json() const;
};

/// Product plan: each hypersurface of degree d_i >= d(d+1) factors into
/// degree-(d+1) and degree-(d+2) pieces, where d = δ(r+1) with δ = N+k(N-k)
/// and r = 2c|λ*₊|δ^{c(k+1)} - 1.
CoupPlan coup_product_plan(long N, long c, const Partition& lambda,
                           const std::vector<mpz_class>& degrees);

/// The hypersurface hyperbolicity bound d_N = (N+1)^{2N+6}, the
/// complete-intersection bound d_N' = 4(⌈N/2-1⌉+1)(N+⌈N/2-1⌉(N-⌈N/2-1⌉))^{N+1},
/// and the claimed majorant 2(N+1)((N-2)/2)^{2N+2} (floored; the comparison is
/// reported per N, never assumed).
struct HyperbolicityBounds {
  long N = 0;
  mpz_class d_N;
  mpz_class d_N_prime;
  mpz_class majorant;
  bool prime_below_dN = false;        // d_N' < d_N
  bool prime_below_majorant = false;  // d_N' <= majorant
  json to_json() const;
};
HyperbolicityBounds hyperbolicity_bounds(long N);

/// Effective-Nakayama threshold m_i = Π δ_j^{k+1} / δ_i, ceiled when the
/// division is not exact (the source inequality is a lower bound, so rounding
/// up is safe).
mpz_class nakayama_m(const std::vector<mpz_class>& deltas, long k, std::size_t i,
                     bool* exact = nullptr);

}  // namespace schur_ample
