#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace schur_ample {

/// Partition λ = (λ₁ ≥ … ≥ λ_k > 0), stored dense as its part list.
class Partition {
 public:
  explicit Partition(std::vector<long> parts);

  /// Parse a comma-separated part list, e.g. "5,3,3,1".
  static Partition parse(const std::string& csv);

  const std::vector<long>& parts() const { return parts_; }
  long num_parts() const { return static_cast<long>(parts_.size()); }
  long weight() const;

  /// 1-based access; parts beyond k read as 0.
  long part(long i) const;

  Partition conjugate() const;
  Partition scaled(long m) const;
  Partition primitive() const;  // λ / gcd(λ)
  long parts_gcd() const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  std::string to_string() const;

 private:
  std::vector<long> parts_;
};

/// Jump sequence s₁ > … > s_t of a partition: the indices where λ strictly
/// drops, equal to the distinct part lengths of the conjugate. The conjugate
/// then reads λ* = (s₁^{b₁}, …, s_t^{b_t}).
struct JumpSequence {
  std::vector<long> values;          // s₁ > … > s_t
  std::vector<long> multiplicities;  // b₁, …, b_t

  long t() const { return static_cast<long>(values.size()); }
  long s1() const { return values.front(); }
};

JumpSequence jump_sequence(const Partition& lambda);

/// |λ*₊| = Σ_j (λ*_j + 1) = |λ| + λ₁ = 2λ₁ + λ₂ + … + λ_k.
long ampleness_weight(const Partition& lambda);

/// The gcd-normalized weight (2λ₁ + … + λ_k) / gcd(λ).
long ampleness_weight_primitive(const Partition& lambda);

/// Brueckmann–Rackwitz vanishing predicate: λ₁* + … + λ_c* < N − c, with
/// missing conjugate parts counting as zero. True forces
/// H⁰(X, S^λ Ω_X) = 0 for smooth codimension-c complete intersections in P^N.
bool br_vanishes(long N, long c, const Partition& lambda);

struct OptimalityReport {
  long N = 0, c = 0, m_lo = 0, m_hi = 0;
  bool precondition_ok = false;  // (k+1)c < N
  std::vector<long> violations;  // m values where vanishing fails (expected none)
  bool all_vanish() const { return precondition_ok && violations.empty(); }
};

/// Sub-critical regime audit: for (k+1)c < N, vanishing of S^{mλ} must hold
/// for every c <= m <= m_max (the inequality does not involve m).
OptimalityReport optimality_audit(long N, long c, const Partition& lambda, long m_max);

/// dim S^λ(V) for dim V = n, by the hook content formula. Zero when λ has
/// more than n parts.
mpz_class schur_dim(const Partition& lambda, long n);

struct QuotientBound {
  mpz_class lhs, rhs;
  bool ok = false;  // lhs <= rhs
};

/// Dimension-level check that S^λ is a quotient of
/// S^{λ_{s₁}}(Λ^{s₁}) ⊗ S^{λ_{s₂}-λ_{s₁}}(Λ^{s₂}) ⊗ … (factors over jump levels).
QuotientBound quotient_upper_bound(const Partition& lambda, long n);

/// dim Flag_s(V) for dim V = n, via the nested fibration sum
/// Σ_i s_i (s_{i-1} - s_i) with s₀ = n. Requires s₁ <= n-1.
long flag_dim(const JumpSequence& s, long n);

}  // namespace schur_ample
