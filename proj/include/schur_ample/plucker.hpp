#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schur_ample/partition.hpp"
#include "schur_ample/universal.hpp"

namespace schur_ample {

/// Column choice for a Plücker coordinate of size l: the minor keeps the l
/// FIRST rows of A and these l distinct columns.
struct PluckerSelector {
  std::vector<long> cols;

  long size() const { return static_cast<long>(cols.size()); }

  void validate(long ncols) const {
    if (cols.empty()) throw std::invalid_argument("PluckerSelector: empty");
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (cols[i] < 0 || cols[i] >= ncols)
        throw std::invalid_argument("PluckerSelector: column out of range");
      for (std::size_t j = i + 1; j < cols.size(); ++j)
        if (cols[i] == cols[j]) throw std::invalid_argument("PluckerSelector: repeated column");
    }
  }
};

/// Plücker coordinate of size l = sel.size(): determinant of the submatrix
/// on the first l rows and the selected columns.
template <class K>
K plucker_minor(const DenseMatrix<K>& A, const PluckerSelector& sel) {
  sel.validate(A.cols());
  const long l = sel.size();
  if (l > A.rows()) throw std::invalid_argument("plucker_minor: selector size exceeds row count");
  DenseMatrix<K> S(l, l);
  for (long i = 0; i < l; ++i)
    for (long j = 0; j < l; ++j) S.at(i, j) = A.at(i, sel.cols[j]);
  return det_bareiss(std::move(S));
}

/// One streamed coordinate of Δ(a,η): a product of b₁+…+b_t minors with
/// sizes s₁+1, …, s_t+1 in the prescribed multiplicities.
template <class K>
struct DeltaCoordinate {
  std::vector<PluckerSelector> selectors;
  K value;
};

/*
 * Lazy enumeration of the coordinates of Δ(a,η). The full coordinate count is
 * a product of binomials in N_δ and is astronomically large for real δ, so
 * coordinates are produced on demand, in a fixed order: one selector per
 * factor (levels in jump order, b_i factors per level), each selector running
 * through the size-(s_i+1) column combinations lexicographically, with the
 * last factor advancing fastest.
 */
template <class K>
class DeltaCoordStream {
 public:
  DeltaCoordStream(const Instance& inst, const ParameterPoint<K>& a, const FlagFrame<K>& fr,
                   const JumpSequence& s)
      : A_(build_A(inst, a, fr)) {
    if (s.s1() != inst.k)
      throw std::invalid_argument("delta_coords: jump sequence head must equal k");
    if (exact_rank(A_) != inst.k + 1)
      throw std::invalid_argument("delta_coords: frame violates condition (*) (rank deficient)");
    for (long i = 0; i < s.t(); ++i)
      for (long b = 0; b < s.multiplicities[i]; ++b) sizes_.push_back(s.values[i] + 1);
    for (long sz : sizes_) {
      if (sz > A_.cols()) throw std::invalid_argument("delta_coords: minor wider than matrix");
      std::vector<long> first(sz);
      for (long j = 0; j < sz; ++j) first[j] = j;
      state_.push_back(std::move(first));
    }
  }

  const DenseMatrix<K>& matrix() const { return A_; }

  /// Next coordinate, or nullopt when the enumeration is exhausted.
  std::optional<DeltaCoordinate<K>> next() {
    if (done_) return std::nullopt;
    DeltaCoordinate<K> out;
    out.value = K(1);
    for (const auto& cols : state_) {
      PluckerSelector sel{cols};
      out.selectors.push_back(sel);
      out.value = out.value * plucker_minor(A_, sel);
    }
    advance();
    return out;
  }

 private:
  void advance() {
    for (long f = static_cast<long>(state_.size()) - 1; f >= 0; --f) {
      if (next_combination(state_[f], A_.cols())) return;
      // wrapped: reset this factor and carry left
      for (long j = 0; j < sizes_[f]; ++j) state_[f][j] = j;
    }
    done_ = true;
  }

  static bool next_combination(std::vector<long>& c, long n) {
    const long k = static_cast<long>(c.size());
    long i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (long j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    return true;
  }

  DenseMatrix<K> A_;
  std::vector<long> sizes_;
  std::vector<std::vector<long>> state_;
  bool done_ = false;
};

/// A certified nonvanishing coordinate: per level, the pivot columns of the
/// row prefix give a nonzero minor; the product over levels is then nonzero.
/// (All row prefixes of a full-row-rank matrix have full rank.)
template <class K>
DeltaCoordinate<K> delta_nonvanishing_witness(const DenseMatrix<K>& A, const JumpSequence& s) {
  DeltaCoordinate<K> out;
  out.value = K(1);
  for (long i = 0; i < s.t(); ++i) {
    const long l = s.values[i] + 1;
    // Pivot columns of the first l rows, by Gaussian elimination.
    DenseMatrix<K> M(l, A.cols());
    for (long r = 0; r < l; ++r)
      for (long c = 0; c < A.cols(); ++c) M.at(r, c) = A.at(r, c);
    std::vector<long> pivots;
    long row = 0;
    for (long c = 0; c < M.cols() && row < l; ++c) {
      long piv = -1;
      for (long rr = row; rr < l; ++rr)
        if (!FieldTraits<K>::is_zero(M.at(rr, c))) {
          piv = rr;
          break;
        }
      if (piv < 0) continue;
      if (piv != row)
        for (long j = 0; j < M.cols(); ++j) std::swap(M.at(piv, j), M.at(row, j));
      for (long rr = row + 1; rr < l; ++rr) {
        if (FieldTraits<K>::is_zero(M.at(rr, c))) continue;
        K f = M.at(rr, c) / M.at(row, c);
        for (long j = c; j < M.cols(); ++j) M.at(rr, j) -= f * M.at(row, j);
      }
      pivots.push_back(c);
      ++row;
    }
    if (static_cast<long>(pivots.size()) < l)
      throw std::invalid_argument("delta_nonvanishing_witness: row prefix rank deficient");
    PluckerSelector sel{pivots};
    K minor = plucker_minor(A, sel);
    for (long b = 0; b < s.multiplicities[i]; ++b) {
      out.selectors.push_back(sel);
      out.value = out.value * minor;
    }
  }
  return out;
}

/// Exact verdict of the section-gluing identity
/// det B_V = g_{VV'}^l det B_{V'} for l sections of a common degree.
template <class K>
struct CocycleVerdict {
  K det_from, det_to, factor;  // factor = g_{VV'}^l
  bool ok = false;

  json to_json() const {
    return json{{"det_from", scalar_to_json(det_from)},
                {"det_to", scalar_to_json(det_to)},
                {"factor", scalar_to_json(factor)},
                {"ok", ok}};
  }
};

/// Build B on both charts (same abstract tangent vectors, transported by the
/// exact Jacobian) and compare determinants.
template <class K>
CocycleVerdict<K> cocycle_check(const std::vector<HomogPoly<K>>& omegas, int chart_from,
                                int chart_to, std::span<const K> x,
                                const std::vector<std::vector<K>>& vs) {
  const long l = static_cast<long>(omegas.size());
  if (l < 1) throw std::invalid_argument("cocycle_check: need at least one section");
  if (static_cast<long>(vs.size()) != l - 1)
    throw std::invalid_argument("cocycle_check: need l-1 tangent vectors");
  const long d = omegas[0].degree();
  for (const auto& w : omegas)
    if (w.degree() != d) throw std::invalid_argument("cocycle_check: mixed degrees");

  auto build = [&](int chart, const std::vector<std::vector<K>>& tangents) {
    DenseMatrix<K> B(l, l);
    for (long j = 0; j < l; ++j) {
      B.at(0, j) = chart_eval(omegas[j], chart, x);
      for (long i = 0; i + 1 < l; ++i)
        B.at(i + 1, j) = dir_derivative(omegas[j], chart, x, std::span<const K>(tangents[i]));
    }
    return B;
  };

  std::vector<std::vector<K>> moved;
  moved.reserve(vs.size());
  for (const auto& v : vs)
    moved.push_back(transport_tangent<K>(chart_from, chart_to, x, std::span<const K>(v)));

  CocycleVerdict<K> verdict;
  verdict.det_from = det_bareiss(build(chart_from, vs));
  verdict.det_to = det_bareiss(build(chart_to, moved));
  verdict.factor = FieldTraits<K>::pow(transition_factor<K>(d, chart_from, chart_to, x), l);
  verdict.ok = (verdict.det_from == verdict.factor * verdict.det_to);
  return verdict;
}

/// O_M-twist exponent of Δ(a,·)* Q_δ((1,…,1)): |λ*₊| (ε + δ).
long pullback_degree(const Partition& lambda, long epsilon, long delta);

/// Numeric shadow of the O_M(l(ε+δ)) twist: the size-l minor of A computed on
/// two charts differs by exactly g^{l(ε+δ)}.
template <class K>
struct MinorTransitionVerdict {
  K minor_from, minor_to, factor;
  bool ok = false;

  json to_json() const {
    return json{{"minor_from", scalar_to_json(minor_from)},
                {"minor_to", scalar_to_json(minor_to)},
                {"factor", scalar_to_json(factor)},
                {"ok", ok}};
  }
};

template <class K>
MinorTransitionVerdict<K> minor_transition_check(const Instance& inst,
                                                 const ParameterPoint<K>& a,
                                                 const PluckerSelector& sel,
                                                 const FlagFrame<K>& fr, int chart_to) {
  DenseMatrix<K> A_from = build_A(inst, a, fr);
  FlagFrame<K> moved = transport_frame(fr, chart_to);
  DenseMatrix<K> A_to = build_A(inst, a, moved);
  MinorTransitionVerdict<K> verdict;
  verdict.minor_from = plucker_minor(A_from, sel);
  verdict.minor_to = plucker_minor(A_to, sel);
  verdict.factor = transition_factor<K>(sel.size() * (inst.epsilon + inst.delta), fr.chart,
                                        chart_to, std::span<const K>(fr.x));
  verdict.ok = (verdict.minor_from == verdict.factor * verdict.minor_to);
  return verdict;
}

/// The coordinate-power point z = [x₀^r : … : x_N^r].
template <class K>
std::vector<K> psi_z(std::span<const K> x, long r) {
  std::vector<K> z;
  z.reserve(x.size());
  for (const K& c : x) z.push_back(FieldTraits<K>::pow(c, r));
  return z;
}

/// Ψ(a,·) at a frame: the Δ-coordinate stream plus z = [ξ(x)^r].
template <class K>
struct PsiValue {
  std::vector<K> z;
  DeltaCoordStream<K> delta;
};

template <class K>
PsiValue<K> psi(const Instance& inst, const ParameterPoint<K>& a, const FlagFrame<K>& fr,
                const JumpSequence& s) {
  return PsiValue<K>{psi_z(std::span<const K>(fr.x), inst.r),
                     DeltaCoordStream<K>(inst, a, fr, s)};
}

/// 𝒴-membership: for a frame tangent to H_a, every row of A contracts to
/// zero against z = x^r. The tangency precondition is verified on the big
/// polynomial E directly, so the contraction test exercises the identity
/// Σ_J α_J z^J = E(a,x), Σ_J θ_J(v) z^J = dE(x,v) through an independent
/// route.
template <class K>
struct YMembershipVerdict {
  bool tangent = false;
  std::string failed_condition;  // which tangency check failed, if any
  std::vector<K> contractions;   // k+1 values, all must be zero
  bool ok = false;

  json to_json() const {
    json c = json::array();
    for (const auto& v : contractions) c.push_back(scalar_to_json(v));
    return json{{"tangent", tangent},
                {"failed_condition", failed_condition},
                {"contractions", c},
                {"ok", ok}};
  }
};

template <class K>
YMembershipVerdict<K> verify_psi_in_Y(const Instance& inst, const ParameterPoint<K>& a,
                                      const FlagFrame<K>& fr) {
  YMembershipVerdict<K> verdict;
  HomogPoly<K> E = build_E(inst, a);
  std::span<const K> x(fr.x);
  if (!FieldTraits<K>::is_zero(E.eval(x))) {
    verdict.failed_condition = "E(a,x) != 0";
    return verdict;
  }
  for (int i = 0; i < inst.k; ++i) {
    if (!FieldTraits<K>::is_zero(dir_derivative(E, fr.chart, x, std::span<const K>(fr.v[i])))) {
      verdict.failed_condition = "dE(x,v_" + std::to_string(i + 1) + ") != 0";
      return verdict;
    }
  }
  verdict.tangent = true;

  DenseMatrix<K> A = build_A(inst, a, fr);
  std::vector<K> z = psi_z(x, inst.r);
  auto idx = enumerate_multiindices(inst.nvars(), inst.delta);
  bool all_zero = true;
  for (long t = 0; t < A.rows(); ++t) {
    K acc(0);
    for (long c = 0; c < A.cols(); ++c) {
      K zJ(1);
      for (int j = 0; j < inst.nvars(); ++j)
        for (int e = 0; e < idx[c][j]; ++e) zJ *= z[j];
      acc += A.at(t, c) * zJ;
    }
    if (!FieldTraits<K>::is_zero(acc)) all_zero = false;
    verdict.contractions.push_back(acc);
  }
  verdict.ok = all_zero;
  return verdict;
}

/// Build a frame tangent to H_a, staying inside the field: pick a generic x,
/// fix E(a,x) = 0 by a linear correction of one parameter coefficient, then
/// solve the tangent vectors inside ker dE(x,·). The parameter point is
/// adjusted in place.
template <class K>
FlagFrame<K> sample_tangent_frame(const Instance& inst, ParameterPoint<K>& a, SplitMix64& rng,
                                  long height) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    FlagFrame<K> fr;
    fr.chart = static_cast<int>(rng.below(inst.nvars()));
    fr.x.assign(inst.nvars(), K(0));
    fr.x[fr.chart] = K(1);
    for (int i = 0; i < inst.nvars(); ++i)
      if (i != fr.chart) fr.x[i] = FieldTraits<K>::random_nonzero(rng, height);
    std::span<const K> x(fr.x);

    // Zero E at x by shifting one coefficient of a_{J₀} along ξ_chart^ε
    // (both factors evaluate to nonzero on the dense torus).
    auto idx = enumerate_multiindices(inst.nvars(), inst.delta);
    K e_val(0);
    for (std::size_t c = 0; c < idx.size(); ++c) {
      K xJ(1);
      for (int j = 0; j < inst.nvars(); ++j)
        for (int e = 0; e < (inst.r + 1) * idx[c][j]; ++e) xJ *= fr.x[j];
      e_val += a.a[c].eval(x) * xJ;
    }
    MultiIndex K0(inst.nvars(), 0);
    K0[fr.chart] = static_cast<int>(inst.epsilon);
    K x_rJ0(1);
    for (int j = 0; j < inst.nvars(); ++j)
      for (int e = 0; e < (inst.r + 1) * idx[0][j]; ++e) x_rJ0 *= fr.x[j];
    // ξ^{K0}(x) = 1 on the chart, so the correction is -e_val / x^{(r+1)J₀}.
    a.a[0].add_term(K0, -(e_val / x_rJ0));

    HomogPoly<K> E = build_E(inst, a);
    // Gradient of the chart writing of E at x.
    std::vector<K> grad(inst.nvars(), K(0));
    bool grad_zero = true;
    for (int j = 0; j < inst.nvars(); ++j) {
      if (j == fr.chart) continue;
      std::vector<K> ej(inst.nvars(), K(0));
      ej[j] = K(1);
      grad[j] = dir_derivative(E, fr.chart, x, std::span<const K>(ej));
      if (!FieldTraits<K>::is_zero(grad[j])) grad_zero = false;
    }
    if (grad_zero) continue;  // x landed singular on H_a; redraw

    int pivot = -1;
    for (int j = 0; j < inst.nvars(); ++j)
      if (j != fr.chart && !FieldTraits<K>::is_zero(grad[j])) {
        pivot = j;
        break;
      }
    // Kernel basis: e_j - (grad_j / grad_pivot) e_pivot for j != pivot, chart.
    std::vector<std::vector<K>> basis;
    for (int j = 0; j < inst.nvars(); ++j) {
      if (j == fr.chart || j == pivot) continue;
      std::vector<K> b(inst.nvars(), K(0));
      b[j] = K(1);
      b[pivot] = -(grad[j] / grad[pivot]);
      basis.push_back(std::move(b));
    }
    if (static_cast<long>(basis.size()) < inst.k) continue;

    bool ok = false;
    for (int tries = 0; tries < 16 && !ok; ++tries) {
      fr.v.assign(inst.k, std::vector<K>(inst.nvars(), K(0)));
      for (int i = 0; i < inst.k; ++i)
        for (const auto& b : basis) {
          K c = FieldTraits<K>::random(rng, height);
          for (int j = 0; j < inst.nvars(); ++j) fr.v[i][j] += c * b[j];
        }
      ok = vectors_independent(fr.v);
    }
    if (ok) return fr;
  }
  throw std::runtime_error("sample_tangent_frame: exhausted retries");
}

}  // namespace schur_ample
