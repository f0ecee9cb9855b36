#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "schur_ample/matrix.hpp"
#include "schur_ample/multiindex.hpp"
#include "schur_ample/parallel.hpp"
#include "schur_ample/poly.hpp"
#include "schur_ample/report.hpp"
#include "schur_ample/rng.hpp"

namespace schur_ample {

/// Shape of one universal-equation family: E(a,·) = Σ_{|J|=δ} a_J ξ^{(r+1)J}
/// on P^N, with a_J of degree ε and k the number of tangent rows.
struct Instance {
  int N;
  int k;
  long delta;
  long epsilon;
  long r;

  Instance(int N_, int k_, long delta_, long epsilon_, long r_)
      : N(N_), k(k_), delta(delta_), epsilon(epsilon_), r(r_) {
    if (N < 1) throw std::invalid_argument("Instance: need N >= 1");
    if (k < 1 || k > N - 1) throw std::invalid_argument("Instance: need 1 <= k <= N-1");
    if (delta < 1) throw std::invalid_argument("Instance: need delta >= 1");
    if (epsilon < 1) throw std::invalid_argument("Instance: need epsilon >= 1");
    if (r < 0) throw std::invalid_argument("Instance: need r >= 0");
  }

  long equation_degree() const { return epsilon + (r + 1) * delta; }
  long num_columns() const { return n_delta_long(N, delta); }
  int nvars() const { return N + 1; }
  // r = 0 degenerates the coordinate-power substitution z = x^r; it is
  // accepted, and callers surface a warning.
  bool r_zero() const { return r == 0; }

  json to_json() const {
    return json{{"N", N}, {"k", k}, {"delta", delta}, {"epsilon", epsilon}, {"r", r}};
  }
};

/// A point of the parameter space S = H⁰(O(ε))^{N_δ}: one degree-ε
/// polynomial per multi-index, in canonical column order.
template <class K>
struct ParameterPoint {
  std::vector<HomogPoly<K>> a;

  json to_json() const {
    json arr = json::array();
    for (const auto& p : a) arr.push_back(poly_to_json(p));
    return arr;
  }
};

template <class K>
ParameterPoint<K> zero_params(const Instance& inst) {
  ParameterPoint<K> P;
  P.a.assign(inst.num_columns(), HomogPoly<K>(inst.nvars(), inst.epsilon));
  return P;
}

template <class K>
ParameterPoint<K> random_params(const Instance& inst, SplitMix64& rng, long height) {
  ParameterPoint<K> P;
  P.a.reserve(inst.num_columns());
  for (long i = 0; i < inst.num_columns(); ++i)
    P.a.push_back(random_homog_poly<K>(inst.nvars(), inst.epsilon, rng, height));
  return P;
}

/// Stratum label (I, I'): x lies on M_I (coordinates vanish exactly on I),
/// and I' marks which coordinate differentials annihilate the whole frame.
struct StratumLabel {
  std::vector<int> I;
  std::optional<std::vector<int>> Iprime;

  void validate(int N) const {
    auto check = [N](const std::vector<int>& S, const char* what) {
      for (std::size_t i = 0; i < S.size(); ++i) {
        if (S[i] < 0 || S[i] > N) throw std::invalid_argument(std::string(what) + ": index range");
        if (i > 0 && S[i] <= S[i - 1])
          throw std::invalid_argument(std::string(what) + ": must be sorted strictly");
      }
    };
    check(I, "I");
    if (static_cast<int>(I.size()) >= N)
      throw std::invalid_argument("StratumLabel: need |I| < N");
    if (Iprime) {
      check(*Iprime, "Iprime");
      for (int i : *Iprime)
        if (!std::binary_search(I.begin(), I.end(), i))
          throw std::invalid_argument("StratumLabel: Iprime must be a subset of I");
    }
  }

  long k0(int N) const { return N - static_cast<long>(I.size()); }
  long k1(int N) const {
    if (!Iprime) throw std::logic_error("StratumLabel: k1 needs Iprime");
    return N - static_cast<long>(Iprime->size());
  }
};

/// Every admissible I (proper subsets of {0..N} with |I| < N), by size then
/// lexicographically.
std::vector<std::vector<int>> all_strata(int N);

/// A frame (x; v₁,…,v_k): chart-normalized point (x[chart] = 1) and tangent
/// vectors in chart coordinates (v[i][chart] = 0), linearly independent.
template <class K>
struct FlagFrame {
  int chart = 0;
  std::vector<K> x;
  std::vector<std::vector<K>> v;

  json to_json() const {
    json jv = json::array();
    for (const auto& vi : v) jv.push_back(vector_to_json(std::span<const K>(vi)));
    return json{{"chart", chart}, {"x", vector_to_json(std::span<const K>(x))}, {"v", jv}};
  }
};

/// α_J(a, x) = a_J(x) ξ^J(x) in the chart writing (x is chart-normalized).
template <class K>
K alpha_coeff(const Instance& inst, const ParameterPoint<K>& a, const MultiIndex& J,
              const FlagFrame<K>& fr, long col) {
  std::span<const K> x(fr.x);
  K xiJ = HomogPoly<K>::monomial(inst.nvars(), J).eval(x);
  return a.a[col].eval(x) * xiJ;
}

/// θ_J(a, x, v_i) = ξ^J(x) d a_J(x, v_i) + (r+1) a_J(x) d ξ^J(x, v_i),
/// all chart writings on fr.chart.
template <class K>
K theta_coeff(const Instance& inst, const ParameterPoint<K>& a, const MultiIndex& J,
              const FlagFrame<K>& fr, int i, long col) {
  std::span<const K> x(fr.x);
  std::span<const K> vi(fr.v[i]);
  HomogPoly<K> xiJ = HomogPoly<K>::monomial(inst.nvars(), J);
  K term1 = xiJ.eval(x) * dir_derivative(a.a[col], fr.chart, x, vi);
  K term2 = K(inst.r + 1) * a.a[col].eval(x) * dir_derivative(xiJ, fr.chart, x, vi);
  return term1 + term2;
}

/// E(a,·) = Σ_{|J|=δ} a_J ξ^{(r+1)J}, homogeneous of degree ε + (r+1)δ.
/// The shape-level builder does not need a tangent-row count, so it also
/// serves N = 1 (where no frame can exist).
template <class K>
HomogPoly<K> build_E_shape(int N, long delta, long epsilon, long r,
                           const std::vector<HomogPoly<K>>& a) {
  auto idx = enumerate_multiindices(N + 1, delta);
  if (a.size() != idx.size())
    throw std::invalid_argument("build_E: parameter block count mismatch");
  HomogPoly<K> E(N + 1, epsilon + (r + 1) * delta);
  for (std::size_t c = 0; c < idx.size(); ++c) {
    for (const auto& [J, coef] : a[c].terms()) {
      MultiIndex sum(N + 1);
      for (int j = 0; j <= N; ++j) {
        long e = J[j] + (r + 1) * static_cast<long>(idx[c][j]);
        sum[j] = static_cast<int>(e);
      }
      E.add_term(sum, coef);
    }
  }
  return E;
}

template <class K>
HomogPoly<K> build_E(const Instance& inst, const ParameterPoint<K>& a) {
  return build_E_shape<K>(inst.N, inst.delta, inst.epsilon, inst.r, a.a);
}

/// The (k+1) x N_δ matrix A(a; (x; v₁,…,v_k)): row 0 the α_J, row i the
/// θ_J(·, v_i), columns in canonical multi-index order.
template <class K>
DenseMatrix<K> build_A(const Instance& inst, const ParameterPoint<K>& a,
                       const FlagFrame<K>& fr) {
  if (static_cast<long>(a.a.size()) != inst.num_columns())
    throw std::invalid_argument("build_A: parameter block count mismatch");
  if (static_cast<int>(fr.v.size()) != inst.k)
    throw std::invalid_argument("build_A: frame has wrong number of tangent vectors");
  auto idx = enumerate_multiindices(inst.nvars(), inst.delta);
  DenseMatrix<K> A(inst.k + 1, inst.num_columns());
  for (long c = 0; c < A.cols(); ++c) {
    A.at(0, c) = alpha_coeff(inst, a, idx[c], fr, c);
    for (int i = 0; i < inst.k; ++i)
      A.at(i + 1, c) = theta_coeff(inst, a, idx[c], fr, i, c);
  }
  return A;
}

/// Re-express a frame on another chart: renormalize x there and transport the
/// tangent vectors by the exact Jacobian. Requires x[new_chart] != 0.
template <class K>
FlagFrame<K> transport_frame(const FlagFrame<K>& fr, int new_chart) {
  if (FieldTraits<K>::is_zero(fr.x[new_chart]))
    throw std::invalid_argument("transport_frame: new chart coordinate vanishes");
  FlagFrame<K> out;
  out.chart = new_chart;
  K inv = K(1) / fr.x[new_chart];
  out.x.reserve(fr.x.size());
  for (const K& c : fr.x) out.x.push_back(c * inv);
  for (const auto& vi : fr.v)
    out.v.push_back(transport_tangent<K>(fr.chart, new_chart, std::span<const K>(fr.x),
                                         std::span<const K>(vi)));
  return out;
}

/// Random frame with x on M_I (coordinates vanish exactly on I) and k
/// independent tangent vectors. The chart is the smallest index outside I.
template <class K>
FlagFrame<K> sample_frame_on_stratum(const Instance& inst, const std::vector<int>& I,
                                     SplitMix64& rng, long height) {
  if (static_cast<int>(I.size()) >= inst.N)
    throw std::invalid_argument("sample_frame_on_stratum: need |I| < N");
  auto in_I = [&I](int i) { return std::binary_search(I.begin(), I.end(), i); };
  FlagFrame<K> fr;
  fr.chart = 0;
  while (in_I(fr.chart)) ++fr.chart;
  fr.x.assign(inst.nvars(), K(0));
  fr.x[fr.chart] = K(1);
  for (int i = 0; i < inst.nvars(); ++i) {
    if (i == fr.chart || in_I(i)) continue;
    fr.x[i] = FieldTraits<K>::random_nonzero(rng, height);
  }
  for (int attempt = 0; attempt < 64; ++attempt) {
    fr.v.assign(inst.k, std::vector<K>(inst.nvars(), K(0)));
    for (int i = 0; i < inst.k; ++i)
      for (int j = 0; j < inst.nvars(); ++j)
        if (j != fr.chart) fr.v[i][j] = FieldTraits<K>::random(rng, height);
    if (vectors_independent(fr.v)) return fr;
  }
  throw std::runtime_error("sample_frame_on_stratum: degenerate draws exhausted retries");
}

/// Random frame in Σ(I,I'): x on M_I, span(v) inside ker dξ_i for i in I',
/// and for every i in I \ I' some v_j with dξ_i(x, v_j) != 0. Membership is
/// re-verified exactly before returning.
template <class K>
FlagFrame<K> sample_sigma(const Instance& inst, const StratumLabel& label, SplitMix64& rng,
                          long height) {
  label.validate(inst.N);
  if (!label.Iprime) throw std::invalid_argument("sample_sigma: label needs Iprime");
  const long k1 = label.k1(inst.N);
  if (k1 < inst.k) throw std::invalid_argument("sample_sigma: need k1 >= k");
  auto in_Ip = [&label](int i) {
    return std::binary_search(label.Iprime->begin(), label.Iprime->end(), i);
  };
  for (int attempt = 0; attempt < 64; ++attempt) {
    FlagFrame<K> fr = sample_frame_on_stratum<K>(inst, label.I, rng, height);
    // On the chart, dξ_i(x, v) is just the i-th component of v; zero the I'
    // components and retry until the frame is independent and hits every
    // index of I \ I'.
    for (auto& vi : fr.v)
      for (int i : *label.Iprime) vi[i] = K(0);
    if (!vectors_independent(fr.v)) continue;
    bool bicond = true;
    for (int i : label.I) {
      if (in_Ip(i)) continue;
      bool hit = false;
      for (const auto& vi : fr.v)
        if (!FieldTraits<K>::is_zero(vi[i])) {
          hit = true;
          break;
        }
      if (!hit) {
        bicond = false;
        break;
      }
    }
    if (bicond) return fr;
  }
  throw std::runtime_error("sample_sigma: degenerate draws exhausted retries");
}

/// Exact Σ(I,I') membership re-check for a frame.
template <class K>
bool sigma_membership_ok(const Instance& inst, const StratumLabel& label,
                         const FlagFrame<K>& fr) {
  label.validate(inst.N);
  auto in_I = [&label](int i) { return std::binary_search(label.I.begin(), label.I.end(), i); };
  for (int i = 0; i < inst.nvars(); ++i) {
    bool zero = FieldTraits<K>::is_zero(fr.x[i]);
    if (zero != in_I(i)) return false;
  }
  if (!vectors_independent(fr.v)) return false;
  if (!label.Iprime) return true;
  for (int i : label.I) {
    bool all_zero = true;
    for (const auto& vi : fr.v)
      if (!FieldTraits<K>::is_zero(vi[i])) all_zero = false;
    bool in_prime = std::binary_search(label.Iprime->begin(), label.Iprime->end(), i);
    if (all_zero != in_prime) return false;
  }
  return true;
}

/// rank(φ_η) = (k+1) C(k₀+δ, k₀) + (k₁−k₀) C(k₀+δ−1, k₀).
long rank_formula(long k, long k0, long k1, long delta);

/// dim Σ(I,I') = k₀ + k(k₁−k).
long sigma_dim(long k, long k0, long k1);

/*
 * Explicit matrix of the linear map φ_η : S → (k^{k+1})^{N_δ}, a ↦ A(a; η),
 * over the monomial basis of S. Layout: the block for column-index J occupies
 * rows J*(k+1) .. J*(k+1)+k and columns J*M_ε .. (J+1)*M_ε - 1, where
 * M_ε = C(N+ε, N); everything off those blocks is structurally zero.
 */
template <class K>
DenseMatrix<K> phi_eta_matrix(const Instance& inst, const FlagFrame<K>& fr,
                              long budget_entries = 2000000) {
  const long nd = inst.num_columns();
  const long me = n_delta_long(inst.N, inst.epsilon);
  const long rows = (inst.k + 1) * nd;
  const long cols = nd * me;
  if (rows * cols > budget_entries)
    throw std::invalid_argument("phi_eta_matrix: size budget exceeded (" +
                                std::to_string(rows * cols) + " entries)");
  auto idx_delta = enumerate_multiindices(inst.nvars(), inst.delta);
  auto idx_eps = enumerate_multiindices(inst.nvars(), inst.epsilon);
  std::span<const K> x(fr.x);

  DenseMatrix<K> M(rows, cols);
  for (long jd = 0; jd < nd; ++jd) {
    HomogPoly<K> xiJ = HomogPoly<K>::monomial(inst.nvars(), idx_delta[jd]);
    K xiJ_val = xiJ.eval(x);
    std::vector<K> dxiJ(inst.k);
    for (int i = 0; i < inst.k; ++i)
      dxiJ[i] = dir_derivative(xiJ, fr.chart, x, std::span<const K>(fr.v[i]));
    for (long ke = 0; ke < me; ++ke) {
      HomogPoly<K> xiK = HomogPoly<K>::monomial(inst.nvars(), idx_eps[ke]);
      K xiK_val = xiK.eval(x);
      const long col = jd * me + ke;
      M.at(jd * (inst.k + 1), col) = xiK_val * xiJ_val;
      for (int i = 0; i < inst.k; ++i) {
        K dK = dir_derivative(xiK, fr.chart, x, std::span<const K>(fr.v[i]));
        M.at(jd * (inst.k + 1) + i + 1, col) = xiJ_val * dK + K(inst.r + 1) * xiK_val * dxiJ[i];
      }
    }
  }
  return M;
}

/// φ_η applied to a parameter point, flattened in the same row order as
/// phi_eta_matrix (blocks of k+1 per column index).
template <class K>
std::vector<K> phi_eta_apply(const Instance& inst, const ParameterPoint<K>& a,
                             const FlagFrame<K>& fr) {
  DenseMatrix<K> A = build_A(inst, a, fr);
  std::vector<K> out;
  out.reserve(A.rows() * A.cols());
  for (long c = 0; c < A.cols(); ++c)
    for (long t = 0; t < A.rows(); ++t) out.push_back(A.at(t, c));
  return out;
}

/// Rank through the sparse elimination kernel (the dense matrix is mostly
/// structural zeros).
template <class K>
long rank_via_sparse(const DenseMatrix<K>& M) {
  std::vector<SparseRow<K>> rows(M.rows());
  for (long i = 0; i < M.rows(); ++i)
    for (long j = 0; j < M.cols(); ++j)
      if (!FieldTraits<K>::is_zero(M.at(i, j))) rows[i].emplace_back(j, M.at(i, j));
  return sparse_rank(std::move(rows));
}

/// Inequality audit for the open-set argument. In the δ >= k+1 regime the
/// display must be strictly negative everywhere; below it the audit is
/// report-only.
struct OpenSetAudit {
  long k = 0, delta = 0, k0_max = 0, k1_max = 0;
  bool in_regime = false;  // delta >= k+1
  std::vector<std::array<long, 3>> nonnegative_cases;   // (k0, k1, value)
  std::vector<std::array<long, 2>> zalpha_violations;   // (k0, value) with value >= 0
  std::vector<std::array<long, 2>> helper_violations;   // (n, N) failing the binomial bound
  bool ok() const {
    return (!in_regime || nonnegative_cases.empty()) && zalpha_violations.empty() &&
           helper_violations.empty();
  }
  json to_json() const;
};

OpenSetAudit audit_open_set_inequalities(long k, long delta, long k0_max, long k1_max);

/// Monte-Carlo evidence report for condition (*,I) / (*,I,I'): never a proof
/// of membership in S°, only "no counterexample in n samples".
struct StarReport {
  Instance inst;
  StratumLabel label;
  long samples = 0;
  long full_rank = 0;
  long sampling_failures = 0;
  std::vector<json> counterexamples;
  std::uint64_t seed = 0;
  std::string field;
  json params;

  bool ok() const { return counterexamples.empty() && sampling_failures == 0; }
  json to_json() const {
    json rep;
    rep["condition"] = "star";
    rep["instance"] = inst.to_json();
    rep["I"] = label.I;
    rep["Iprime"] = label.Iprime ? json(*label.Iprime) : json(nullptr);
    rep["samples"] = samples;
    rep["full_rank"] = full_rank;
    rep["sampling_failures"] = sampling_failures;
    rep["counterexamples"] = counterexamples;
    rep["seed"] = seed;
    rep["field"] = field;
    rep["params"] = params;
    return rep;
  }
};

/// Sample `samples` frames on the stratum and test A for maximal rank. Every
/// failing frame is dumped verbatim. Parallel over sample indices; worker i
/// owns the split stream i, so both lanes produce identical reports.
template <class K>
StarReport check_star(const Instance& inst, const ParameterPoint<K>& a,
                      const StratumLabel& label, long samples, std::uint64_t seed, long height,
                      ExecMode mode) {
  label.validate(inst.N);
  StarReport rep{inst, label, samples, 0, 0, {}, seed, FieldTraits<K>::name(), a.to_json()};
  SplitMix64 rng(seed);

  struct Outcome {
    int status = 0;  // 0 full rank, 1 counterexample, 2 sampling failure
    json dump;
  };
  auto results = map_indexed<Outcome>(
      static_cast<std::size_t>(samples), mode, [&](std::size_t i) -> Outcome {
        SplitMix64 local = rng.split(i);
        try {
          FlagFrame<K> fr = label.Iprime
                                ? sample_sigma<K>(inst, label, local, height)
                                : sample_frame_on_stratum<K>(inst, label.I, local, height);
          DenseMatrix<K> A = build_A(inst, a, fr);
          long rank = exact_rank(A);
          if (rank == inst.k + 1) return {0, {}};
          json dump;
          dump["sample"] = static_cast<long>(i);
          dump["frame"] = fr.to_json();
          dump["rank"] = rank;
          return {1, dump};
        } catch (const std::exception& e) {
          json dump;
          dump["sample"] = static_cast<long>(i);
          dump["error"] = e.what();
          return {2, dump};
        }
      });
  for (const auto& r : results) {
    if (r.status == 0) ++rep.full_rank;
    if (r.status == 1) rep.counterexamples.push_back(r.dump);
    if (r.status == 2) {
      ++rep.sampling_failures;
      rep.counterexamples.push_back(r.dump);
    }
  }
  return rep;
}

}  // namespace schur_ample
