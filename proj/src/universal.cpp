#include "schur_ample/universal.hpp"

namespace schur_ample {

std::vector<std::vector<int>> all_strata(int N) {
  std::vector<std::vector<int>> out;
  // Subsets of {0..N} of size 0..N-1, ordered by size then lexicographically.
  for (int size = 0; size < N; ++size) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    if (size == 0) {
      out.push_back({});
      continue;
    }
    for (;;) {
      out.push_back(idx);
      int pos = size - 1;
      while (pos >= 0 && idx[pos] == N - (size - 1 - pos)) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return out;
}

long rank_formula(long k, long k0, long k1, long delta) {
  if (k0 < 1 || k1 < k0 || delta < 1) throw std::invalid_argument("rank_formula: bad arguments");
  mpz_class v = (k + 1) * binomial(k0 + delta, k0) + (k1 - k0) * binomial(k0 + delta - 1, k0);
  if (!v.fits_slong_p()) throw std::overflow_error("rank_formula: overflow");
  return v.get_si();
}

long sigma_dim(long k, long k0, long k1) { return k0 + k * (k1 - k); }

json OpenSetAudit::to_json() const {
  json j;
  j["k"] = k;
  j["delta"] = delta;
  j["k0_max"] = k0_max;
  j["k1_max"] = k1_max;
  j["in_regime"] = in_regime;
  j["nonnegative_cases"] = json::array();
  for (const auto& c : nonnegative_cases)
    j["nonnegative_cases"].push_back({{"k0", c[0]}, {"k1", c[1]}, {"value", c[2]}});
  j["zalpha_violations"] = json::array();
  for (const auto& c : zalpha_violations)
    j["zalpha_violations"].push_back({{"k0", c[0]}, {"value", c[1]}});
  j["helper_violations"] = json::array();
  for (const auto& c : helper_violations)
    j["helper_violations"].push_back({{"n", c[0]}, {"N", c[1]}});
  j["ok"] = ok();
  return j;
}

OpenSetAudit audit_open_set_inequalities(long k, long delta, long k0_max, long k1_max) {
  if (k < 1 || delta < 1 || k0_max < 1 || k1_max < k0_max)
    throw std::invalid_argument("audit_open_set_inequalities: bad arguments");
  OpenSetAudit audit;
  audit.k = k;
  audit.delta = delta;
  audit.k0_max = k0_max;
  audit.k1_max = k1_max;
  audit.in_regime = delta >= k + 1;

  // Final display of the open-set proof:
  //   (k+1)k0 - C(k0+δ, k0) + k - k² + (k1-k0)(k - C(k0+δ-1, k0)).
  for (long k0 = 1; k0 <= k0_max; ++k0) {
    for (long k1 = k0; k1 <= k1_max; ++k1) {
      mpz_class value = (k + 1) * k0 - binomial(k0 + delta, k0) + k - k * k +
                        (k1 - k0) * (k - binomial(k0 + delta - 1, k0));
      if (value >= 0)
        audit.nonnegative_cases.push_back({k0, k1, static_cast<long>(value.get_si())});
    }
  }

  // Z^α case: k0 - C(k0+δ, k0) < 0 once δ >= 2.
  if (delta >= 2) {
    for (long k0 = 1; k0 <= k0_max; ++k0) {
      mpz_class value = k0 - binomial(k0 + delta, k0);
      if (value >= 0) audit.zalpha_violations.push_back({k0, static_cast<long>(value.get_si())});
    }
  }

  // Helper bound: C(n+N, n) >= nN, strict for n, N >= 2.
  for (long n = 1; n <= k0_max; ++n) {
    for (long N = 1; N <= k1_max; ++N) {
      mpz_class c = binomial(n + N, n);
      mpz_class prod = n * N;
      bool bad = (c < prod) || (n >= 2 && N >= 2 && c == prod);
      if (bad) audit.helper_violations.push_back({n, N});
    }
  }
  return audit;
}

}  // namespace schur_ample
