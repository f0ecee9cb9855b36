// Independent oracles used only by the test suites. These deliberately avoid
// the library's closed-form routes: dimensions are counted by enumerating
// semistandard tableaux, derivatives are read off an exact difference
// quotient, decompositions are found by exhaustive search.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "schur_ample/partition.hpp"
#include "schur_ample/poly.hpp"

namespace oracle {

using schur_ample::MultiIndex;
using schur_ample::Partition;

/// Count semistandard Young tableaux of the given shape with entries <= n:
/// rows weakly increasing, columns strictly increasing.
inline long ssyt_count(const Partition& lambda, long n) {
  if (lambda.num_parts() > n) return 0;
  std::vector<std::pair<long, long>> cells;
  for (long i = 0; i < lambda.num_parts(); ++i)
    for (long j = 0; j < lambda.part(i + 1); ++j) cells.emplace_back(i, j);
  std::map<std::pair<long, long>, long> fill;
  std::function<long(std::size_t)> rec = [&](std::size_t idx) -> long {
    if (idx == cells.size()) return 1;
    auto [i, j] = cells[idx];
    long lo = 1;
    if (j > 0) lo = std::max(lo, fill[{i, j - 1}]);
    if (i > 0) lo = std::max(lo, fill[{i - 1, j}] + 1);
    long total = 0;
    for (long v = lo; v <= n; ++v) {
      fill[{i, j}] = v;
      total += rec(idx + 1);
    }
    fill.erase({i, j});
    return total;
  };
  return rec(0);
}

/// Dense univariate polynomial over K, for exact symbolic substitution.
template <class K>
struct UniPoly {
  std::vector<K> c;  // c[i] is the t^i coefficient

  static UniPoly constant(const K& v) { return {{v}}; }
  static UniPoly linear(const K& a0, const K& a1) { return {{a0, a1}}; }

  UniPoly operator+(const UniPoly& o) const {
    UniPoly r;
    r.c.resize(std::max(c.size(), o.c.size()), K(0));
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    return r;
  }
  UniPoly operator*(const UniPoly& o) const {
    if (c.empty() || o.c.empty()) return {};
    UniPoly r;
    r.c.assign(c.size() + o.c.size() - 1, K(0));
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    return r;
  }
  K coeff(std::size_t i) const { return i < c.size() ? c[i] : K(0); }
};

/// Difference-quotient oracle for the chart directional derivative: form
/// g(t) = P_chart(x + t v) as an exact polynomial in t by substitution; then
/// (g(t) - g(0)) / t evaluated at t = 0 is the t-linear coefficient.
template <class K>
K difference_quotient(const schur_ample::HomogPoly<K>& P, int chart, std::span<const K> x,
                      std::span<const K> v) {
  const int n = P.nvars();
  // Normalize the point on the chart; the frozen coordinate stays 1.
  std::vector<K> y(x.begin(), x.end());
  K inv = K(1) / x[chart];
  for (auto& s : y) s *= inv;
  std::vector<UniPoly<K>> subst;
  subst.reserve(n);
  for (int j = 0; j < n; ++j) {
    if (j == chart)
      subst.push_back(UniPoly<K>::constant(K(1)));
    else
      subst.push_back(UniPoly<K>::linear(y[j], v[j]));
  }
  UniPoly<K> g;
  for (const auto& [J, coef] : P.terms()) {
    UniPoly<K> m = UniPoly<K>::constant(coef);
    for (int j = 0; j < n; ++j)
      for (int e = 0; e < J[j]; ++e) m = m * subst[j];
    g = g + m;
  }
  return g.coeff(1);
}

/// Exhaustive search for d0 = p(d+1) + q(d+2) with p, q >= 0.
inline std::optional<std::pair<long, long>> brute_decompose(long d, long d0) {
  for (long q = 0; q * (d + 2) <= d0; ++q) {
    long rest = d0 - q * (d + 2);
    if (rest % (d + 1) == 0) return std::make_pair(rest / (d + 1), q);
  }
  return std::nullopt;
}

}  // namespace oracle
