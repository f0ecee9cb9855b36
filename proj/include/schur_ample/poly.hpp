#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "schur_ample/multiindex.hpp"
#include "schur_ample/rng.hpp"
#include "schur_ample/scalar.hpp"

namespace schur_ample {

/// Orders exponent tuples descending-lexicographically, so map iteration
/// matches the canonical graded-lex term order.
struct LexGreater {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const { return a > b; }
};

/// Sparse homogeneous polynomial in `nvars` variables over an exact field.
/// All stored monomials have the declared degree; zero coefficients are
/// never stored.
template <class K>
class HomogPoly {
 public:
  using TermMap = std::map<MultiIndex, K, LexGreater>;

  HomogPoly(int nvars, long degree) : nvars_(nvars), degree_(degree) {
    if (nvars < 1 || degree < 0) throw std::invalid_argument("HomogPoly: bad shape");
  }

  int nvars() const { return nvars_; }
  long degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const MultiIndex& J, const K& c) {
    if (static_cast<int>(J.size()) != nvars_ || mi_length(J) != degree_)
      throw std::invalid_argument("HomogPoly: term shape mismatch");
    if (FieldTraits<K>::is_zero(c)) return;
    auto it = terms_.find(J);
    if (it == terms_.end()) {
      terms_.emplace(J, c);
    } else {
      it->second += c;
      if (FieldTraits<K>::is_zero(it->second)) terms_.erase(it);
    }
  }

  K coeff(const MultiIndex& J) const {
    auto it = terms_.find(J);
    return it == terms_.end() ? K(0) : it->second;
  }

  static HomogPoly monomial(int nvars, const MultiIndex& J, const K& c = K(1)) {
    HomogPoly p(nvars, mi_length(J));
    p.add_term(J, c);
    return p;
  }

  K eval(std::span<const K> x) const {
    if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("eval: point size");
    K acc(0);
    for (const auto& [J, c] : terms_) {
      K m = c;
      for (int i = 0; i < nvars_; ++i)
        for (int e = 0; e < J[i]; ++e) m *= x[i];
      acc += m;
    }
    return acc;
  }

  /// Formal partial derivative; homogeneous of degree-1 (zero poly if degree 0).
  HomogPoly partial(int var) const {
    HomogPoly out(nvars_, degree_ > 0 ? degree_ - 1 : 0);
    if (degree_ == 0) return out;
    for (const auto& [J, c] : terms_) {
      if (J[var] == 0) continue;
      MultiIndex Jd = J;
      --Jd[var];
      out.add_term(Jd, c * K(J[var]));
    }
    return out;
  }

  HomogPoly operator+(const HomogPoly& o) const {
    require_same_shape(o);
    HomogPoly out = *this;
    for (const auto& [J, c] : o.terms_) out.add_term(J, c);
    return out;
  }

  HomogPoly operator-(const HomogPoly& o) const {
    require_same_shape(o);
    HomogPoly out = *this;
    for (const auto& [J, c] : o.terms_) out.add_term(J, -c);
    return out;
  }

  HomogPoly operator*(const HomogPoly& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("HomogPoly: nvars mismatch");
    HomogPoly out(nvars_, degree_ + o.degree_);
    for (const auto& [J, c] : terms_)
      for (const auto& [J2, c2] : o.terms_) {
        MultiIndex Js(nvars_);
        for (int i = 0; i < nvars_; ++i) Js[i] = J[i] + J2[i];
        out.add_term(Js, c * c2);
      }
    return out;
  }

  HomogPoly scaled(const K& c) const {
    HomogPoly out(nvars_, degree_);
    for (const auto& [J, cc] : terms_) out.add_term(J, cc * c);
    return out;
  }

  bool operator==(const HomogPoly& o) const {
    return nvars_ == o.nvars_ && degree_ == o.degree_ && terms_ == o.terms_;
  }

 private:
  void require_same_shape(const HomogPoly& o) const {
    if (o.nvars_ != nvars_ || o.degree_ != degree_)
      throw std::invalid_argument("HomogPoly: shape mismatch");
  }

  int nvars_;
  long degree_;
  TermMap terms_;
};

/// Dense random homogeneous polynomial (every monomial drawn; zero
/// coefficients simply drop out).
template <class K>
HomogPoly<K> random_homog_poly(int nvars, long degree, SplitMix64& rng, long height) {
  HomogPoly<K> p(nvars, degree);
  for (const MultiIndex& J : enumerate_multiindices(nvars, degree))
    p.add_term(J, FieldTraits<K>::random(rng, height));
  return p;
}

/// Writing of a degree-d section on the affine chart {ξ_chart != 0}:
/// P(x) / x_chart^d. With x normalized to x_chart = 1 this is plain
/// evaluation.
template <class K>
K chart_eval(const HomogPoly<K>& P, int chart, std::span<const K> x) {
  if (FieldTraits<K>::is_zero(x[chart]))
    throw std::invalid_argument("chart_eval: point on the hyperplane at infinity");
  K val = P.eval(x);
  K denom = FieldTraits<K>::pow(x[chart], P.degree());
  return val / denom;
}

/// Directional derivative at x of the chart writing of P, contracted with a
/// tangent vector given in chart coordinates. Tangent vectors are stored as
/// (N+1)-tuples whose chart component is ignored (the chart coordinate is
/// frozen at 1).
template <class K>
K dir_derivative(const HomogPoly<K>& P, int chart, std::span<const K> x, std::span<const K> v) {
  if (FieldTraits<K>::is_zero(x[chart]))
    throw std::invalid_argument("dir_derivative: point on the hyperplane at infinity");
  const int n = P.nvars();
  // Normalize so the chart coordinate is 1; the dehomogenization then
  // satisfies ∂/∂u_j = ∂P/∂ξ_j at the lifted point.
  std::vector<K> y(x.begin(), x.end());
  if (x[chart] != K(1)) {
    K inv = K(1) / x[chart];
    for (auto& c : y) c *= inv;
  }
  K acc(0);
  for (int j = 0; j < n; ++j) {
    if (j == chart || FieldTraits<K>::is_zero(v[j])) continue;
    acc += v[j] * P.partial(j).eval(std::span<const K>(y));
  }
  return acc;
}

/// Transition factor g with P_from(x) = g * P_to(x) for the chart writings of
/// every degree-d section: g = (x_to / x_from)^d.
template <class K>
K transition_factor(long degree, int chart_from, int chart_to, std::span<const K> x) {
  if (FieldTraits<K>::is_zero(x[chart_from]) || FieldTraits<K>::is_zero(x[chart_to]))
    throw std::invalid_argument("transition_factor: chart coordinate vanishes");
  if (chart_from == chart_to || degree == 0) return K(1);
  return FieldTraits<K>::pow(x[chart_to] / x[chart_from], degree);
}

/// Transport of a tangent vector between affine charts by the exact Jacobian
/// of the transition map. Input and output use the (N+1)-tuple convention
/// with the owning chart's component zero.
template <class K>
std::vector<K> transport_tangent(int chart_from, int chart_to, std::span<const K> x,
                                 std::span<const K> v) {
  if (FieldTraits<K>::is_zero(x[chart_from]) || FieldTraits<K>::is_zero(x[chart_to]))
    throw std::invalid_argument("transport_tangent: chart coordinate vanishes");
  const int n = static_cast<int>(x.size());
  if (chart_from == chart_to) return std::vector<K>(v.begin(), v.end());
  // u_j = x_j / x_from are the source chart coordinates; the target chart
  // coordinates are w_j = u_j / u_to (j != from) and w_from = 1 / u_to.
  K u_to = x[chart_to] / x[chart_from];
  K inv = K(1) / u_to;
  K inv2 = inv * inv;
  std::vector<K> out(n, K(0));
  for (int j = 0; j < n; ++j) {
    if (j == chart_to || j == chart_from) continue;
    K u_j = x[j] / x[chart_from];
    out[j] = v[j] * inv - u_j * v[chart_to] * inv2;
  }
  out[chart_from] = -v[chart_to] * inv2;
  out[chart_to] = K(0);
  return out;
}

}  // namespace schur_ample
