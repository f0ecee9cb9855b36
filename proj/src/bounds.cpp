#include "schur_ample/bounds.hpp"

#include <stdexcept>

namespace schur_ample {

namespace {

mpz_class mpz_pow(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

json mpz_vec_to_json(const std::vector<mpz_class>& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(x.get_str());
  return arr;
}

}  // namespace

void BoundLedger::validate() const {
  if (c * (k + 1) < N) throw std::invalid_argument("ledger: need c(k+1) >= N");
  if (k > N - 1) throw std::invalid_argument("ledger: need k <= N-1");
  if (weight != ampleness_weight(lambda)) throw std::invalid_argument("ledger: weight mismatch");
  auto size_ok = [this](const std::vector<mpz_class>& v) {
    return static_cast<long>(v.size()) == c;
  };
  if (!size_ok(delta) || !size_ok(m) || !size_ok(epsilon) || !size_ok(d))
    throw std::invalid_argument("ledger: per-index vectors must have length c");
  mpz_class floor_delta = N + k * (N - k);
  mpz_class prod = 1;
  for (const auto& dl : delta) {
    if (dl < floor_delta) throw std::invalid_argument("ledger: delta_i below N+k(N-k)");
    prod *= mpz_pow(dl, static_cast<unsigned long>(k + 1));
  }
  for (long i = 0; i < c; ++i) {
    if (epsilon[i] < 1) throw std::invalid_argument("ledger: epsilon_i must be >= 1");
    // m_i >= prod / delta_i, compared without division.
    if (m[i] * delta[i] < prod) throw std::invalid_argument("ledger: m_i below Nakayama threshold");
  }
  mpz_class threshold = 0;
  for (long i = 0; i < c; ++i) threshold += m[i] * (epsilon[i] + delta[i]);
  threshold *= weight;
  if (r <= threshold) throw std::invalid_argument("ledger: r must exceed |lambda*+| sum m(e+d)");
  if (u != r - threshold || u <= 0) throw std::invalid_argument("ledger: u inconsistent");
  for (long i = 0; i < c; ++i)
    if (d[i] != delta[i] * (r + 1) + epsilon[i])
      throw std::invalid_argument("ledger: d_i != delta_i(r+1)+epsilon_i");
}

json BoundLedger::to_json() const {
  json j;
  j["N"] = N;
  j["c"] = c;
  j["lambda"] = lambda.parts();
  j["k"] = k;
  j["weight"] = weight;
  j["delta"] = mpz_vec_to_json(delta);
  j["m"] = mpz_vec_to_json(m);
  j["epsilon"] = mpz_vec_to_json(epsilon);
  j["r"] = r.get_str();
  j["u"] = u.get_str();
  j["d"] = mpz_vec_to_json(d);
  return j;
}

BoundLedger theorem_params(long N, long c, const Partition& lambda,
                           const ParamOverrides& overrides) {
  long k = lambda.num_parts();
  if (k > N - 1) throw std::invalid_argument("theorem_params: need s1 <= N-1");
  if (c * (k + 1) < N) throw std::invalid_argument("theorem_params: need c(k+1) >= N");

  BoundLedger L{N, c, lambda, k, ampleness_weight(lambda), {}, {}, {}, 0, 0, {}};
  mpz_class floor_delta = N + k * (N - k);
  L.delta = overrides.delta ? *overrides.delta : std::vector<mpz_class>(c, floor_delta);
  if (overrides.m) {
    L.m = *overrides.m;
  } else {
    L.m.reserve(c);
    for (long i = 0; i < c; ++i) L.m.push_back(nakayama_m(L.delta, k, i));
  }
  L.epsilon = overrides.epsilon ? *overrides.epsilon : std::vector<mpz_class>(c, 1);

  mpz_class threshold = 0;
  if (static_cast<long>(L.m.size()) != c || static_cast<long>(L.epsilon.size()) != c ||
      static_cast<long>(L.delta.size()) != c)
    throw std::invalid_argument("theorem_params: override length mismatch");
  for (long i = 0; i < c; ++i) threshold += L.m[i] * (L.epsilon[i] + L.delta[i]);
  threshold *= L.weight;
  L.r = overrides.r ? *overrides.r : mpz_class(threshold + 1);
  L.u = L.r - threshold;
  L.d.reserve(c);
  for (long i = 0; i < c; ++i) L.d.push_back(L.delta[i] * (L.r + 1) + L.epsilon[i]);
  L.validate();  // rejects infeasible overrides
  return L;
}

mpz_class corollary_bound(long N, long c, const Partition& lambda, bool intro_variant) {
  Partition prim = lambda.primitive();
  long k = prim.num_parts();
  if (c * (k + 1) < N) throw std::invalid_argument("corollary_bound: need c(k+1) >= N");
  mpz_class base = N + k * (N - k);
  unsigned long expo = static_cast<unsigned long>(c * (k + 1) + (intro_variant ? 0 : 1));
  mpz_class inner = 1 + 2 * c * ampleness_weight(prim) * mpz_pow(base, expo);
  return inner * inner;
}

std::pair<mpz_class, mpz_class> decompose_degree(const mpz_class& d, const mpz_class& d0) {
  if (d < 1) throw std::invalid_argument("decompose_degree: need d >= 1");
  if (d0 < d * (d + 1))
    throw std::invalid_argument(
        "decompose_degree: need d0 >= d(d+1) (existence is not guaranteed below)");
  mpz_class q = d0 % (d + 1);
  mpz_class p = (d0 - q) / (d + 1) - q;
  // p >= 0 holds for every d0 >= d(d+1); re-verify the decomposition anyway.
  if (p < 0 || q < 0 || p * (d + 1) + q * (d + 2) != d0)
    throw std::logic_error("decompose_degree: internal check failed");
  return {p, q};
}

json CoupPlan::to_json() const {
  json j;
  j["base_degree"] = base_degree.get_str();
  j["entries"] = json::array();
  for (const auto& e : entries) {
    json f = json::array();
    for (const auto& fac : e.factors)
      f.push_back({{"degree", fac.degree.get_str()}, {"count", fac.count.get_str()}});
    j["entries"].push_back({{"target", e.target.get_str()},
                            {"p", e.p.get_str()},
                            {"q", e.q.get_str()},
                            {"factors", f}});
  }
  return j;
}

CoupPlan coup_product_plan(long N, long c, const Partition& lambda,
                           const std::vector<mpz_class>& degrees) {
  long k = lambda.num_parts();
  if (c * (k + 1) < N) throw std::invalid_argument("coup_product_plan: need c(k+1) >= N");
  mpz_class delta = N + k * (N - k);
  mpz_class r = 2 * c * ampleness_weight(lambda) *
                    mpz_pow(delta, static_cast<unsigned long>(c * (k + 1))) -
                1;
  CoupPlan plan;
  plan.base_degree = delta * (r + 1);
  for (const auto& d_i : degrees) {
    auto [p, q] = decompose_degree(plan.base_degree, d_i);
    CoupPlanEntry e{d_i, p, q, {}};
    if (p > 0) e.factors.push_back({plan.base_degree + 1, p});
    if (q > 0) e.factors.push_back({plan.base_degree + 2, q});
    mpz_class sum = p * (plan.base_degree + 1) + q * (plan.base_degree + 2);
    if (sum != d_i) throw std::logic_error("coup_product_plan: factor degrees do not sum");
    plan.entries.push_back(std::move(e));
  }
  return plan;
}

json HyperbolicityBounds::to_json() const {
  json j;
  j["N"] = N;
  j["d_N"] = d_N.get_str();
  j["d_N_prime"] = d_N_prime.get_str();
  j["majorant"] = majorant.get_str();
  j["prime_below_dN"] = prime_below_dN;
  j["prime_below_majorant"] = prime_below_majorant;
  return j;
}

HyperbolicityBounds hyperbolicity_bounds(long N) {
  if (N < 3) throw std::invalid_argument("hyperbolicity_bounds: need N >= 3");
  HyperbolicityBounds out;
  out.N = N;
  out.d_N = mpz_pow(N + 1, static_cast<unsigned long>(2 * N + 6));
  long p = (N % 2 == 0) ? N / 2 - 1 : (N - 1) / 2;  // ceil(N/2 - 1)
  out.d_N_prime = 4 * (p + 1) * mpz_pow(N + p * (N - p), static_cast<unsigned long>(N + 1));
  // 2(N+1) ((N-2)/2)^{2N+2} with exact rational arithmetic, then floored.
  mpq_class half(N - 2, 2);
  half.canonicalize();
  mpq_class maj = 2 * (N + 1);
  for (long i = 0; i < 2 * N + 2; ++i) maj *= half;
  mpz_class floor_maj;
  mpz_fdiv_q(floor_maj.get_mpz_t(), maj.get_num().get_mpz_t(), maj.get_den().get_mpz_t());
  out.majorant = floor_maj;
  out.prime_below_dN = out.d_N_prime < out.d_N;
  out.prime_below_majorant = out.d_N_prime <= out.majorant;
  return out;
}

mpz_class nakayama_m(const std::vector<mpz_class>& deltas, long k, std::size_t i, bool* exact) {
  if (i >= deltas.size()) throw std::invalid_argument("nakayama_m: index out of range");
  mpz_class prod = 1;
  for (const auto& d : deltas) {
    if (d < 1) throw std::invalid_argument("nakayama_m: deltas must be >= 1");
    prod *= mpz_pow(d, static_cast<unsigned long>(k + 1));
  }
  mpz_class quot, rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), prod.get_mpz_t(), deltas[i].get_mpz_t());
  bool is_exact = (rem == 0);
  if (exact) *exact = is_exact;
  return is_exact ? quot : mpz_class(quot + 1);
}

}  // namespace schur_ample
