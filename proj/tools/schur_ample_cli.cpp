// Command-line front end: every check is seeded and deterministic, stdout is
// a single JSON object (or a table with --format table), exit codes are
// 0 = pass, 1 = counterexample found, 2 = usage or input error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "schur_ample/bounds.hpp"
#include "schur_ample/plucker.hpp"
#include "schur_ample/universal.hpp"

namespace sa = schur_ample;
using sa::json;

namespace {

struct Options {
  std::string format = "json";
  std::uint64_t seed = 12345;
  bool seed_given = false;
  std::string field = "Q";
  unsigned long prime = sa::Fp::kDefaultPrime;
  long height = 100;
  long budget = 2000000;
  bool serial = false;

  sa::ExecMode mode() const { return serial ? sa::ExecMode::serial : sa::ExecMode::openmp; }
};

void finish_seed(Options& opt) {
  if (opt.seed_given) return;
  if (const char* env = std::getenv("SCHUR_AMPLE_SEED")) opt.seed = std::stoull(env);
}

void emit(const json& j, const Options& opt, const std::string& table) {
  if (opt.format == "table")
    std::cout << table;
  else
    std::cout << j.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// bounds
// ---------------------------------------------------------------------------

int run_bounds(long N, long c, const std::string& lambda_csv, bool intro_variant,
               bool with_ledger, const Options& opt) {
  sa::Partition lambda = sa::Partition::parse(lambda_csv);
  sa::Partition prim = lambda.primitive();
  mpz_class bound = sa::corollary_bound(N, c, lambda);

  json j;
  j["check"] = "bounds";
  j["N"] = N;
  j["c"] = c;
  j["lambda"] = lambda.parts();
  j["lambda_primitive"] = prim.parts();
  j["gcd"] = lambda.parts_gcd();
  j["weight_primitive"] = sa::ampleness_weight(prim);
  j["bound"] = bound.get_str();
  j["bound_digits"] = sa::mpz_digit_count(bound);
  j["bound_sci"] = sa::mpz_sci_string(bound);
  if (intro_variant) {
    mpz_class iv = sa::corollary_bound(N, c, lambda, true);
    j["intro_variant"] = {{"bound", iv.get_str()},
                          {"bound_digits", sa::mpz_digit_count(iv)},
                          {"bound_sci", sa::mpz_sci_string(iv)}};
  }
  sa::CoupPlan plan = sa::coup_product_plan(N, c, prim, {bound});
  j["plan"] = plan.to_json();
  if (with_ledger) j["ledger"] = sa::theorem_params(N, c, prim).to_json();

  std::string table;
  table += "bounds  N=" + std::to_string(N) + " c=" + std::to_string(c) +
           " lambda=" + lambda.to_string() + "\n";
  table += "  degree bound  " + sa::mpz_sci_string(bound) + "  (" +
           std::to_string(sa::mpz_digit_count(bound)) + " digits, exact " + bound.get_str() +
           ")\n";
  if (intro_variant) {
    mpz_class iv = sa::corollary_bound(N, c, lambda, true);
    table += "  intro variant " + sa::mpz_sci_string(iv) + "  (" +
             std::to_string(sa::mpz_digit_count(iv)) + " digits)\n";
  }
  table += "  coup plan     d=" + sa::mpz_sci_string(plan.base_degree) + ", p=" +
           plan.entries[0].p.get_str() + ", q=" + plan.entries[0].q.get_str() + "\n";
  if (with_ledger) {
    sa::BoundLedger L = sa::theorem_params(N, c, prim);
    table += "  ledger        delta=" + L.delta[0].get_str() + " m=" + L.m[0].get_str() +
             " r=" + L.r.get_str() + " d_i=" + sa::mpz_sci_string(L.d[0]) + " (" +
             std::to_string(sa::mpz_digit_count(L.d[0])) + " digits)\n";
  }
  emit(j, opt, table);
  return 0;
}

// ---------------------------------------------------------------------------
// vanishing
// ---------------------------------------------------------------------------

int run_vanishing(long N, long c, const std::string& lambda_csv, long audit_m_max,
                  const Options& opt) {
  sa::Partition lambda = sa::Partition::parse(lambda_csv);
  long k = lambda.num_parts();
  bool vanishes = sa::br_vanishes(N, c, lambda);
  sa::Partition conj = lambda.conjugate();
  long sum = 0;
  for (long jx = 1; jx <= c; ++jx) sum += conj.part(jx);

  json j;
  j["check"] = "vanishing";
  j["N"] = N;
  j["c"] = c;
  j["lambda"] = lambda.parts();
  j["conjugate"] = conj.parts();
  j["sum_first_c"] = sum;
  j["rhs"] = N - c;
  j["vanishes"] = vanishes;
  bool subcritical = (k + 1) * c < N;
  j["regime"] = subcritical ? "subcritical" : "ample-possible";
  if (subcritical) {
    sa::OptimalityReport rep = sa::optimality_audit(N, c, lambda, audit_m_max);
    j["audit"] = {{"m_lo", rep.m_lo},
                  {"m_hi", rep.m_hi},
                  {"violations", rep.violations},
                  {"all_vanish", rep.all_vanish()}};
  } else {
    j["audit"] = nullptr;
  }

  std::string table = "vanishing  N=" + std::to_string(N) + " c=" + std::to_string(c) +
                      " lambda=" + lambda.to_string() + "\n  sum=" + std::to_string(sum) +
                      " < N-c=" + std::to_string(N - c) + " ?  " +
                      (vanishes ? "yes (H^0 vanishes)" : "no") + "\n  regime: " +
                      std::string(subcritical ? "subcritical" : "ample-possible") + "\n";
  emit(j, opt, table);
  return 0;
}

// ---------------------------------------------------------------------------
// verify subchecks (templated over the scalar field)
// ---------------------------------------------------------------------------

struct VerifyArgs {
  int N = 2, k = 1;
  long delta = 2, epsilon = 1, r = 1;
  long l = 2, degree = 2;
  long samples = 100;
  std::string I_csv, Iprime_csv, lambda_csv;
  bool iprime_given = false;
  bool all_strata = false, zero_params = false;
  std::string grid;
  long k0_max = 12, k1_max = 12;
  long dump_coords = 0;
};

std::vector<int> parse_index_set(const std::string& csv) {
  std::vector<int> out;
  if (csv.empty()) return out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

sa::Instance make_instance(const VerifyArgs& va) {
  sa::Instance inst(va.N, va.k, va.delta, va.epsilon, va.r);
  if (inst.r_zero()) std::cerr << "warning: r = 0 is outside the stated range (r >= 1)\n";
  return inst;
}

template <class K>
int verify_star(const VerifyArgs& va, const Options& opt) {
  sa::Instance inst = make_instance(va);
  sa::SplitMix64 rng(opt.seed);
  sa::ParameterPoint<K> a =
      va.zero_params ? sa::zero_params<K>(inst) : sa::random_params<K>(inst, rng, opt.height);

  std::vector<sa::StratumLabel> labels;
  if (va.all_strata) {
    for (const auto& I : sa::all_strata(va.N)) labels.push_back({I, std::nullopt});
  } else {
    sa::StratumLabel label{parse_index_set(va.I_csv), std::nullopt};
    if (va.iprime_given) label.Iprime = parse_index_set(va.Iprime_csv);
    labels.push_back(label);
  }

  json strata = json::array();
  bool ok = true;
  std::string table;
  for (std::size_t s = 0; s < labels.size(); ++s) {
    // A single-label run reports under the caller's seed; a sweep derives one
    // child seed per stratum.
    std::uint64_t child =
        labels.size() == 1 ? opt.seed : sa::SplitMix64(opt.seed).split(s).next();
    sa::StarReport rep =
        sa::check_star<K>(inst, a, labels[s], va.samples, child, opt.height, opt.mode());
    ok = ok && rep.ok();
    strata.push_back(rep.to_json());
    table += "star I={";
    for (std::size_t i = 0; i < labels[s].I.size(); ++i)
      table += (i ? "," : "") + std::to_string(labels[s].I[i]);
    table += "}  " + std::to_string(rep.full_rank) + "/" + std::to_string(rep.samples) +
             " full rank\n";
  }
  json j;
  if (strata.size() == 1) {
    j = strata[0];
    j["ok"] = ok;
  } else {
    j["condition"] = "star";
    j["strata"] = strata;
    j["seed"] = opt.seed;
    j["field"] = sa::FieldTraits<K>::name();
    j["ok"] = ok;
  }
  emit(j, opt, table);
  return ok ? 0 : 1;
}

template <class K>
int verify_rank_oracle(const VerifyArgs& va, const Options& opt) {
  struct Cell {
    int N, k;
    long delta, epsilon, k0, k1;
  };
  std::vector<Cell> cells;
  auto add_cells = [&cells](int N, int k, long delta, long epsilon) {
    for (long k0 = 1; k0 <= N; ++k0)
      for (long k1 = std::max<long>(k, k0); k1 <= N; ++k1)
        cells.push_back({N, k, delta, epsilon, k0, k1});
  };
  long frames = va.samples;
  if (va.grid == "small") {
    frames = std::min<long>(frames, 3);
    for (int N : {2, 3})
      for (int k = 1; k <= std::min(2, N - 1); ++k) add_cells(N, k, 2, 1);
  } else if (va.grid == "full") {
    frames = std::min<long>(frames, 10);
    for (int N : {2, 3, 4})
      for (int k = 1; k <= std::min(2, N - 1); ++k)
        for (long delta : {2, 3})
          for (long epsilon : {1, 2}) add_cells(N, k, delta, epsilon);
  } else {
    add_cells(va.N, va.k, va.delta, va.epsilon);
  }

  struct Job {
    std::size_t cell;
    long frame;
  };
  std::vector<Job> jobs;
  for (std::size_t ci = 0; ci < cells.size(); ++ci)
    for (long f = 0; f < frames; ++f) jobs.push_back({ci, f});

  sa::SplitMix64 rng(opt.seed);
  struct Outcome {
    long computed = -1;
    bool match = false;
  };
  auto results = sa::map_indexed<Outcome>(jobs.size(), opt.mode(), [&](std::size_t idx) {
    try {
      const Cell& c = cells[jobs[idx].cell];
      sa::Instance inst(c.N, c.k, c.delta, c.epsilon, va.r);
      std::vector<int> I, Ip;
      for (long i = 0; i < c.N - c.k0; ++i) I.push_back(static_cast<int>(i));
      for (long i = 0; i < c.N - c.k1; ++i) Ip.push_back(static_cast<int>(i));
      sa::StratumLabel label{I, Ip};
      sa::SplitMix64 local = rng.split(idx);
      sa::FlagFrame<K> fr = sa::sample_sigma<K>(inst, label, local, opt.height);
      long rank = sa::rank_via_sparse(sa::phi_eta_matrix(inst, fr, opt.budget));
      long expected = sa::rank_formula(c.k, c.k0, c.k1, c.delta);
      return Outcome{rank, rank == expected};
    } catch (const std::exception&) {
      return Outcome{-1, false};
    }
  });

  json jcells = json::array();
  bool ok = true;
  std::string table;
  for (std::size_t ci = 0; ci < cells.size(); ++ci) {
    const Cell& c = cells[ci];
    long expected = sa::rank_formula(c.k, c.k0, c.k1, c.delta);
    json mism = json::array();
    for (std::size_t idx = 0; idx < jobs.size(); ++idx) {
      if (jobs[idx].cell != ci || results[idx].match) continue;
      mism.push_back({{"frame", jobs[idx].frame}, {"computed", results[idx].computed}});
      ok = false;
    }
    jcells.push_back({{"N", c.N},
                      {"k", c.k},
                      {"delta", c.delta},
                      {"epsilon", c.epsilon},
                      {"k0", c.k0},
                      {"k1", c.k1},
                      {"frames", frames},
                      {"expected", expected},
                      {"mismatches", mism}});
    table += "cell N=" + std::to_string(c.N) + " k=" + std::to_string(c.k) +
             " delta=" + std::to_string(c.delta) + " eps=" + std::to_string(c.epsilon) +
             " (k0,k1)=(" + std::to_string(c.k0) + "," + std::to_string(c.k1) +
             ")  rank=" + std::to_string(expected) + "  " +
             (mism.empty() ? "ok" : "MISMATCH") + "\n";
  }
  json j{{"check", "rank-oracle"},
         {"cells", jcells},
         {"frames_per_cell", frames},
         {"seed", opt.seed},
         {"field", sa::FieldTraits<K>::name()},
         {"ok", ok}};
  emit(j, opt, table);
  return ok ? 0 : 1;
}

template <class K>
int verify_cocycle(const VerifyArgs& va, const Options& opt) {
  if (va.l < 1) throw std::invalid_argument("cocycle: need l >= 1");
  sa::SplitMix64 rng(opt.seed);
  struct Outcome {
    bool ok = false;
    json dump;
  };
  auto results = sa::map_indexed<Outcome>(
      static_cast<std::size_t>(va.samples), opt.mode(), [&](std::size_t i) -> Outcome {
        try {
          sa::SplitMix64 local = rng.split(i);
          long deg = va.degree > 0 ? va.degree : 1 + static_cast<long>(local.below(3));
          std::vector<sa::HomogPoly<K>> omegas;
          for (long s = 0; s < va.l; ++s)
            omegas.push_back(sa::random_homog_poly<K>(va.N + 1, deg, local, opt.height));
          std::vector<K> x(va.N + 1);
          for (auto& c : x) c = sa::FieldTraits<K>::random_nonzero(local, opt.height);
          int chart_from = static_cast<int>(local.below(va.N + 1));
          int chart_to = static_cast<int>(local.below(va.N + 1));
          std::vector<std::vector<K>> vs(va.l - 1, std::vector<K>(va.N + 1, K(0)));
          for (auto& v : vs)
            for (int jx = 0; jx <= va.N; ++jx)
              if (jx != chart_from) v[jx] = sa::FieldTraits<K>::random(local, opt.height);
          auto verdict = sa::cocycle_check(omegas, chart_from, chart_to,
                                           std::span<const K>(x), vs);
          if (verdict.ok) return Outcome{true, {}};
          json dump{{"sample", static_cast<long>(i)},
                    {"chart_from", chart_from},
                    {"chart_to", chart_to},
                    {"verdict", verdict.to_json()}};
          return Outcome{false, dump};
        } catch (const std::exception& e) {
          return Outcome{false, json{{"sample", static_cast<long>(i)}, {"error", e.what()}}};
        }
      });
  json failures = json::array();
  for (const auto& rr : results)
    if (!rr.ok) failures.push_back(rr.dump);
  bool ok = failures.empty();
  json j{{"check", "cocycle"},  {"N", va.N},       {"l", va.l},
         {"samples", va.samples}, {"failures", failures}, {"seed", opt.seed},
         {"field", sa::FieldTraits<K>::name()},  {"ok", ok}};
  emit(j, opt,
       "cocycle  " + std::to_string(va.samples - failures.size()) + "/" +
           std::to_string(va.samples) + " exact\n");
  return ok ? 0 : 1;
}

template <class K>
int verify_minor_transition(const VerifyArgs& va, const Options& opt) {
  sa::Instance inst = make_instance(va);
  if (va.l < 1 || va.l > inst.k + 1)
    throw std::invalid_argument("minor-transition: need 1 <= l <= k+1");
  std::optional<sa::Partition> lambda;
  if (!va.lambda_csv.empty()) {
    lambda = sa::Partition::parse(va.lambda_csv);
    if (sa::jump_sequence(*lambda).s1() != inst.k)
      throw std::invalid_argument("minor-transition: lambda must have k parts (s1 = k)");
  }
  sa::SplitMix64 rng(opt.seed);
  struct Outcome {
    bool ok = false;
    json dump;
  };
  auto results = sa::map_indexed<Outcome>(
      static_cast<std::size_t>(va.samples), opt.mode(), [&](std::size_t i) -> Outcome {
        try {
          sa::SplitMix64 local = rng.split(i);
          sa::ParameterPoint<K> a = sa::random_params<K>(inst, local, opt.height);
          sa::FlagFrame<K> fr = sa::sample_frame_on_stratum<K>(inst, {}, local, opt.height);
          int chart_to = static_cast<int>(local.below(va.N + 1));
          long ncols = inst.num_columns();

          auto random_selector = [&](long size) {
            std::vector<long> cols;
            while (static_cast<long>(cols.size()) < size) {
              long c = static_cast<long>(local.below(ncols));
              if (std::find(cols.begin(), cols.end(), c) == cols.end()) cols.push_back(c);
            }
            std::sort(cols.begin(), cols.end());
            return sa::PluckerSelector{cols};
          };

          if (!lambda) {
            auto verdict =
                sa::minor_transition_check(inst, a, random_selector(va.l), fr, chart_to);
            if (verdict.ok) return {true, {}};
            return {false,
                    json{{"sample", static_cast<long>(i)}, {"verdict", verdict.to_json()}}};
          }
          // Product law: one size-(s_i+1) minor per factor, b_i factors at
          // level i; the combined ratio must be g^{|λ*₊|(ε+δ)}.
          sa::JumpSequence s = sa::jump_sequence(*lambda);
          sa::DenseMatrix<K> A_from = sa::build_A(inst, a, fr);
          sa::FlagFrame<K> moved = sa::transport_frame(fr, chart_to);
          sa::DenseMatrix<K> A_to = sa::build_A(inst, a, moved);
          K prod_from(1), prod_to(1);
          for (long lv = 0; lv < s.t(); ++lv)
            for (long b = 0; b < s.multiplicities[lv]; ++b) {
              sa::PluckerSelector sel = random_selector(s.values[lv] + 1);
              prod_from *= sa::plucker_minor(A_from, sel);
              prod_to *= sa::plucker_minor(A_to, sel);
            }
          K g = sa::transition_factor<K>(sa::pullback_degree(*lambda, inst.epsilon, inst.delta),
                                         fr.chart, chart_to, std::span<const K>(fr.x));
          if (prod_from == g * prod_to) return {true, {}};
          return {false,
                  json{{"sample", static_cast<long>(i)},
                       {"prod_from", sa::scalar_to_json(prod_from)},
                       {"prod_to", sa::scalar_to_json(prod_to)},
                       {"factor", sa::scalar_to_json(g)}}};
        } catch (const std::exception& e) {
          return Outcome{false, json{{"sample", static_cast<long>(i)}, {"error", e.what()}}};
        }
      });
  json failures = json::array();
  for (const auto& rr : results)
    if (!rr.ok) failures.push_back(rr.dump);
  bool ok = failures.empty();
  json j{{"check", "minor-transition"},
         {"instance", inst.to_json()},
         {"l", va.l},
         {"lambda", lambda ? json(lambda->parts()) : json(nullptr)},
         {"samples", va.samples},
         {"failures", failures},
         {"seed", opt.seed},
         {"field", sa::FieldTraits<K>::name()},
         {"ok", ok}};
  emit(j, opt,
       "minor-transition  " + std::to_string(va.samples - failures.size()) + "/" +
           std::to_string(va.samples) + " exact\n");
  return ok ? 0 : 1;
}

template <class K>
int verify_psi_in_Y_cmd(const VerifyArgs& va, const Options& opt) {
  sa::Instance inst = make_instance(va);
  sa::SplitMix64 rng(opt.seed);
  struct Outcome {
    bool ok = false;
    json dump;
  };
  auto results = sa::map_indexed<Outcome>(
      static_cast<std::size_t>(va.samples), opt.mode(), [&](std::size_t i) -> Outcome {
        try {
          sa::SplitMix64 local = rng.split(i);
          sa::ParameterPoint<K> a = sa::random_params<K>(inst, local, opt.height);
          sa::FlagFrame<K> fr = sa::sample_tangent_frame(inst, a, local, opt.height);
          auto verdict = sa::verify_psi_in_Y(inst, a, fr);
          if (verdict.ok) return {true, {}};
          return {false, json{{"sample", static_cast<long>(i)},
                              {"frame", fr.to_json()},
                              {"verdict", verdict.to_json()}}};
        } catch (const std::exception& e) {
          return Outcome{false, json{{"sample", static_cast<long>(i)}, {"error", e.what()}}};
        }
      });
  json failures = json::array();
  for (const auto& rr : results)
    if (!rr.ok) failures.push_back(rr.dump);
  bool ok = failures.empty();
  json j{{"check", "psi-in-Y"},
         {"instance", inst.to_json()},
         {"samples", va.samples},
         {"failures", failures},
         {"seed", opt.seed},
         {"field", sa::FieldTraits<K>::name()},
         {"ok", ok}};

  // Optional coordinate dump: the leading Δ-coordinates of one fresh tangent
  // frame, as (selector, value) pairs in enumeration order.
  if (va.dump_coords > 0) {
    sa::SplitMix64 local = rng.split(static_cast<std::uint64_t>(va.samples));
    sa::ParameterPoint<K> a = sa::random_params<K>(inst, local, opt.height);
    sa::FlagFrame<K> fr = sa::sample_tangent_frame(inst, a, local, opt.height);
    sa::Partition column_shape(std::vector<long>(inst.k, 1));
    json coords = json::array();
    try {
      sa::DeltaCoordStream<K> stream(inst, a, fr, sa::jump_sequence(column_shape));
      for (long d = 0; d < va.dump_coords; ++d) {
        auto coord = stream.next();
        if (!coord) break;
        json sels = json::array();
        for (const auto& sel : coord->selectors) sels.push_back(sel.cols);
        coords.push_back({{"selectors", sels}, {"value", sa::scalar_to_json(coord->value)}});
      }
      j["delta_coords"] = coords;
    } catch (const std::exception& e) {
      j["delta_coords"] = json{{"error", e.what()}};
    }
  }

  emit(j, opt,
       "psi-in-Y  " + std::to_string(va.samples - failures.size()) + "/" +
           std::to_string(va.samples) + " tangent frames land in Y\n");
  return ok ? 0 : 1;
}

int verify_dims(const VerifyArgs& va, const Options& opt) {
  sa::OpenSetAudit audit =
      sa::audit_open_set_inequalities(va.k, va.delta, va.k0_max, va.k1_max);

  // Sampler parameter count vs the stratum dimension formula.
  json sigma_checks = json::array();
  bool sigma_ok = true;
  for (long k = 1; k <= va.k; ++k)
    for (long k0 = 1; k0 <= va.k0_max; ++k0)
      for (long k1 = std::max(k, k0); k1 <= va.k1_max; ++k1) {
        long formula = sa::sigma_dim(k, k0, k1);
        long params = k0 + k * k1 - k * k;  // free coords of x plus Grassmannian fiber
        if (formula != params) {
          sigma_ok = false;
          sigma_checks.push_back({{"k", k}, {"k0", k0}, {"k1", k1}});
        }
      }

  // Grassmannian anchors for the flag dimension.
  bool flag_ok = true;
  json flag_checks = json::array();
  for (long n = 2; n <= 8; ++n)
    for (long k = 1; k <= n - 1; ++k) {
      sa::JumpSequence s{{k}, {1}};
      if (sa::flag_dim(s, n) != k * (n - k)) {
        flag_ok = false;
        flag_checks.push_back({{"n", n}, {"k", k}});
      }
    }

  // Schur-module quotient bound at dimension level.
  bool quot_ok = true;
  json quot_fail = json::array();
  std::function<void(std::vector<long>&, long, long)> rec = [&](std::vector<long>& parts,
                                                                long remaining, long maxp) {
    if (!parts.empty()) {
      sa::Partition lam(parts);
      for (long n = lam.num_parts(); n <= 6; ++n) {
        if (n < 1) continue;
        auto qb = sa::quotient_upper_bound(lam, n);
        if (!qb.ok) {
          quot_ok = false;
          quot_fail.push_back({{"lambda", lam.parts()}, {"n", n}});
        }
      }
    }
    for (long p = std::min(remaining, maxp); p >= 1; --p) {
      parts.push_back(p);
      rec(parts, remaining - p, p);
      parts.pop_back();
    }
  };
  std::vector<long> parts;
  rec(parts, 8, 8);

  bool ok = audit.ok() && sigma_ok && flag_ok && quot_ok;
  json j{{"check", "dims"},
         {"open_set_audit", audit.to_json()},
         {"sigma_dim_mismatches", sigma_checks},
         {"flag_dim_mismatches", flag_checks},
         {"quotient_bound_failures", quot_fail},
         {"ok", ok}};
  emit(j, opt,
       std::string("dims  open-set audit ") + (audit.ok() ? "ok" : "VIOLATION") +
           ", sigma-dim " + (sigma_ok ? "ok" : "MISMATCH") + ", flag-dim " +
           (flag_ok ? "ok" : "MISMATCH") + ", quotient bound " + (quot_ok ? "ok" : "FAIL") +
           "\n");
  return ok ? 0 : 1;
}

template <class K>
int dispatch_verify(const std::string& check, const VerifyArgs& va, const Options& opt) {
  if (check == "star") return verify_star<K>(va, opt);
  if (check == "rank-oracle") return verify_rank_oracle<K>(va, opt);
  if (check == "cocycle") return verify_cocycle<K>(va, opt);
  if (check == "minor-transition") return verify_minor_transition<K>(va, opt);
  if (check == "psi-in-Y") return verify_psi_in_Y_cmd<K>(va, opt);
  if (check == "dims") return verify_dims(va, opt);
  throw std::invalid_argument("unknown check: " + check);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic audits for Schur-power ampleness constructions"};
  app.set_config("--config");

  Options opt;

  // bounds
  long b_N = 0, b_c = 0;
  std::string b_lambda;
  bool b_intro = false, b_ledger = false;
  CLI::App* bounds = app.add_subcommand("bounds", "effective degree bounds and parameter ledger");
  bounds->add_option("N", b_N, "ambient dimension")->required();
  bounds->add_option("c", b_c, "codimension")->required();
  bounds->add_option("lambda", b_lambda, "partition, comma separated")->required();
  bounds->add_flag("--intro-variant", b_intro, "also evaluate the exponent-c(k+1) variant");
  bounds->add_flag("--ledger", b_ledger, "include the full parameter ledger");
  bounds->add_option("--format", opt.format)->check(CLI::IsMember({"json", "table"}));

  // vanishing
  long v_N = 0, v_c = 0, v_m_max = 10;
  std::string v_lambda;
  CLI::App* vanishing = app.add_subcommand("vanishing", "Brueckmann-Rackwitz vanishing predicate");
  vanishing->add_option("N", v_N)->required();
  vanishing->add_option("c", v_c)->required();
  vanishing->add_option("lambda", v_lambda)->required();
  vanishing->add_option("--audit", v_m_max, "optimality audit up to this multiple");
  vanishing->add_option("--format", opt.format)->check(CLI::IsMember({"json", "table"}));

  // verify
  std::string check;
  VerifyArgs va;
  CLI::App* verify = app.add_subcommand("verify", "seeded verification checks");
  verify->add_option("check", check, "star|rank-oracle|cocycle|psi-in-Y|minor-transition|dims")
      ->required()
      ->check(CLI::IsMember(
          {"star", "rank-oracle", "cocycle", "psi-in-Y", "minor-transition", "dims"}));
  verify->add_option("--N", va.N);
  verify->add_option("--k", va.k);
  verify->add_option("--delta", va.delta);
  verify->add_option("--epsilon", va.epsilon);
  verify->add_option("--r", va.r);
  verify->add_option("--l", va.l);
  verify->add_option("--degree", va.degree);
  verify->add_option("--samples", va.samples);
  verify->add_option("--I", va.I_csv, "stratum index set, comma separated");
  verify->add_option("--Iprime", va.Iprime_csv, "refinement subset of I ('' for the empty set)")
      ->each([&va](const std::string&) { va.iprime_given = true; });
  verify->add_option("--lambda", va.lambda_csv, "partition for product laws");
  verify->add_flag("--all-strata", va.all_strata, "sweep every stratum |I| < N");
  verify->add_flag("--zero-params", va.zero_params, "use the zero parameter point");
  verify->add_option("--grid", va.grid)->check(CLI::IsMember({"small", "full"}));
  verify->add_option("--k0-max", va.k0_max);
  verify->add_option("--k1-max", va.k1_max);
  verify->add_option("--dump-coords", va.dump_coords,
                     "also dump the leading delta coordinates of one frame");
  verify->add_option("--seed", opt.seed)->each([&opt](const std::string&) {
    opt.seed_given = true;
  });
  verify->add_option("--field", opt.field)->check(CLI::IsMember({"Q", "Fp"}));
  verify->add_option("--prime", opt.prime);
  verify->add_option("--height", opt.height, "coefficient height bound");
  verify->add_option("--budget", opt.budget, "entry budget for explicit matrices");
  verify->add_flag("--serial", opt.serial, "use the serial reference kernels");
  verify->add_option("--format", opt.format)->check(CLI::IsMember({"json", "table"}));

  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    finish_seed(opt);
    if (*bounds) return run_bounds(b_N, b_c, b_lambda, b_intro, b_ledger, opt);
    if (*vanishing) return run_vanishing(v_N, v_c, v_lambda, v_m_max, opt);
    if (*verify) {
      if (opt.field == "Fp") {
        sa::Fp::set_modulus(opt.prime);
        return dispatch_verify<sa::Fp>(check, va, opt);
      }
      return dispatch_verify<sa::Rat>(check, va, opt);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
