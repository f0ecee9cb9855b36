#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle_helpers.hpp"
#include "schur_ample/report.hpp"

using namespace schur_ample;

namespace {

std::vector<Rat> random_point_nonzero(int n, SplitMix64& rng, long height) {
  std::vector<Rat> x(n);
  for (auto& c : x) c = FieldTraits<Rat>::random_nonzero(rng, height);
  return x;
}

}  // namespace

TEST_CASE("multiindex enumeration") {
  auto idx = enumerate_multiindices(3, 2);
  CHECK(idx.size() == 6);
  CHECK(idx.front() == MultiIndex({2, 0, 0}));
  CHECK(idx.back() == MultiIndex({0, 0, 2}));
  // strictly descending lex, no duplicates
  for (std::size_t i = 1; i < idx.size(); ++i) CHECK(idx[i - 1] > idx[i]);
}

TEST_CASE("enumerator emits exactly n_delta indices") {
  for (long N = 1; N <= 6; ++N)
    for (long d = 0; d <= 8; ++d) {
      auto idx = enumerate_multiindices(static_cast<int>(N) + 1, d);
      CHECK(mpz_class(static_cast<long>(idx.size())) == n_delta(N, d));
      for (const auto& J : idx) CHECK(mi_length(J) == d);
    }
}

TEST_CASE("n_delta closed forms") {
  CHECK(n_delta(2, 2) == 6);
  CHECK(n_delta(7, 0) == 1);
  for (long d = 0; d <= 20; ++d) CHECK(n_delta(1, d) == d + 1);
  // Arbitrary precision beyond machine range, with a clean overflow guard on
  // the machine-sized accessor.
  CHECK(n_delta(40, 40) == binomial(80, 40));
  CHECK_THROWS_AS(n_delta_long(40, 40), std::overflow_error);
}

TEST_CASE("evaluation") {
  // P = xi0*xi1 + xi2^2 at (2,3,1) -> 7
  HomogPoly<Rat> P(3, 2);
  P.add_term({1, 1, 0}, 1);
  P.add_term({0, 0, 2}, 1);
  std::vector<Rat> x = {2, 3, 1};
  CHECK(P.eval(std::span<const Rat>(x)) == 7);

  HomogPoly<Rat> zero(3, 2);
  CHECK(zero.eval(std::span<const Rat>(x)) == 0);

  auto mono = HomogPoly<Rat>::monomial(3, {2, 0, 0});
  std::vector<Rat> ones = {1, 1, 1};
  CHECK(mono.eval(std::span<const Rat>(ones)) == 1);
}

TEST_CASE("directional derivative on a chart") {
  // P = xi0^d dehomogenizes to 1 on chart 0.
  auto P = HomogPoly<Rat>::monomial(3, {4, 0, 0});
  std::vector<Rat> x = {1, 5, 7};
  std::vector<Rat> v = {0, 3, -2};
  CHECK(dir_derivative(P, 0, std::span<const Rat>(x), std::span<const Rat>(v)) == 0);

  // P = xi1 on chart 0 is the coordinate function u1.
  auto Q = HomogPoly<Rat>::monomial(3, {0, 1, 0});
  std::vector<Rat> e1 = {0, 1, 0};
  CHECK(dir_derivative(Q, 0, std::span<const Rat>(x), std::span<const Rat>(e1)) == 1);

  // P = xi1^2, x with u1 = 3, v = e1: d/dt (t^2) at 3 is 6.
  auto R = HomogPoly<Rat>::monomial(3, {0, 2, 0});
  std::vector<Rat> x2 = {1, 3, 9};
  CHECK(dir_derivative(R, 0, std::span<const Rat>(x2), std::span<const Rat>(e1)) == 6);

  std::vector<Rat> at_infinity = {0, 1, 1};
  CHECK_THROWS_AS(dir_derivative(Q, 0, std::span<const Rat>(at_infinity), std::span<const Rat>(e1)),
                  std::invalid_argument);
}

TEST_CASE("derivative agrees with the exact difference quotient") {
  SplitMix64 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng.below(3));  // 2..4 variables
    long d = 1 + static_cast<long>(rng.below(4));
    auto P = random_homog_poly<Rat>(n, d, rng, 30);
    int chart = static_cast<int>(rng.below(n));
    auto x = random_point_nonzero(n, rng, 20);
    std::vector<Rat> v(n, 0);
    for (int j = 0; j < n; ++j)
      if (j != chart) v[j] = FieldTraits<Rat>::random(rng, 20);
    Rat lhs = dir_derivative(P, chart, std::span<const Rat>(x), std::span<const Rat>(v));
    Rat rhs = oracle::difference_quotient(P, chart, std::span<const Rat>(x), std::span<const Rat>(v));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("eval is multiplicative and linear") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng.below(3));
    long d = 1 + static_cast<long>(rng.below(3));
    auto P = random_homog_poly<Rat>(n, d, rng, 12);
    auto Q = random_homog_poly<Rat>(n, d, rng, 12);
    auto R = random_homog_poly<Rat>(n, 1 + rng.below(3), rng, 12);
    std::vector<Rat> x(n);
    for (auto& c : x) c = FieldTraits<Rat>::random(rng, 12);
    std::span<const Rat> xs(x);
    CHECK((P * R).eval(xs) == P.eval(xs) * R.eval(xs));
    CHECK((P + Q).eval(xs) == P.eval(xs) + Q.eval(xs));
    Rat c = FieldTraits<Rat>::random(rng, 12);
    CHECK(P.scaled(c).eval(xs) == c * P.eval(xs));
  }
}

TEST_CASE("multiindex support and length") {
  MultiIndex J = {0, 3, 0, 1};
  CHECK(mi_length(J) == 4);
  CHECK(mi_support(J) == std::vector<int>({1, 3}));
  CHECK(mi_support(MultiIndex{0, 0}).empty());
}

TEST_CASE("Leibniz rule, exactly") {
  SplitMix64 rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng.below(2));
    auto P = random_homog_poly<Rat>(n, 1 + rng.below(3), rng, 15);
    auto Q = random_homog_poly<Rat>(n, 1 + rng.below(3), rng, 15);
    int chart = static_cast<int>(rng.below(n));
    auto x = random_point_nonzero(n, rng, 15);
    std::vector<Rat> v(n, 0);
    for (int j = 0; j < n; ++j)
      if (j != chart) v[j] = FieldTraits<Rat>::random(rng, 15);
    std::span<const Rat> xs(x), vs(v);
    Rat left = dir_derivative(P * Q, chart, xs, vs);
    Rat right = chart_eval(P, chart, xs) * dir_derivative(Q, chart, xs, vs) +
                chart_eval(Q, chart, xs) * dir_derivative(P, chart, xs, vs);
    CHECK(left == right);
  }
}

TEST_CASE("transition factor") {
  std::vector<Rat> x = {1, 2, 5};
  std::span<const Rat> xs(x);
  CHECK(transition_factor<Rat>(3, 1, 1, xs) == 1);
  CHECK(transition_factor<Rat>(0, 0, 2, xs) == 1);
  CHECK(transition_factor<Rat>(2, 0, 1, xs) == 4);

  std::vector<Rat> bad = {1, 0, 5};
  CHECK_THROWS_AS(transition_factor<Rat>(2, 0, 1, std::span<const Rat>(bad)),
                  std::invalid_argument);
}

TEST_CASE("chart writings transition by exactly the factor") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng.below(3));
    long d = 1 + static_cast<long>(rng.below(4));
    auto P = random_homog_poly<Rat>(n, d, rng, 25);
    auto x = random_point_nonzero(n, rng, 25);
    int ci = static_cast<int>(rng.below(n));
    int cj = static_cast<int>(rng.below(n));
    std::span<const Rat> xs(x);
    CHECK(chart_eval(P, ci, xs) == transition_factor<Rat>(d, ci, cj, xs) * chart_eval(P, cj, xs));
  }
}

TEST_CASE("tangent transport is functorial and inverts") {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 3;
    auto x = random_point_nonzero(n, rng, 20);
    std::vector<Rat> v(n, 0);
    for (int j = 1; j < n; ++j) v[j] = FieldTraits<Rat>::random(rng, 20);
    std::span<const Rat> xs(x);
    auto v1 = transport_tangent<Rat>(0, 1, xs, std::span<const Rat>(v));
    auto back = transport_tangent<Rat>(1, 0, xs, std::span<const Rat>(v1));
    CHECK(back == v);
    // Derivative pairing is chart-invariant up to the product rule, checked
    // via the cocycle tests; here just confirm the transported vector kills
    // its own chart slot.
    CHECK(v1[1] == 0);
  }
}

TEST_CASE("canonical JSON serialization") {
  HomogPoly<Rat> P(3, 2);
  P.add_term({0, 0, 2}, Rat(-1, 2));
  P.add_term({1, 1, 0}, 3);
  json j = poly_to_json(P);
  CHECK(j["degree"] == 2);
  CHECK(j["terms"].size() == 2);
  // graded-lex order: (1,1,0) before (0,0,2)
  CHECK(j["terms"][0]["exp"] == json::array({1, 1, 0}));
  CHECK(j["terms"][0]["num"] == "3");
  CHECK(j["terms"][0]["den"] == "1");
  CHECK(j["terms"][1]["num"] == "-1");
  CHECK(j["terms"][1]["den"] == "2");
}

TEST_CASE("prime field basics") {
  CHECK(Fp::modulus() == Fp::kDefaultPrime);
  Fp a(5), b(-3);
  CHECK(a + b == Fp(2));
  CHECK(a * b == Fp(-15));
  CHECK((a / b) * b == a);
  CHECK_THROWS_AS(a / Fp(0), std::domain_error);
  CHECK_THROWS_AS(Fp::set_modulus(97), std::invalid_argument);        // too small
  CHECK_THROWS_AS(Fp::set_modulus(1 << 21), std::invalid_argument);   // composite
}

TEST_CASE("polynomial identities also hold over Fp") {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3;
    long d = 1 + static_cast<long>(rng.below(3));
    auto P = random_homog_poly<Fp>(n, d, rng, 0);
    std::vector<Fp> x(n);
    for (auto& c : x) c = FieldTraits<Fp>::random_nonzero(rng, 0);
    int ci = static_cast<int>(rng.below(n)), cj = static_cast<int>(rng.below(n));
    std::span<const Fp> xs(x);
    CHECK(chart_eval(P, ci, xs) == transition_factor<Fp>(d, ci, cj, xs) * chart_eval(P, cj, xs));
  }
}
