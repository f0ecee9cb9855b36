#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle_helpers.hpp"
#include "schur_ample/partition.hpp"

using namespace schur_ample;

namespace {

// All partitions of every n in [1, max_weight].
std::vector<Partition> partitions_up_to(long max_weight) {
  std::vector<Partition> out;
  std::vector<long> parts;
  std::function<void(long, long)> rec = [&](long remaining, long maxp) {
    if (!parts.empty()) out.emplace_back(parts);
    for (long p = std::min(remaining, maxp); p >= 1; --p) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  rec(max_weight, max_weight);
  return out;
}

}  // namespace

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(Partition({}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({0}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({3, -1}), std::invalid_argument);
  CHECK(Partition::parse("5,3,3,1") == Partition({5, 3, 3, 1}));
  CHECK_THROWS(Partition::parse("2,x"));
}

TEST_CASE("conjugate") {
  CHECK(Partition({5, 3, 3, 1}).conjugate() == Partition({4, 3, 3, 1, 1}));
  CHECK(Partition({3}).conjugate() == Partition({1, 1, 1}));
  CHECK(Partition({4, 3, 3, 1, 1}).conjugate() == Partition({5, 3, 3, 1}));
}

TEST_CASE("conjugate is an involution, exhaustively") {
  for (const auto& lam : partitions_up_to(30)) {
    CHECK(lam.conjugate().conjugate() == lam);
    CHECK(lam.conjugate().num_parts() == lam.part(1));
  }
}

TEST_CASE("jump sequence") {
  auto s = jump_sequence(Partition({5, 3, 3, 1}));
  CHECK(s.values == std::vector<long>({4, 3, 1}));
  CHECK(s.multiplicities == std::vector<long>({1, 2, 2}));

  auto s2 = jump_sequence(Partition({7}));
  CHECK(s2.values == std::vector<long>({1}));
  CHECK(s2.multiplicities == std::vector<long>({7}));

  auto s3 = jump_sequence(Partition({1, 1}));
  CHECK(s3.values == std::vector<long>({2}));
  CHECK(s3.multiplicities == std::vector<long>({1}));
}

TEST_CASE("jump values are the distinct conjugate parts, descending") {
  for (const auto& lam : partitions_up_to(14)) {
    auto s = jump_sequence(lam);
    Partition conj = lam.conjugate();
    std::vector<long> distinct;
    for (long p : conj.parts())
      if (distinct.empty() || distinct.back() != p) distinct.push_back(p);
    CHECK(s.values == distinct);
    CHECK(s.s1() == lam.num_parts());
    long total = 0;
    for (long b : s.multiplicities) total += b;
    CHECK(total == lam.part(1));
  }
}

TEST_CASE("ampleness weight") {
  CHECK(ampleness_weight(Partition({1, 1})) == 3);
  CHECK(ampleness_weight(Partition({1})) == 2);
  CHECK(ampleness_weight(Partition({5, 3, 3, 1})) == 17);
  CHECK(ampleness_weight_primitive(Partition({2, 2})) == 3);
}

TEST_CASE("weight identities agree on all small partitions") {
  for (const auto& lam : partitions_up_to(14)) {
    Partition conj = lam.conjugate();
    long via_conj = 0;
    for (long p : conj.parts()) via_conj += p + 1;
    long via_parts = 2 * lam.part(1);
    for (long i = 2; i <= lam.num_parts(); ++i) via_parts += lam.part(i);
    CHECK(ampleness_weight(lam) == via_conj);
    CHECK(ampleness_weight(lam) == via_parts);
  }
}

TEST_CASE("br_vanishes") {
  CHECK(br_vanishes(5, 2, Partition({1})));
  CHECK(br_vanishes(5, 2, Partition({1, 1})));
  CHECK_FALSE(br_vanishes(3, 3, Partition({1})));
  CHECK_FALSE(br_vanishes(4, 4, Partition({2, 1})));
  CHECK_THROWS_AS(br_vanishes(5, 0, Partition({1})), std::invalid_argument);
  CHECK_THROWS_AS(br_vanishes(5, 6, Partition({1})), std::invalid_argument);
}

TEST_CASE("br_vanishes does not depend on the multiple once m >= c") {
  // For m >= c every part of m*lambda is >= c, so the truncated conjugate sum
  // is c*k regardless of m and the predicate is constant in m. (Below c the
  // sum genuinely varies: N=7, c=3, lambda=(2,1) flips between m=1 and m=2.)
  for (const auto& lam : partitions_up_to(6)) {
    for (long N = 2; N <= 8; ++N) {
      for (long c = 1; c <= N; ++c) {
        bool at_c = br_vanishes(N, c, lam.scaled(c));
        bool reduced = c * lam.num_parts() < N - c;
        CHECK(at_c == reduced);
        for (long m = c; m <= 10; ++m) CHECK(br_vanishes(N, c, lam.scaled(m)) == at_c);
      }
    }
  }
  CHECK(br_vanishes(7, 3, Partition({2, 1})));
  CHECK_FALSE(br_vanishes(7, 3, Partition({4, 2})));
}

TEST_CASE("optimality audit") {
  auto r1 = optimality_audit(5, 1, Partition({1, 1}), 10);
  CHECK(r1.precondition_ok);
  CHECK(r1.all_vanish());

  auto r2 = optimality_audit(5, 2, Partition({1}), 10);
  CHECK(r2.precondition_ok);
  CHECK(r2.all_vanish());

  auto r3 = optimality_audit(5, 2, Partition({1, 1}), 10);
  CHECK_FALSE(r3.precondition_ok);  // (k+1)c = 6 >= 5: the ample regime
}

TEST_CASE("schur_dim spot values") {
  CHECK(schur_dim(Partition({1, 1}), 3) == 3);
  CHECK(schur_dim(Partition({2}), 2) == 3);
  CHECK(schur_dim(Partition({2, 1}), 2) == 2);
  CHECK(schur_dim(Partition({2, 1}), 3) == 8);
  CHECK(schur_dim(Partition({3, 2, 1}), 4) == 64);
  CHECK(schur_dim(Partition({1, 1, 1}), 2) == 0);
}

TEST_CASE("schur_dim equals the tableau count") {
  for (const auto& lam : partitions_up_to(6))
    for (long n = 1; n <= 4; ++n)
      CHECK(schur_dim(lam, n) == oracle::ssyt_count(lam, n));
}

TEST_CASE("schur_dim closed forms for rows and columns") {
  for (long m = 1; m <= 8; ++m)
    for (long n = 1; n <= 8; ++n) CHECK(schur_dim(Partition({m}), n) == binomial(n + m - 1, m));
  for (long k = 1; k <= 8; ++k)
    for (long n = 1; n <= 8; ++n)
      CHECK(schur_dim(Partition(std::vector<long>(k, 1)), n) == binomial(n, k));
}

TEST_CASE("quotient upper bound") {
  auto q1 = quotient_upper_bound(Partition({1, 1}), 3);
  CHECK(q1.lhs == 3);
  CHECK(q1.rhs == 3);
  CHECK(q1.ok);

  auto q2 = quotient_upper_bound(Partition({2, 2}), 3);
  CHECK(q2.lhs == 6);
  CHECK(q2.rhs == 6);
  CHECK(q2.ok);

  auto q3 = quotient_upper_bound(Partition({2, 1}), 3);
  CHECK(q3.lhs == 8);
  CHECK(q3.rhs == 9);
  CHECK(q3.ok);
}

TEST_CASE("quotient upper bound holds for |lambda| <= 8, n <= 6") {
  for (const auto& lam : partitions_up_to(8))
    for (long n = lam.num_parts(); n <= 6; ++n) CHECK(quotient_upper_bound(lam, n).ok);
}

TEST_CASE("flag_dim") {
  CHECK(flag_dim(JumpSequence{{2}, {1}}, 4) == 4);
  CHECK(flag_dim(JumpSequence{{2, 1}, {1, 1}}, 3) == 3);
  for (long n = 2; n <= 9; ++n)
    for (long k = 1; k <= n - 1; ++k) CHECK(flag_dim(JumpSequence{{k}, {1}}, n) == k * (n - k));
  CHECK_THROWS_AS(flag_dim(JumpSequence{{3}, {1}}, 3), std::invalid_argument);
}

TEST_CASE("tangent Grassmannian total space dimension anchor") {
  // Grass(k, TM) over an N-dimensional base has dimension N + k(N-k).
  for (long N = 2; N <= 8; ++N)
    for (long k = 1; k <= N - 1; ++k)
      CHECK(N + flag_dim(JumpSequence{{k}, {1}}, N) == N + k * (N - k));
}
