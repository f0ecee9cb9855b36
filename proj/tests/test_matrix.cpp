#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schur_ample/matrix.hpp"
#include "schur_ample/rng.hpp"

using namespace schur_ample;

namespace {

DenseMatrix<Rat> random_matrix(long rows, long cols, SplitMix64& rng, long height) {
  DenseMatrix<Rat> M(rows, cols);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) M.at(i, j) = FieldTraits<Rat>::random(rng, height);
  return M;
}

}  // namespace

TEST_CASE("determinant spot values") {
  DenseMatrix<Rat> M(2, 2);
  M.at(0, 0) = 1;
  M.at(0, 1) = 2;
  M.at(1, 0) = 3;
  M.at(1, 1) = 4;
  CHECK(det_bareiss(M) == -2);

  DenseMatrix<Rat> S(3, 3);
  // singular: row2 = row0 + row1
  for (long j = 0; j < 3; ++j) {
    S.at(0, j) = j + 1;
    S.at(1, j) = 2 * j + 1;
    S.at(2, j) = S.at(0, j) + S.at(1, j);
  }
  CHECK(det_bareiss(S) == 0);
  CHECK(exact_rank(S) == 2);
}

TEST_CASE("determinant is multiplicative") {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    long n = 2 + static_cast<long>(rng.below(3));
    auto A = random_matrix(n, n, rng, 10);
    auto B = random_matrix(n, n, rng, 10);
    DenseMatrix<Rat> C(n, n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        Rat s = 0;
        for (long t = 0; t < n; ++t) s += A.at(i, t) * B.at(t, j);
        C.at(i, j) = s;
      }
    CHECK(det_bareiss(C) == det_bareiss(A) * det_bareiss(B));
  }
}

TEST_CASE("fraction-free rank agrees with Gaussian rank") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    long rows = 1 + static_cast<long>(rng.below(6));
    long cols = 1 + static_cast<long>(rng.below(8));
    auto M = random_matrix(rows, cols, rng, 8);
    // Occasionally force rank deficiency by duplicating a row.
    if (rows >= 2 && rng.below(2) == 0)
      for (long j = 0; j < cols; ++j) M.at(rows - 1, j) = M.at(0, j);
    CHECK(rank_fraction_free(M) == rank_gauss(M));
  }
}

TEST_CASE("sparse rank agrees with the dense routes") {
  SplitMix64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    long rows = 1 + static_cast<long>(rng.below(8));
    long cols = 1 + static_cast<long>(rng.below(10));
    DenseMatrix<Rat> M(rows, cols);
    std::vector<SparseRow<Rat>> srows(rows);
    for (long i = 0; i < rows; ++i)
      for (long j = 0; j < cols; ++j) {
        if (rng.below(3) != 0) continue;  // ~1/3 fill
        Rat v = FieldTraits<Rat>::random_nonzero(rng, 9);
        M.at(i, j) = v;
        srows[i].emplace_back(j, v);
      }
    CHECK(sparse_rank(srows) == exact_rank(M));
  }
}

TEST_CASE("sparse rank on block-diagonal input") {
  SplitMix64 rng(31);
  // Three 2x3 blocks along the diagonal; total rank is the sum of block ranks.
  DenseMatrix<Rat> M(6, 9);
  std::vector<SparseRow<Rat>> srows(6);
  for (int b = 0; b < 3; ++b)
    for (long i = 0; i < 2; ++i)
      for (long j = 0; j < 3; ++j) {
        Rat v = FieldTraits<Rat>::random(rng, 5);
        M.at(2 * b + i, 3 * b + j) = v;
        if (v != 0) srows[2 * b + i].emplace_back(3 * b + j, v);
      }
  CHECK(sparse_rank(srows) == exact_rank(M));
}

TEST_CASE("rank over Fp matches rank over Q on small integer matrices") {
  SplitMix64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    long rows = 1 + static_cast<long>(rng.below(5));
    long cols = 1 + static_cast<long>(rng.below(5));
    DenseMatrix<Rat> MQ(rows, cols);
    DenseMatrix<Fp> MP(rows, cols);
    for (long i = 0; i < rows; ++i)
      for (long j = 0; j < cols; ++j) {
        long v = rng.range(-20, 20);
        MQ.at(i, j) = v;
        MP.at(i, j) = Fp(v);
      }
    CHECK(exact_rank(MQ) == exact_rank(MP));
  }
}

TEST_CASE("vectors_independent") {
  std::vector<std::vector<Rat>> dep = {{1, 2, 3}, {2, 4, 6}};
  CHECK_FALSE(vectors_independent(dep));
  std::vector<std::vector<Rat>> ind = {{1, 0, 3}, {0, 1, 0}};
  CHECK(vectors_independent(ind));
}
