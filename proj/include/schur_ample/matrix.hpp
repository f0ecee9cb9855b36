#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "schur_ample/scalar.hpp"

namespace schur_ample {

/// Dense row-major matrix over an exact field.
template <class K>
class DenseMatrix {
 public:
  DenseMatrix() : rows_(0), cols_(0) {}
  DenseMatrix(long rows, long cols) : rows_(rows), cols_(cols), data_(rows * cols, K(0)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("DenseMatrix: negative shape");
  }

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  K& at(long i, long j) { return data_[i * cols_ + j]; }
  const K& at(long i, long j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const K& v : data_)
      if (!FieldTraits<K>::is_zero(v)) return false;
    return true;
  }

 private:
  long rows_, cols_;
  std::vector<K> data_;
};

/*
 * Fraction-free (Bareiss) elimination. After step k every entry is a
 * (k+1)x(k+1) minor of the original matrix, so the division by the previous
 * pivot is exact (Sylvester's identity). Over the integers this is what keeps
 * intermediate entries from exploding into fractions; over a field the same
 * recurrence is simply exact division.
 */

/// Exact determinant of a square matrix (any integral domain with exact
/// division; both Q and F_p qualify).
template <class K>
K det_bareiss(DenseMatrix<K> M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("det: matrix not square");
  const long n = M.rows();
  if (n == 0) return K(1);
  K prev(1);
  bool negate = false;
  for (long c = 0; c < n - 1; ++c) {
    long piv = -1;
    for (long i = c; i < n; ++i)
      if (!FieldTraits<K>::is_zero(M.at(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) return K(0);
    if (piv != c) {
      for (long j = 0; j < n; ++j) std::swap(M.at(piv, j), M.at(c, j));
      negate = !negate;
    }
    for (long i = c + 1; i < n; ++i) {
      for (long j = c + 1; j < n; ++j)
        M.at(i, j) = (M.at(i, j) * M.at(c, c) - M.at(i, c) * M.at(c, j)) / prev;
      M.at(i, c) = K(0);
    }
    prev = M.at(c, c);
  }
  K det = M.at(n - 1, n - 1);
  return negate ? -det : det;
}

/// Rank by plain Gaussian elimination over the field.
template <class K>
long rank_gauss(DenseMatrix<K> M) {
  const long rows = M.rows(), cols = M.cols();
  long r = 0;
  for (long c = 0; c < cols && r < rows; ++c) {
    long piv = -1;
    for (long i = r; i < rows; ++i)
      if (!FieldTraits<K>::is_zero(M.at(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (long j = 0; j < cols; ++j) std::swap(M.at(piv, j), M.at(r, j));
    for (long i = r + 1; i < rows; ++i) {
      if (FieldTraits<K>::is_zero(M.at(i, c))) continue;
      K f = M.at(i, c) / M.at(r, c);
      for (long j = c; j < cols; ++j) M.at(i, j) -= f * M.at(r, j);
    }
    ++r;
  }
  return r;
}

/// Integer Bareiss rank with pivot-column skipping.
inline long rank_bareiss_int(std::vector<std::vector<mpz_class>> M) {
  if (M.empty()) return 0;
  const long rows = static_cast<long>(M.size());
  const long cols = static_cast<long>(M[0].size());
  long r = 0;
  mpz_class prev = 1, tmp;
  for (long c = 0; c < cols && r < rows; ++c) {
    long piv = -1;
    for (long i = r; i < rows; ++i)
      if (M[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(M[piv], M[r]);
    for (long i = r + 1; i < rows; ++i) {
      for (long j = c + 1; j < cols; ++j) {
        tmp = M[i][j] * M[r][c] - M[i][c] * M[r][j];
        mpz_divexact(M[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      M[i][c] = 0;
    }
    prev = M[r][c];
    ++r;
  }
  return r;
}

/// Rank of a rational matrix: clear denominators row by row and run the
/// integer fraction-free elimination.
inline long rank_fraction_free(const DenseMatrix<Rat>& M) {
  std::vector<std::vector<mpz_class>> Z(M.rows(), std::vector<mpz_class>(M.cols()));
  mpz_class lcm, t;
  for (long i = 0; i < M.rows(); ++i) {
    lcm = 1;
    for (long j = 0; j < M.cols(); ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                                                M.at(i, j).get_den().get_mpz_t());
    for (long j = 0; j < M.cols(); ++j) {
      mpz_divexact(t.get_mpz_t(), lcm.get_mpz_t(), M.at(i, j).get_den().get_mpz_t());
      Z[i][j] = M.at(i, j).get_num() * t;
    }
  }
  return rank_bareiss_int(std::move(Z));
}

/// Exact rank. Rationals take the fraction-free route; other fields use
/// Gaussian elimination (divisions there are single machine ops).
template <class K>
long exact_rank(const DenseMatrix<K>& M) {
  if constexpr (std::is_same_v<K, Rat>) {
    return rank_fraction_free(M);
  } else {
    return rank_gauss(M);
  }
}

/// One sparse row: (column, value) pairs sorted by column, values nonzero.
template <class K>
using SparseRow = std::vector<std::pair<long, K>>;

/*
 * Rank by sparse division-based elimination. Pivot rows are chosen shortest
 * first; eliminating a pivot column touches only the rows that contain it,
 * so on block-structured matrices the work and the entry growth both stay
 * inside one block. This is the kernel behind the rank oracle for the large
 * per-frame linear maps, cross-checked against the dense routes in the tests.
 */
template <class K>
long sparse_rank(std::vector<SparseRow<K>> rows) {
  // Drop empty rows up front.
  std::vector<long> live;
  for (long i = 0; i < static_cast<long>(rows.size()); ++i)
    if (!rows[i].empty()) live.push_back(i);
  long rank = 0;
  while (!live.empty()) {
    // Shortest live row (ties: lowest index) becomes the pivot row.
    long pi = live[0];
    for (long idx : live)
      if (rows[idx].size() < rows[pi].size()) pi = idx;
    const long pcol = rows[pi].front().first;
    const K pval = rows[pi].front().second;
    std::vector<long> next;
    next.reserve(live.size());
    for (long idx : live) {
      if (idx == pi) continue;
      auto& row = rows[idx];
      auto it = std::lower_bound(row.begin(), row.end(), pcol,
                                 [](const auto& e, long c) { return e.first < c; });
      if (it == row.end() || it->first != pcol) {
        next.push_back(idx);
        continue;
      }
      // row -= (row[pcol] / pval) * pivot_row, merged sparsely.
      K f = it->second / pval;
      SparseRow<K> merged;
      merged.reserve(row.size() + rows[pi].size());
      std::size_t a = 0, b = 0;
      while (a < row.size() || b < rows[pi].size()) {
        if (b == rows[pi].size() || (a < row.size() && row[a].first < rows[pi][b].first)) {
          merged.push_back(row[a++]);
        } else if (a == row.size() || rows[pi][b].first < row[a].first) {
          merged.emplace_back(rows[pi][b].first, -(f * rows[pi][b].second));
          ++b;
        } else {
          K v = row[a].second - f * rows[pi][b].second;
          if (!FieldTraits<K>::is_zero(v)) merged.emplace_back(row[a].first, v);
          ++a;
          ++b;
        }
      }
      row = std::move(merged);
      if (!row.empty()) next.push_back(idx);
    }
    live = std::move(next);
    ++rank;
  }
  return rank;
}

/// Linear independence of a family of vectors, by exact rank.
template <class K>
bool vectors_independent(const std::vector<std::vector<K>>& vs) {
  if (vs.empty()) return true;
  DenseMatrix<K> M(static_cast<long>(vs.size()), static_cast<long>(vs[0].size()));
  for (long i = 0; i < M.rows(); ++i)
    for (long j = 0; j < M.cols(); ++j) M.at(i, j) = vs[i][j];
  return exact_rank(M) == M.rows();
}

}  // namespace schur_ample
