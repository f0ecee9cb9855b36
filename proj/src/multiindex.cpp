#include "schur_ample/multiindex.hpp"

#include <stdexcept>

namespace schur_ample {

long mi_length(const MultiIndex& J) {
  long s = 0;
  for (int j : J) s += j;
  return s;
}

std::vector<int> mi_support(const MultiIndex& J) {
  std::vector<int> sup;
  for (std::size_t i = 0; i < J.size(); ++i)
    if (J[i] != 0) sup.push_back(static_cast<int>(i));
  return sup;
}

std::vector<MultiIndex> enumerate_multiindices(int nvars, long degree) {
  if (nvars < 1 || degree < 0) throw std::invalid_argument("enumerate_multiindices: bad arguments");
  std::vector<MultiIndex> out;
  MultiIndex J(nvars, 0);
  J[0] = static_cast<int>(degree);
  for (;;) {
    out.push_back(J);
    // Next composition in descending lex order: find the rightmost position
    // before the last with a nonzero entry, decrement it, and move everything
    // to its right into the slot just after it.
    int pos = -1;
    for (int i = nvars - 2; i >= 0; --i)
      if (J[i] > 0) {
        pos = i;
        break;
      }
    if (pos < 0) break;
    long tail = J[nvars - 1];
    J[nvars - 1] = 0;
    --J[pos];
    J[pos + 1] = static_cast<int>(tail + 1);
    // entries right of pos+1 are already zero
  }
  return out;
}

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class n_delta(long N, long delta) {
  if (N < 1 || delta < 0) throw std::invalid_argument("n_delta: need N >= 1, delta >= 0");
  return binomial(N + delta, N);
}

long n_delta_long(long N, long delta) {
  mpz_class v = n_delta(N, delta);
  if (!v.fits_slong_p()) throw std::overflow_error("n_delta: does not fit a long");
  return v.get_si();
}

}  // namespace schur_ample
