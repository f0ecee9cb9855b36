#pragma once

#include <gmpxx.h>

#include <vector>

namespace schur_ample {

/// Exponent tuple J = (j₀, …, j_N) of a monomial ξ^J.
using MultiIndex = std::vector<int>;

/// |J| = Σ j_i.
long mi_length(const MultiIndex& J);

/// Support [J] = { i : j_i != 0 }.
std::vector<int> mi_support(const MultiIndex& J);

/// All J in N^{nvars} with |J| = degree, in descending lexicographic order
/// (graded-lex: the common degree is fixed). This is the canonical column
/// and serialization order everywhere in the library.
std::vector<MultiIndex> enumerate_multiindices(int nvars, long degree);

mpz_class binomial(long n, long k);

/// N_δ = dim H⁰(P^N, O(δ)) = C(N+δ, N), the number of degree-δ monomials in
/// N+1 variables.
mpz_class n_delta(long N, long delta);

/// N_δ as a machine integer; throws if it does not fit.
long n_delta_long(long N, long delta);

}  // namespace schur_ample
