#pragma once

#include <gmpxx.h>

#include <json.hpp>
#include <span>
#include <string>
#include <vector>

#include "schur_ample/poly.hpp"
#include "schur_ample/scalar.hpp"

namespace schur_ample {

using json = nlohmann::json;

template <class K>
json scalar_to_json(const K& v) {
  return json{{"num", FieldTraits<K>::num_string(v)}, {"den", FieldTraits<K>::den_string(v)}};
}

template <class K>
json vector_to_json(std::span<const K> xs) {
  json arr = json::array();
  for (const K& x : xs) arr.push_back(scalar_to_json(x));
  return arr;
}

/// Canonical polynomial serialization: terms in graded-lex order, exact
/// coefficients as decimal strings.
template <class K>
json poly_to_json(const HomogPoly<K>& P) {
  json terms = json::array();
  for (const auto& [J, c] : P.terms()) {
    json t;
    t["exp"] = J;
    t["num"] = FieldTraits<K>::num_string(c);
    t["den"] = FieldTraits<K>::den_string(c);
    terms.push_back(t);
  }
  return json{{"degree", P.degree()}, {"terms", terms}};
}

/// "1.2345e17"-style approximation of a big integer, computed from its
/// decimal digits (no floating point involved).
std::string mpz_sci_string(const mpz_class& v, int digits = 6);

/// Number of decimal digits.
long mpz_digit_count(const mpz_class& v);

}  // namespace schur_ample
