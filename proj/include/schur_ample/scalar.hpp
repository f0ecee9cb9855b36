#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

#include "schur_ample/rng.hpp"

namespace schur_ample {

/// Exact rational scalar. All arithmetic is exact; equality is decidable.
using Rat = mpq_class;

/// Prime field F_p for a fixed prime p > 2^20.
///
/// The char-0 theory lives over Q; F_p is a probabilistic surrogate for fast
/// Monte-Carlo sweeps (rank can only drop under reduction, and a large prime
/// makes spurious drops improbable). Reports over F_p are labeled as such.
class Fp {
 public:
  static constexpr unsigned long kDefaultPrime = 2147483647UL;  // 2^31 - 1
  static constexpr unsigned long kMinPrime = 1UL << 20;

  Fp() : v_(0) {}
  Fp(long x) {  // NOLINT: implicit by design, mirrors integer literals
    long m = static_cast<long>(modulus());
    long r = x % m;
    if (r < 0) r += m;
    v_ = static_cast<unsigned long>(r);
  }

  static unsigned long modulus() { return mod_; }

  /// Install a new modulus. Rejects p <= 2^20 and composite p.
  static void set_modulus(unsigned long p) {
    if (p <= kMinPrime) throw std::invalid_argument("Fp: prime must exceed 2^20");
    mpz_class z(std::to_string(p));
    if (mpz_probab_prime_p(z.get_mpz_t(), 32) == 0)
      throw std::invalid_argument("Fp: modulus is not prime");
    mod_ = p;
  }

  unsigned long value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  friend Fp operator+(Fp a, Fp b) { return from_raw((a.v_ + b.v_) % mod_); }
  friend Fp operator-(Fp a, Fp b) { return from_raw((a.v_ + mod_ - b.v_) % mod_); }
  friend Fp operator*(Fp a, Fp b) {
    return from_raw(static_cast<unsigned long>(
        (static_cast<unsigned __int128>(a.v_) * b.v_) % mod_));
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const { return from_raw(v_ == 0 ? 0 : mod_ - v_); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("Fp: division by zero");
    return pow(mod_ - 2);  // Fermat: p is prime
  }

  Fp pow(unsigned long e) const {
    Fp base = *this, acc = from_raw(1);
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  static Fp from_raw(unsigned long v) {
    Fp r;
    r.v_ = v;
    return r;
  }

 private:
  unsigned long v_;
  inline static unsigned long mod_ = kDefaultPrime;
};

/// Per-field glue used by the templated modules: sampling, naming,
/// serialization primitives.
template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rat> {
  static const char* name() { return "Q"; }

  /// Random rational with numerator in [-height, height] and denominator in
  /// [1, height]. Height bounds keep exact arithmetic tractable.
  static Rat random(SplitMix64& rng, long height) {
    long num = rng.range(-height, height);
    long den = rng.range(1, height);
    Rat q(num, den);
    q.canonicalize();
    return q;
  }

  static Rat random_nonzero(SplitMix64& rng, long height) {
    for (;;) {
      Rat q = random(rng, height);
      if (q != 0) return q;
    }
  }

  static bool is_zero(const Rat& x) { return x == 0; }
  static std::string num_string(const Rat& x) { return x.get_num().get_str(); }
  static std::string den_string(const Rat& x) { return x.get_den().get_str(); }

  static Rat pow(const Rat& x, long e) {
    if (e < 0) throw std::invalid_argument("pow: negative exponent");
    Rat acc = 1, base = x;
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }
};

template <>
struct FieldTraits<Fp> {
  static const char* name() { return "Fp"; }

  static Fp random(SplitMix64& rng, long /*height*/) {
    return Fp::from_raw(rng.below(Fp::modulus()));
  }

  static Fp random_nonzero(SplitMix64& rng, long /*height*/) {
    return Fp::from_raw(1 + rng.below(Fp::modulus() - 1));
  }

  static bool is_zero(const Fp& x) { return x.is_zero(); }
  static std::string num_string(const Fp& x) { return std::to_string(x.value()); }
  static std::string den_string(const Fp&) { return "1"; }

  static Fp pow(const Fp& x, long e) {
    if (e < 0) throw std::invalid_argument("pow: negative exponent");
    return x.pow(static_cast<unsigned long>(e));
  }
};

}  // namespace schur_ample
