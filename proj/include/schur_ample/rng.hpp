#pragma once

#include <cstdint>

namespace schur_ample {

/// Deterministic splittable generator (splitmix64 core).
///
/// Every random draw in the library flows from one of these, so a run is
/// reproduced bit-for-bit from its seed on any platform. Do not replace the
/// integer helpers with <random> distributions: their output is
/// implementation-defined and would break the byte-identical-output contract.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n). Modulo bias is irrelevant here (n is tiny against
  /// 2^64) and the result is platform-independent, which is what matters.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// Uniform in [lo, hi], inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Independent child stream; pure in the parent (does not advance it).
  /// Used to hand each parallel worker its own generator.
  SplitMix64 split(std::uint64_t stream) const {
    SplitMix64 child(state_ ^ (0x632be59bd9b4e019ULL * (stream + 1)));
    child.next();
    return child;
  }

 private:
  std::uint64_t state_;
};

}  // namespace schur_ample
