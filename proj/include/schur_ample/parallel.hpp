#pragma once

#include <cstddef>
#include <vector>

namespace schur_ample {

/// Execution lane for the sampling sweeps. The serial lane is the reference
/// implementation; the OpenMP lane must produce byte-identical results, which
/// holds because every index owns its split RNG and writes only its own slot.
enum class ExecMode { serial, openmp };

template <class R, class Fn>
std::vector<R> map_indexed(std::size_t n, ExecMode mode, Fn&& fn) {
  std::vector<R> out(n);
  if (mode == ExecMode::openmp) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(n); ++i)
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
  }
  return out;
}

}  // namespace schur_ample
