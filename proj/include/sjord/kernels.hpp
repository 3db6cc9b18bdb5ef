#pragma once

// Dense square matrix product over an exact scalar type. The serial loop is
// the reference; the OpenMP version splits output rows across threads and
// must agree with it entry for entry.

#include <cstddef>
#include <span>

#include "sjord/scalars.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sjord::kernels {

/// Below this dimension the parallel kernel runs the serial loop.
inline constexpr std::size_t kParallelMinDim = 24;

template <class S>
void multiply_row(std::span<const S> a, std::span<const S> b, std::span<S> c, std::size_t n, std::size_t i) {
  for (std::size_t k = 0; k < n; ++k) {
    const S& aik = a[i * n + k];
    if (is_zero(aik)) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const S& bkj = b[k * n + j];
      if (is_zero(bkj)) continue;
      c[i * n + j] += aik * bkj;
    }
  }
}

/// c += a * b for n x n row-major operands; c must not alias a or b.
template <class S>
void matmul_serial(std::span<const S> a, std::span<const S> b, std::span<S> c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) multiply_row(a, b, c, n, i);
}

template <class S>
void matmul_parallel(std::span<const S> a, std::span<const S> b, std::span<S> c, std::size_t n) {
  if (n < kParallelMinDim) {
    matmul_serial(a, b, c, n);
    return;
  }
  const auto rows = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < rows; ++i) multiply_row(a, b, c, n, static_cast<std::size_t>(i));
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace sjord::kernels
