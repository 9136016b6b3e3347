// Compiled with -mavx2 -mfma; only reached after isa_available(Isa::Avx2).
#include <immintrin.h>

#include "dvp/trig_series.hpp"

namespace dvp::simd::detail {

namespace {

inline void store_lanes(__m256d v, double* dst) {
  if (dst) _mm256_storeu_pd(dst, v);
}

}  // namespace

void series_avx2(std::span<const double> coeffs, const double* lambda, const double* sigma,
                 const double* sine, std::size_t count, double* cos_out, double* sin_out) {
  const std::size_t K1 = coeffs.size();
  if (K1 == 0) {
    series_scalar(coeffs, lambda, sigma, sine, count, cos_out, sin_out);
    return;
  }
  const double* c = coeffs.data();
  const __m256d half = _mm256_set1_pd(0.5);
  std::size_t i = 0;

  // Two independent blocks per pass hide the latency of the serial recurrence.
  for (; i + 8 <= count; i += 8) {
    const __m256d lamA = _mm256_loadu_pd(lambda + i);
    const __m256d lamB = _mm256_loadu_pd(lambda + i + 4);
    const __m256d sgA = _mm256_loadu_pd(sigma + i);
    const __m256d sgB = _mm256_loadu_pd(sigma + i + 4);
    __m256d uA = _mm256_setzero_pd(), dA = _mm256_setzero_pd();
    __m256d uB = _mm256_setzero_pd(), dB = _mm256_setzero_pd();
    for (std::size_t k = K1 - 1; k >= 1; --k) {
      const __m256d ck = _mm256_set1_pd(c[k]);
      dA = _mm256_fmadd_pd(sgA, dA, _mm256_fmadd_pd(lamA, uA, ck));
      dB = _mm256_fmadd_pd(sgB, dB, _mm256_fmadd_pd(lamB, uB, ck));
      uA = _mm256_fmadd_pd(sgA, uA, dA);
      uB = _mm256_fmadd_pd(sgB, uB, dB);
    }
    const __m256d c0 = _mm256_set1_pd(c[0]);
    const __m256d d0A = _mm256_fmadd_pd(sgA, dA, _mm256_fmadd_pd(lamA, uA, c0));
    const __m256d d0B = _mm256_fmadd_pd(sgB, dB, _mm256_fmadd_pd(lamB, uB, c0));
    store_lanes(_mm256_fnmadd_pd(_mm256_mul_pd(half, lamA), uA, d0A), cos_out ? cos_out + i : nullptr);
    store_lanes(_mm256_fnmadd_pd(_mm256_mul_pd(half, lamB), uB, d0B),
                cos_out ? cos_out + i + 4 : nullptr);
    store_lanes(_mm256_mul_pd(uA, _mm256_loadu_pd(sine + i)), sin_out ? sin_out + i : nullptr);
    store_lanes(_mm256_mul_pd(uB, _mm256_loadu_pd(sine + i + 4)),
                sin_out ? sin_out + i + 4 : nullptr);
  }

  for (; i + 4 <= count; i += 4) {
    const __m256d lam = _mm256_loadu_pd(lambda + i);
    const __m256d sg = _mm256_loadu_pd(sigma + i);
    __m256d u = _mm256_setzero_pd(), d = _mm256_setzero_pd();
    for (std::size_t k = K1 - 1; k >= 1; --k) {
      d = _mm256_fmadd_pd(sg, d, _mm256_fmadd_pd(lam, u, _mm256_set1_pd(c[k])));
      u = _mm256_fmadd_pd(sg, u, d);
    }
    const __m256d d0 = _mm256_fmadd_pd(sg, d, _mm256_fmadd_pd(lam, u, _mm256_set1_pd(c[0])));
    store_lanes(_mm256_fnmadd_pd(_mm256_mul_pd(half, lam), u, d0), cos_out ? cos_out + i : nullptr);
    store_lanes(_mm256_mul_pd(u, _mm256_loadu_pd(sine + i)), sin_out ? sin_out + i : nullptr);
  }

  if (i < count) {
    series_scalar(coeffs, lambda + i, sigma + i, sine + i, count - i,
                  cos_out ? cos_out + i : nullptr, sin_out ? sin_out + i : nullptr);
  }
}

}  // namespace dvp::simd::detail
