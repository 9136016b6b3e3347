// AArch64 only; NEON double-precision lanes are part of the base ISA there.
#include <arm_neon.h>

#include "dvp/trig_series.hpp"

namespace dvp::simd::detail {

void series_neon(std::span<const double> coeffs, const double* lambda, const double* sigma,
                 const double* sine, std::size_t count, double* cos_out, double* sin_out) {
  const std::size_t K1 = coeffs.size();
  if (K1 == 0) {
    series_scalar(coeffs, lambda, sigma, sine, count, cos_out, sin_out);
    return;
  }
  const double* c = coeffs.data();
  std::size_t i = 0;
  for (; i + 2 <= count; i += 2) {
    const float64x2_t lam = vld1q_f64(lambda + i);
    const float64x2_t sg = vld1q_f64(sigma + i);
    float64x2_t u = vdupq_n_f64(0.0);
    float64x2_t d = vdupq_n_f64(0.0);
    for (std::size_t k = K1 - 1; k >= 1; --k) {
      d = vfmaq_f64(vfmaq_f64(vdupq_n_f64(c[k]), lam, u), sg, d);
      u = vfmaq_f64(d, sg, u);
    }
    const float64x2_t d0 = vfmaq_f64(vfmaq_f64(vdupq_n_f64(c[0]), lam, u), sg, d);
    if (cos_out) vst1q_f64(cos_out + i, vfmsq_f64(d0, vmulq_n_f64(lam, 0.5), u));
    if (sin_out) vst1q_f64(sin_out + i, vmulq_f64(u, vld1q_f64(sine + i)));
  }
  if (i < count) {
    series_scalar(coeffs, lambda + i, sigma + i, sine + i, count - i,
                  cos_out ? cos_out + i : nullptr, sin_out ? sin_out + i : nullptr);
  }
}

}  // namespace dvp::simd::detail
