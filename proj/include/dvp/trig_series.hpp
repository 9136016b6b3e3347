#pragma once

// Batched evaluation of finite trigonometric series
//
//   C(x) = sum_{k=0}^{K} c_k cos(2 pi k x),   S(x) = sum_{k=1}^{K} c_k sin(2 pi k x)
//
// at many points x. Both sums come out of one backward recurrence (Clenshaw
// with Reinsch's modification, stable at x near 0 and 1/2). The recurrence is
// the inner loop of the antiderivative W_N, the series form of the kernels and
// the Fourier summation engine.
//
// A scalar reference implementation is always built. AVX2 (x86-64) and NEON
// (AArch64) variants vectorize across points; the variant is chosen at run time
// from the CPU and may be forced with DVP_SIMD=scalar|avx2|neon.

#include <span>
#include <string_view>
#include <vector>

namespace dvp::simd {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa) noexcept;

/// True when the variant was compiled in and the CPU can run it.
bool isa_available(Isa isa) noexcept;

/// Best available variant for this CPU.
Isa detected_isa() noexcept;

/// Variant used by default: DVP_SIMD override if it names an available ISA,
/// detected_isa() otherwise.
Isa active_isa() noexcept;

/// Per-point recurrence constants, computed with exactly reduced arguments.
///   sigma  = +1 if cos(2 pi x) >= 0, else -1
///   lambda = 2 cos(2 pi x) - 2 sigma
///   sine   = sin(2 pi x)
struct PointConstants {
  std::vector<double> lambda;
  std::vector<double> sigma;
  std::vector<double> sine;
};

PointConstants point_constants(std::span<const double> x);

/// Evaluates C and S at every x. cos_out / sin_out may be empty to skip that
/// output; otherwise they must have x.size() elements.
void cos_sin_series(std::span<const double> coeffs, std::span<const double> x,
                    std::span<double> cos_out, std::span<double> sin_out,
                    Isa isa = active_isa());

/// Same computation on precomputed point constants.
void cos_sin_series(std::span<const double> coeffs, const PointConstants& pc,
                    std::span<double> cos_out, std::span<double> sin_out,
                    Isa isa = active_isa());

/// Single-point convenience wrapper (scalar path).
struct CosSin {
  double cos_sum;
  double sin_sum;
};
CosSin cos_sin_series(std::span<const double> coeffs, double x);

namespace detail {

// Signature shared by every variant. All spans index points [0, count).
using SeriesFn = void (*)(std::span<const double> coeffs, const double* lambda,
                          const double* sigma, const double* sine, std::size_t count,
                          double* cos_out, double* sin_out);

void series_scalar(std::span<const double> coeffs, const double* lambda, const double* sigma,
                   const double* sine, std::size_t count, double* cos_out, double* sin_out);
#if defined(DVP_HAVE_AVX2)
void series_avx2(std::span<const double> coeffs, const double* lambda, const double* sigma,
                 const double* sine, std::size_t count, double* cos_out, double* sin_out);
#endif
#if defined(DVP_HAVE_NEON)
void series_neon(std::span<const double> coeffs, const double* lambda, const double* sigma,
                 const double* sine, std::size_t count, double* cos_out, double* sin_out);
#endif

}  // namespace detail
}  // namespace dvp::simd
