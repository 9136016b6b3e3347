#include "dvp/trig_series.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "dvp/kernels.hpp"

namespace dvp::simd {

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(DVP_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(DVP_HAVE_NEON)
      return true;  // mandatory on AArch64
#else
      return false;
#endif
  }
  return false;
}

Isa detected_isa() noexcept {
  if (isa_available(Isa::Avx2)) return Isa::Avx2;
  if (isa_available(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

Isa active_isa() noexcept {
  static const Isa chosen = [] {
    if (const char* env = std::getenv("DVP_SIMD")) {
      const std::string want(env);
      for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
        if (want == isa_name(isa) && isa_available(isa)) return isa;
      }
    }
    return detected_isa();
  }();
  return chosen;
}

PointConstants point_constants(std::span<const double> x) {
  PointConstants pc;
  pc.lambda.resize(x.size());
  pc.sigma.resize(x.size());
  pc.sine.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double t = reduce_periodic(x[i]);
    const double sh = sin_pi(t);  // sin(theta/2)
    const double ch = cos_pi(t);  // cos(theta/2)
    const double c = cos_pi(2 * t);
    if (c >= 0) {
      pc.sigma[i] = 1.0;
      pc.lambda[i] = -4.0 * sh * sh;
    } else {
      pc.sigma[i] = -1.0;
      pc.lambda[i] = 4.0 * ch * ch;
    }
    pc.sine[i] = sin_pi(2 * t);
  }
  return pc;
}

namespace detail {

void series_scalar(std::span<const double> coeffs, const double* lambda, const double* sigma,
                   const double* sine, std::size_t count, double* cos_out, double* sin_out) {
  const std::size_t K1 = coeffs.size();
  for (std::size_t i = 0; i < count; ++i) {
    if (K1 == 0) {
      if (cos_out) cos_out[i] = 0.0;
      if (sin_out) sin_out[i] = 0.0;
      continue;
    }
    const double lam = lambda[i];
    const double sg = sigma[i];
    double u = 0.0;
    double d = 0.0;
    for (std::size_t k = K1 - 1; k >= 1; --k) {
      d = coeffs[k] + lam * u + sg * d;
      u = sg * u + d;
    }
    const double d0 = coeffs[0] + lam * u + sg * d;
    if (cos_out) cos_out[i] = d0 - 0.5 * lam * u;
    if (sin_out) sin_out[i] = u * sine[i];
  }
}

}  // namespace detail

namespace {

detail::SeriesFn series_for(Isa isa) {
  if (!isa_available(isa)) {
    throw std::invalid_argument("trig series variant not available: " + std::string(isa_name(isa)));
  }
  switch (isa) {
#if defined(DVP_HAVE_AVX2)
    case Isa::Avx2: return &detail::series_avx2;
#endif
#if defined(DVP_HAVE_NEON)
    case Isa::Neon: return &detail::series_neon;
#endif
    default: return &detail::series_scalar;
  }
}

void check_outputs(std::size_t n, std::span<double> cos_out, std::span<double> sin_out) {
  if ((!cos_out.empty() && cos_out.size() != n) || (!sin_out.empty() && sin_out.size() != n)) {
    throw std::invalid_argument("cos_sin_series: output size mismatch");
  }
}

}  // namespace

void cos_sin_series(std::span<const double> coeffs, const PointConstants& pc,
                    std::span<double> cos_out, std::span<double> sin_out, Isa isa) {
  const std::size_t n = pc.lambda.size();
  check_outputs(n, cos_out, sin_out);
  series_for(isa)(coeffs, pc.lambda.data(), pc.sigma.data(), pc.sine.data(), n,
                  cos_out.empty() ? nullptr : cos_out.data(),
                  sin_out.empty() ? nullptr : sin_out.data());
}

void cos_sin_series(std::span<const double> coeffs, std::span<const double> x,
                    std::span<double> cos_out, std::span<double> sin_out, Isa isa) {
  check_outputs(x.size(), cos_out, sin_out);
  cos_sin_series(coeffs, point_constants(x), cos_out, sin_out, isa);
}

CosSin cos_sin_series(std::span<const double> coeffs, double x) {
  const double xs[1] = {x};
  const PointConstants pc = point_constants(xs);
  CosSin out{};
  detail::series_scalar(coeffs, pc.lambda.data(), pc.sigma.data(), pc.sine.data(), 1,
                        &out.cos_sum, &out.sin_sum);
  return out;
}

}  // namespace dvp::simd
