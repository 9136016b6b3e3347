#pragma once

// Generators and brute-force oracles shared by the unit tests. Nothing here
// calls into the series or exact-norm code paths.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "dvp/kernels.hpp"

namespace dvp::testing {

inline constexpr double kPi = std::numbers::pi;

// Values quoted as closed forms for the first two Lebesgue constants.
inline double lebesgue_L1() { return 1.0 / 3.0 + 2.0 * std::sqrt(3.0) / kPi; }
inline double lebesgue_L2() {
  return 0.2 + std::sqrt(10.0 - 2.0 * std::sqrt(5.0)) / (4.0 * kPi) * (1.0 + 3.0 * std::sqrt(5.0));
}

inline std::vector<std::pair<std::int64_t, std::int64_t>> coprime_pairs(std::int64_t max_s) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t s = 1; s <= max_s; ++s) {
    for (std::int64_t r = 0; r < s; ++r) {
      if (std::gcd(r, s) == 1) out.emplace_back(r, s);
    }
  }
  return out;
}

/// Uniformly random valid parameters with sN <= max_sN.
inline KernelParams random_params(std::mt19937_64& rng, std::int64_t max_sN) {
  for (;;) {
    std::uniform_int_distribution<std::int64_t> sd(1, max_sN);
    const std::int64_t s = sd(rng);
    std::uniform_int_distribution<std::int64_t> rd(0, s - 1);
    const std::int64_t r = rd(rng);
    if (std::gcd(r, s) != 1) continue;
    std::uniform_int_distribution<std::int64_t> nd(1, max_sN / s);
    return KernelParams::make(r, s, nd(rng));
  }
}

/// Direct evaluation of sum_{|j| < sN} v(j/N) e(jx) with libm cosines.
inline double naive_vp_sum(const KernelParams& p, double x) {
  long double acc = 1.0L;
  for (std::int64_t j = 1; j < p.sN(); ++j) {
    acc += 2.0L * coefficient(p, j) * std::cos(2.0L * std::numbers::pi_v<long double> * j * x);
  }
  return static_cast<double>(acc);
}

/// Periodic trapezoid rule with M points; exact for trig polynomials of degree < M.
template <class F>
double periodic_trapezoid(F&& f, int M) {
  long double acc = 0.0L;
  for (int i = 0; i < M; ++i) acc += f(static_cast<double>(i) / M);
  return static_cast<double>(acc / M);
}

/// hat(j) = (1/M) sum_m values[m] e(-jm/M)
inline std::complex<double> naive_dft(const std::vector<double>& values, std::int64_t j) {
  const auto M = static_cast<std::int64_t>(values.size());
  std::complex<long double> acc{};
  for (std::int64_t m = 0; m < M; ++m) {
    const long double ang = -2.0L * std::numbers::pi_v<long double> * static_cast<long double>((j * m) % M) / M;
    acc += static_cast<long double>(values[m]) * std::complex<long double>(std::cos(ang), std::sin(ang));
  }
  return {static_cast<double>(acc.real() / M), static_cast<double>(acc.imag() / M)};
}

}  // namespace dvp::testing
