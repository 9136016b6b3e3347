#include "dvp/kernels.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "dvp/trig_series.hpp"

namespace dvp {

namespace {

// Keeps every frequency product and zero numerator well inside int64 and the
// series lengths at desk scale.
constexpr std::int64_t kMaxDegree = std::int64_t{1} << 24;

}  // namespace

KernelParams KernelParams::make(std::int64_t r, std::int64_t s, std::int64_t N) {
  using R = ParameterError::Reason;
  if (r < 0) {
    throw ParameterError(R::NegativeR, "r must be non-negative (got r = " + std::to_string(r) + ")");
  }
  if (s <= r) {
    throw ParameterError(R::SNotGreaterThanR, "s must exceed r (got r = " + std::to_string(r) +
                                                  ", s = " + std::to_string(s) + ")");
  }
  if (std::gcd(r, s) != 1) {
    throw ParameterError(R::NotCoprime, "r and s must be coprime (gcd(" + std::to_string(r) + ", " +
                                            std::to_string(s) + ") = " +
                                            std::to_string(std::gcd(r, s)) + ")");
  }
  if (N <= 0) {
    throw ParameterError(R::NonPositiveN, "N must be at least 1 (got N = " + std::to_string(N) + ")");
  }
  if (s > kMaxDegree || N > kMaxDegree / s) {
    throw ParameterError(R::TooLarge, "s*N exceeds the supported degree " + std::to_string(kMaxDegree));
  }
  return KernelParams(r, s, N);
}

double sin_pi(double t) {
  if (!std::isfinite(t)) return std::numeric_limits<double>::quiet_NaN();
  double r = std::fmod(t, 2.0);  // exact, in (-2, 2)
  if (r > 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;
  // r in [-1, 1]; fold onto [-1/2, 1/2] with sin(pi r) = sin(pi (+-1 - r)).
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  if (r == 0.0) return 0.0;
  return std::sin(std::numbers::pi * r);
}

double cos_pi(double t) { return sin_pi(0.5 - std::fmod(t, 2.0)); }

double reduce_periodic(double x) { return x - std::nearbyint(x); }

double trapezoid_multiplier(double n, double p, double u) {
  const double a = std::abs(u);
  if (a <= n) return 1.0;  // knot |u| = n resolved on this branch
  if (a >= n + p) return 0.0;
  return (n + p - a) / p;
}

double profile_value(const KernelParams& params, double u) {
  return trapezoid_multiplier(static_cast<double>(params.r()),
                              static_cast<double>(params.s() - params.r()), u);
}

double coefficient(const KernelParams& params, std::int64_t j) {
  const std::int64_t a = j < 0 ? -j : j;
  if (a <= params.n()) return 1.0;
  if (a >= params.sN()) return 0.0;
  return static_cast<double>(params.sN() - a) / static_cast<double>(params.p());
}

CoefficientProfile::CoefficientProfile(const KernelParams& params) : params_(params) {
  cosine_.resize(static_cast<std::size_t>(params.sN()));
  cosine_[0] = 1.0;
  for (std::int64_t j = 1; j < params.sN(); ++j) cosine_[j] = 2.0 * coefficient(params, j);
}

double CoefficientProfile::sample(std::int64_t j) const { return coefficient(params_, j); }

namespace {

double cosine_sum(std::span<const double> c, double x) {
  return simd::cos_sin_series(c, x).cos_sum;
}

// 1 + 2 sum_{j=1}^{m-1} (1 - j/m) cos(2 pi j x)
double delta_series(std::int64_t m, double x) {
  std::vector<double> c(static_cast<std::size_t>(m));
  c[0] = 1.0;
  for (std::int64_t j = 1; j < m; ++j) {
    c[j] = 2.0 * (1.0 - static_cast<double>(j) / static_cast<double>(m));
  }
  return cosine_sum(c, x);
}

}  // namespace

double eval_vp_series(const KernelParams& params, double x) {
  return cosine_sum(CoefficientProfile(params).cosine_series(), x);
}

void eval_vp_series(const KernelParams& params, std::span<const double> x, std::span<double> out) {
  CoefficientProfile profile(params);
  simd::cos_sin_series(profile.cosine_series(), x, out, {});
}

double eval_vp(const KernelParams& params, double x) {
  const double y = reduce_periodic(x);
  if (y == 0.0) return static_cast<double>(params.sum_freq());
  const double sy = sin_pi(y);
  if (std::abs(sy) < kSingularityThreshold) return eval_vp_series(params, y);
  const double num = sin_pi(static_cast<double>(params.sum_freq()) * y) *
                     sin_pi(static_cast<double>(params.diff_freq()) * y);
  return num / (static_cast<double>(params.diff_freq()) * sy * sy);
}

double eval_vp_difference_form(const KernelParams& params, double x) {
  const double y = reduce_periodic(x);
  const double sy = sin_pi(y);
  if (std::abs(sy) < kSingularityThreshold) return eval_vp_series(params, y);
  const double a = sin_pi(static_cast<double>(params.sN()) * y);
  const double b = sin_pi(static_cast<double>(params.n()) * y);
  return (a * a - b * b) / (static_cast<double>(params.p()) * sy * sy);
}

KernelValue eval_vp_point(const KernelParams& params, double x) {
  double xr = x - std::floor(x);
  if (xr >= 1.0) xr = 0.0;
  return {xr, eval_vp(params, x)};
}

double eval_delta(std::int64_t m, double x) {
  if (m < 1) throw std::invalid_argument("eval_delta: m must be positive");
  const double y = reduce_periodic(x);
  if (y == 0.0) return static_cast<double>(m);
  const double sy = sin_pi(y);
  if (std::abs(sy) < kSingularityThreshold) return delta_series(m, y);
  const double q = sin_pi(static_cast<double>(m) * y) / sy;
  return q * q / static_cast<double>(m);
}

double eval_fejer(std::int64_t n, double x) {
  if (n < 0) throw std::invalid_argument("eval_fejer: n must be non-negative");
  return eval_delta(n + 1, x);
}

double eval_dirichlet(std::int64_t n, double x) {
  if (n < 0) throw std::invalid_argument("eval_dirichlet: n must be non-negative");
  const double y = reduce_periodic(x);
  if (y == 0.0) return static_cast<double>(2 * n + 1);
  const double sy = sin_pi(y);
  if (std::abs(sy) < kSingularityThreshold) {
    std::vector<double> c(static_cast<std::size_t>(n + 1), 2.0);
    c[0] = 1.0;
    return cosine_sum(c, y);
  }
  return sin_pi(static_cast<double>(2 * n + 1) * y) / sy;
}

double eval_delayed_kernel(std::int64_t n, std::int64_t p, double x) {
  if (n < 0 || p < 1) throw std::invalid_argument("eval_delayed_kernel: need n >= 0, p >= 1");
  const double np = static_cast<double>(n + p);
  double value = np * eval_delta(n + p, x);
  if (n > 0) value -= static_cast<double>(n) * eval_delta(n, x);
  return value / static_cast<double>(p);
}

}  // namespace dvp
