#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dvp/errors.hpp"

namespace dvp {

/// Identifies the kernel V_{rN,sN} = K_{n,p} with n = rN, p = (s-r)N.
///
/// Always valid once constructed: 0 <= r < s, gcd(r, s) = 1, N >= 1.
/// r = 0 forces s = 1 and gives the Fejer family Delta_N.
class KernelParams {
 public:
  /// Throws ParameterError with a distinct reason per violated constraint.
  static KernelParams make(std::int64_t r, std::int64_t s, std::int64_t N);

  std::int64_t r() const noexcept { return r_; }
  std::int64_t s() const noexcept { return s_; }
  std::int64_t N() const noexcept { return N_; }

  /// Delay parameter n = rN of the classical (n, p) notation.
  std::int64_t n() const noexcept { return r_ * N_; }
  /// Window length p = (s - r)N.
  std::int64_t p() const noexcept { return (s_ - r_) * N_; }
  /// Trigonometric degree of the kernel is sN - 1.
  std::int64_t sN() const noexcept { return s_ * N_; }
  std::int64_t sum_freq() const noexcept { return (s_ + r_) * N_; }   // (s+r)N
  std::int64_t diff_freq() const noexcept { return (s_ - r_) * N_; }  // (s-r)N

  /// Upper bound (s+r)/(s-r) for the L1 norm.
  double norm_upper_bound() const noexcept {
    return static_cast<double>(s_ + r_) / static_cast<double>(s_ - r_);
  }

  /// Same (r, s) with a different family index.
  KernelParams with_N(std::int64_t N) const { return make(r_, s_, N); }

  friend bool operator==(const KernelParams&, const KernelParams&) = default;

 private:
  KernelParams(std::int64_t r, std::int64_t s, std::int64_t N) : r_(r), s_(s), N_(N) {}

  std::int64_t r_;
  std::int64_t s_;
  std::int64_t N_;
};

inline KernelParams make_params(std::int64_t r, std::int64_t s, std::int64_t N) {
  return KernelParams::make(r, s, N);
}

struct KernelValue {
  double x;  // reduced into [0, 1)
  double value;
};

// sin(pi t) and cos(pi t) with exact argument reduction; exact zeros at integers
// (resp. half-integers).
double sin_pi(double t);
double cos_pi(double t);

/// Signed distance from x to the nearest integer, in [-1/2, 1/2].
double reduce_periodic(double x);

/// The trapezoid multiplier v_{n,p}(u): 1 on |u| <= n, linear down to 0 at
/// |u| = n + p. p must be positive.
double trapezoid_multiplier(double n, double p, double u);

/// v_{r,s-r}(u) for the continuous profile (N = 1 scale).
double profile_value(const KernelParams& params, double u);

/// Fourier coefficient v_{r,s-r}(j/N) of V_{rN,sN}; zero for |j| >= sN.
double coefficient(const KernelParams& params, std::int64_t j);

/// Sampled Fourier multiplier of one kernel.
class CoefficientProfile {
 public:
  explicit CoefficientProfile(const KernelParams& params);

  const KernelParams& params() const noexcept { return params_; }
  double sample(std::int64_t j) const;

  /// c_0 = 1 and c_j = 2 sample(j) for 1 <= j < sN, so that
  /// V(x) = sum_j c_j cos(2 pi j x).
  std::span<const double> cosine_series() const noexcept { return cosine_; }

 private:
  KernelParams params_;
  std::vector<double> cosine_;
};

/// V_{rN,sN}(x) from the product form; near integer x the trigonometric sum
/// is used instead, so the removable singularity has value (s+r)N.
double eval_vp(const KernelParams& params, double x);

/// Difference-of-squares form (sin^2(pi sN x) - sin^2(pi rN x)) / ((s-r)N sin^2(pi x)).
double eval_vp_difference_form(const KernelParams& params, double x);

/// Trigonometric-sum form sum_{|j|<sN} v(j/N) e(jx).
double eval_vp_series(const KernelParams& params, double x);
void eval_vp_series(const KernelParams& params, std::span<const double> x, std::span<double> out);

KernelValue eval_vp_point(const KernelParams& params, double x);

/// Fejer kernel K_n = Delta_{n+1}: (1/(n+1)) (sin pi(n+1)x / sin pi x)^2.
double eval_fejer(std::int64_t n, double x);

/// Delta_m(x) = (1/m) (sin pi m x / sin pi x)^2, m >= 1.
double eval_delta(std::int64_t m, double x);

/// Dirichlet kernel D_n(x) = sin pi(2n+1)x / sin pi x.
double eval_dirichlet(std::int64_t n, double x);

/// Classical parameterization K_{n,p} = ((n+p) Delta_{n+p} - n Delta_n) / p.
double eval_delayed_kernel(std::int64_t n, std::int64_t p, double x);

/// Below this |sin pi x| the quotient forms switch to the trigonometric sum.
inline constexpr double kSingularityThreshold = 1e-6;

}  // namespace dvp
