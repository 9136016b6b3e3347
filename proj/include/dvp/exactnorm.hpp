#pragma once

// Exact L1 norms of V_{rN,sN}.
//
// Between consecutive simple zeros V keeps one sign, so with the primitive
// W_N(x) = x + sum_{n != 0} v(n/N) e(nx) / (2 pi i n) the norm is a signed sum
// of W_N over the zeros. The sign attached to each zero is the (negated) sign
// of V' there, which depends on its index only through the periodic sequences
// eps(a) and del(b). Expanding W_N and the two sequences in Fourier series
// removes N altogether and yields a closed form in r and s.

#include <complex>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "dvp/kernels.hpp"
#include "dvp/zeros.hpp"

namespace dvp {

enum class NormMethod { ClosedForm, PiecewiseExact, Quadrature };

std::string_view method_name(NormMethod method) noexcept;

struct NormReport {
  double value = 0.0;
  NormMethod method = NormMethod::ClosedForm;
  double imag_residual = 0.0;  // closed form only
  double area_plus = 0.0;      // (1 + value) / 2
  double area_minus = 0.0;     // (value - 1) / 2

  static NormReport make(double value, NormMethod method, double imag_residual = 0.0);
};

/// sgn(sin(pi num / den)) from the integer residue; exact.
int sign_of_sin_pi_fraction(std::int64_t num, std::int64_t den);

/// eps(a) = sgn sin(2 pi a r / (s+r)), any integer a.
int epsilon_sign(std::int64_t r, std::int64_t s, std::int64_t a);
/// del(b) = -sgn sin(2 pi b r / (s-r)), any integer b.
int delta_sign(std::int64_t r, std::int64_t s, std::int64_t b);

/// One period of eps and del with their discrete Fourier coefficients, normalized
/// so that eps(a) = sum_{k=1}^{s+r} eps_hat(k) e(ak/(s+r)) for all integers a.
class SignSequences {
 public:
  SignSequences(std::int64_t r, std::int64_t s);

  std::int64_t r() const noexcept { return r_; }
  std::int64_t s() const noexcept { return s_; }
  std::int64_t eps_period() const noexcept { return s_ + r_; }
  std::int64_t del_period() const noexcept { return s_ - r_; }

  /// Periodic extension to every integer.
  int eps(std::int64_t a) const noexcept;
  int del(std::int64_t b) const noexcept;
  /// k in 1..period (other k are reduced mod the period).
  std::complex<double> eps_hat(std::int64_t k) const noexcept;
  std::complex<double> del_hat(std::int64_t k) const noexcept;

  /// Inverse transforms sum_k hat(k) e(ak/P).
  std::complex<double> eps_synthesis(std::int64_t a) const;
  std::complex<double> del_synthesis(std::int64_t b) const;

  std::span<const int> eps_values() const noexcept { return eps_; }  // a = 1..s+r
  std::span<const int> del_values() const noexcept { return del_; }  // b = 1..s-r

 private:
  std::int64_t r_;
  std::int64_t s_;
  std::vector<int> eps_;
  std::vector<int> del_;
  std::vector<std::complex<double>> eps_hat_;
  std::vector<std::complex<double>> del_hat_;
};

SignSequences sign_sequences(const KernelParams& params);

/// The primitive W_N(x) = x + sum_{n=1}^{sN-1} v(n/N) sin(2 pi n x) / (pi n).
class Antiderivative {
 public:
  explicit Antiderivative(const KernelParams& params);

  const KernelParams& params() const noexcept { return params_; }
  double operator()(double x) const;
  void eval(std::span<const double> x, std::span<double> out) const;
  /// X_N(x) = W_N(x) - x, the periodic part.
  double periodic_part(double x) const;

 private:
  KernelParams params_;
  std::vector<double> sine_coeffs_;
};

/// -eps(a) / -del(b) for simple zeros, 0 for double zeros. Throws
/// std::invalid_argument if the entry is not a zero of this kernel.
int derivative_sign_at_zero(const KernelParams& params, const Zero& zero);

/// Norm as the signed sum of W_N over all zero indices a = 1..(s+r)N, b = 1..(s-r)N.
NormReport norm_piecewise_exact(const KernelParams& params);

/// The four pieces of the N-free closed form.
struct ClosedFormTerms {
  double eps_linear = 0.0;                // (2/(s+r)) sum eps(a) a
  double del_linear = 0.0;                // (2/(s-r)) sum del(b) b
  std::complex<double> eps_spectral{};    // (s+r) sum_k eps_hat(k) sum_m v(u)/(pi i u)
  std::complex<double> del_spectral{};    // (s-r) sum_k del_hat(k) sum_m v(u)/(pi i u)

  std::complex<double> total() const noexcept {
    return 1.0 + eps_linear + del_linear + eps_spectral + del_spectral;
  }
};

ClosedFormTerms closed_form_terms(std::int64_t r, std::int64_t s);

/// Closed-form norm; the same for every N. Throws ParameterError on invalid
/// (r, s) and ConsistencyError if the imaginary residual exceeds 1e-8.
NormReport norm_closed_form(std::int64_t r, std::int64_t s);

/// Contribution of the linear part of W_N summed over the full index range
/// a = 1..(s+r)N, b = 1..(s-r)N. Equals closed_form_terms().eps_linear + del_linear.
double linear_term_full_range(const KernelParams& params);

/// Positive and negative areas between the graph of V and the axis on [0, 1],
/// integrated piece by piece between consecutive zeros.
struct AreaSplit {
  double plus = 0.0;
  double minus = 0.0;
};

AreaSplit area_split(const KernelParams& params);

struct DecayReport {
  double window_lo = 0.0;
  double window_hi = 0.0;
  std::size_t points = 0;
  double max_abs_value = 0.0;
  double worst_x = 0.0;
  double worst_ratio = 0.0;  // max |V| * N^(1/3) / 4

  bool within_bound() const noexcept { return worst_ratio <= 1.0; }
};

/// Samples |V| on a uniform grid over [N^(-1/3), 1 - N^(-1/3)] and reports the
/// worst ratio against the 4 / N^(1/3) envelope. Requires N >= 8 so that the
/// window is non-empty.
DecayReport decay_bound_check(const KernelParams& params, std::size_t grid_points);

}  // namespace dvp
