#include "dvp/exactnorm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dvp/trig_series.hpp"

namespace dvp {

namespace {

using cplx = std::complex<double>;

constexpr double kPi = std::numbers::pi;
constexpr double kMaxImagResidual = 1e-8;

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// e(t) = exp(2 pi i t) for t = num/den, with exactly reduced argument.
cplx unit_root(std::int64_t num, std::int64_t den) {
  const std::int64_t k = floor_mod(num, den);
  const double t = 2.0 * static_cast<double>(k) / static_cast<double>(den);
  return {cos_pi(t), sin_pi(t)};
}

std::vector<cplx> inverse_dft(std::span<const int> values) {
  // hat(k) = (1/P) sum_{a=1}^{P} values(a) e(-ak/P), k = 1..P
  const auto P = static_cast<std::int64_t>(values.size());
  std::vector<cplx> hat(values.size());
  for (std::int64_t k = 1; k <= P; ++k) {
    cplx acc{};
    for (std::int64_t a = 1; a <= P; ++a) {
      if (values[a - 1] != 0) acc += static_cast<double>(values[a - 1]) * unit_root(-a * k, P);
    }
    hat[k - 1] = acc / static_cast<double>(P);
  }
  return hat;
}

cplx synthesis(std::span<const cplx> hat, std::int64_t a) {
  const auto P = static_cast<std::int64_t>(hat.size());
  cplx acc{};
  for (std::int64_t k = 1; k <= P; ++k) acc += hat[k - 1] * unit_root(a * k, P);
  return acc;
}

// sum over m of v(u) / (pi i u), u = -k + m * period, u != 0, with m restricted to
// [m_lo, m_hi].
cplx spectral_inner(const KernelParams& unit, std::int64_t k, std::int64_t period, std::int64_t m_lo,
                    std::int64_t m_hi) {
  cplx acc{};
  for (std::int64_t m = m_lo; m <= m_hi; ++m) {
    const std::int64_t u = -k + m * period;
    if (u == 0) continue;  // the excluded term period*m == k
    const double v = profile_value(unit, static_cast<double>(u));
    if (v == 0.0) continue;
    acc += v / cplx(0.0, kPi * static_cast<double>(u));
  }
  return acc;
}

}  // namespace

std::string_view method_name(NormMethod method) noexcept {
  switch (method) {
    case NormMethod::ClosedForm: return "closed-form";
    case NormMethod::PiecewiseExact: return "piecewise-exact";
    case NormMethod::Quadrature: return "quadrature";
  }
  return "?";
}

NormReport NormReport::make(double value, NormMethod method, double imag_residual) {
  NormReport rep;
  rep.value = value;
  rep.method = method;
  rep.imag_residual = imag_residual;
  rep.area_plus = 0.5 * (1.0 + value);
  rep.area_minus = 0.5 * (value - 1.0);
  return rep;
}

int sign_of_sin_pi_fraction(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw std::invalid_argument("sign_of_sin_pi_fraction: den must be positive");
  // sin(pi num/den) has period 2 den in num; positive on (0, den), negative on (den, 2 den).
  const std::int64_t res = floor_mod(num, 2 * den);
  if (res == 0 || res == den) return 0;
  return res < den ? 1 : -1;
}

int epsilon_sign(std::int64_t r, std::int64_t s, std::int64_t a) {
  const std::int64_t P = s + r;
  return sign_of_sin_pi_fraction(2 * floor_mod(a, P) * r, P);
}

int delta_sign(std::int64_t r, std::int64_t s, std::int64_t b) {
  const std::int64_t Q = s - r;
  return -sign_of_sin_pi_fraction(2 * floor_mod(b, Q) * r, Q);
}

SignSequences::SignSequences(std::int64_t r, std::int64_t s) : r_(r), s_(s) {
  (void)KernelParams::make(r, s, 1);
  eps_.resize(static_cast<std::size_t>(s + r));
  for (std::int64_t a = 1; a <= s + r; ++a) eps_[a - 1] = epsilon_sign(r, s, a);
  del_.resize(static_cast<std::size_t>(s - r));
  for (std::int64_t b = 1; b <= s - r; ++b) del_[b - 1] = delta_sign(r, s, b);
  eps_hat_ = inverse_dft(eps_);
  del_hat_ = inverse_dft(del_);
}

int SignSequences::eps(std::int64_t a) const noexcept {
  return eps_[static_cast<std::size_t>(floor_mod(a - 1, eps_period()))];
}

int SignSequences::del(std::int64_t b) const noexcept {
  return del_[static_cast<std::size_t>(floor_mod(b - 1, del_period()))];
}

std::complex<double> SignSequences::eps_hat(std::int64_t k) const noexcept {
  return eps_hat_[static_cast<std::size_t>(floor_mod(k - 1, eps_period()))];
}

std::complex<double> SignSequences::del_hat(std::int64_t k) const noexcept {
  return del_hat_[static_cast<std::size_t>(floor_mod(k - 1, del_period()))];
}

std::complex<double> SignSequences::eps_synthesis(std::int64_t a) const {
  return synthesis(eps_hat_, a);
}

std::complex<double> SignSequences::del_synthesis(std::int64_t b) const {
  return synthesis(del_hat_, b);
}

SignSequences sign_sequences(const KernelParams& params) {
  return SignSequences(params.r(), params.s());
}

Antiderivative::Antiderivative(const KernelParams& params) : params_(params) {
  sine_coeffs_.assign(static_cast<std::size_t>(params.sN()), 0.0);
  for (std::int64_t n = 1; n < params.sN(); ++n) {
    sine_coeffs_[n] = coefficient(params, n) / (kPi * static_cast<double>(n));
  }
}

double Antiderivative::periodic_part(double x) const {
  return simd::cos_sin_series(sine_coeffs_, x).sin_sum;
}

double Antiderivative::operator()(double x) const { return x + periodic_part(x); }

void Antiderivative::eval(std::span<const double> x, std::span<double> out) const {
  if (out.size() != x.size()) throw std::invalid_argument("Antiderivative::eval: size mismatch");
  simd::cos_sin_series(sine_coeffs_, x, {}, out);
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += x[i];
}

int derivative_sign_at_zero(const KernelParams& params, const Zero& zero) {
  const ZeroSet zeros = enumerate_zeros(params);
  const auto found = find_zero(zeros, zero.location);
  if (!found || found->kind != zero.kind || found->multiplicity != zero.multiplicity) {
    throw std::invalid_argument("derivative_sign_at_zero: " + std::to_string(zero.location.num()) +
                                "/" + std::to_string(zero.location.den()) +
                                " is not a zero of this kernel");
  }
  switch (found->kind) {
    case ZeroKind::Coincident: return 0;
    case ZeroKind::FirstFamily: return -epsilon_sign(params.r(), params.s(), found->a);
    case ZeroKind::SecondFamily: return -delta_sign(params.r(), params.s(), found->b);
  }
  return 0;
}

NormReport norm_piecewise_exact(const KernelParams& params) {
  if (params.sN() == 1) return NormReport::make(1.0, NormMethod::PiecewiseExact);  // V = 1

  const std::int64_t P = params.sum_freq();
  const std::int64_t Q = params.diff_freq();
  std::vector<double> x;
  std::vector<double> weight;
  x.reserve(static_cast<std::size_t>(P + Q));
  weight.reserve(static_cast<std::size_t>(P + Q));
  // Index ranges include a = P and b = Q, where the signs vanish.
  for (std::int64_t a = 1; a <= P; ++a) {
    x.push_back(static_cast<double>(a) / static_cast<double>(P));
    weight.push_back(epsilon_sign(params.r(), params.s(), a));
  }
  for (std::int64_t b = 1; b <= Q; ++b) {
    x.push_back(static_cast<double>(b) / static_cast<double>(Q));
    weight.push_back(delta_sign(params.r(), params.s(), b));
  }
  std::vector<double> w(x.size());
  Antiderivative(params).eval(x, w);

  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) sum += weight[i] * w[i];
  return NormReport::make(1.0 + 2.0 * sum, NormMethod::PiecewiseExact);
}

ClosedFormTerms closed_form_terms(std::int64_t r, std::int64_t s) {
  const SignSequences seq(r, s);
  const KernelParams unit = KernelParams::make(r, s, 1);
  const std::int64_t P = s + r;
  const std::int64_t Q = s - r;

  ClosedFormTerms t;
  double acc = 0.0;
  for (std::int64_t a = 1; a <= P; ++a) acc += seq.eps(a) * static_cast<double>(a);
  t.eps_linear = 2.0 * acc / static_cast<double>(P);
  acc = 0.0;
  for (std::int64_t b = 1; b <= Q; ++b) acc += seq.del(b) * static_cast<double>(b);
  t.del_linear = 2.0 * acc / static_cast<double>(Q);

  // For 1 <= k <= s+r the profile vanishes at -k + m(s+r) unless m is 0 or 1.
  for (std::int64_t k = 1; k <= P; ++k) {
    const cplx h = seq.eps_hat(k);
    if (h == cplx{}) continue;
    t.eps_spectral += h * spectral_inner(unit, k, P, 0, 1);
  }
  t.eps_spectral *= static_cast<double>(P);

  // With period s-r the support |u| < s can hold several m per k.
  const std::int64_t m_span = s / Q + 2;
  for (std::int64_t k = 1; k <= Q; ++k) {
    const cplx h = seq.del_hat(k);
    if (h == cplx{}) continue;
    t.del_spectral += h * spectral_inner(unit, k, Q, -m_span, m_span);
  }
  t.del_spectral *= static_cast<double>(Q);
  return t;
}

NormReport norm_closed_form(std::int64_t r, std::int64_t s) {
  const cplx total = closed_form_terms(r, s).total();
  const double residual = std::abs(total.imag());
  if (residual > kMaxImagResidual) {
    throw ConsistencyError("norm_closed_form: imaginary residual " + std::to_string(residual) +
                           " for (r, s) = (" + std::to_string(r) + ", " + std::to_string(s) + ")");
  }
  return NormReport::make(total.real(), NormMethod::ClosedForm, residual);
}

double linear_term_full_range(const KernelParams& params) {
  const std::int64_t P = params.sum_freq();
  const std::int64_t Q = params.diff_freq();
  double acc = 0.0;
  for (std::int64_t a = 1; a <= P; ++a) {
    acc += epsilon_sign(params.r(), params.s(), a) * (static_cast<double>(a) / static_cast<double>(P));
  }
  for (std::int64_t b = 1; b <= Q; ++b) {
    acc += delta_sign(params.r(), params.s(), b) * (static_cast<double>(b) / static_cast<double>(Q));
  }
  return 2.0 * acc;
}

AreaSplit area_split(const KernelParams& params) {
  const ZeroSet zeros = enumerate_zeros(params);
  std::vector<double> nodes;
  nodes.reserve(zeros.entries.size() + 2);
  nodes.push_back(0.0);
  for (const Zero& z : zeros.entries) nodes.push_back(z.location.to_double());
  nodes.push_back(1.0);

  std::vector<double> w(nodes.size());
  Antiderivative(params).eval(nodes, w);

  AreaSplit split;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const double piece = w[i + 1] - w[i];
    if (piece >= 0) {
      split.plus += piece;
    } else {
      split.minus -= piece;
    }
  }
  return split;
}

DecayReport decay_bound_check(const KernelParams& params, std::size_t grid_points) {
  if (grid_points == 0) throw std::invalid_argument("decay_bound_check: need at least one grid point");
  const double scale = std::cbrt(static_cast<double>(params.N()));
  const double lo = 1.0 / scale;
  if (lo > 0.5) {
    throw std::invalid_argument("decay_bound_check: window [N^(-1/3), 1 - N^(-1/3)] is empty for N = " +
                                std::to_string(params.N()));
  }
  DecayReport rep;
  rep.window_lo = lo;
  rep.window_hi = 1.0 - lo;
  rep.points = grid_points;
  const double step = grid_points > 1 ? (rep.window_hi - rep.window_lo) / static_cast<double>(grid_points - 1) : 0.0;
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double x = rep.window_lo + step * static_cast<double>(i);
    const double v = std::abs(eval_vp(params, x));
    if (v > rep.max_abs_value) {
      rep.max_abs_value = v;
      rep.worst_x = x;
    }
  }
  rep.worst_ratio = rep.max_abs_value * scale / 4.0;
  return rep;
}

}  // namespace dvp
