#include "dvp/summation.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "dvp/trig_series.hpp"

namespace dvp {

namespace {

using cplx = std::complex<double>;

cplx unit_exp(std::int64_t k, double x) {
  // e(kx) with the product kx reduced before the trig calls
  const double t = 2.0 * reduce_periodic(static_cast<double>(k) * reduce_periodic(x));
  return {cos_pi(t), sin_pi(t)};
}

// f^(k) e(kx) + f^(-k) e(-kx), k >= 1
cplx mode_pair(const FourierFunction& f, std::int64_t k, double x) {
  const cplx e = unit_exp(k, x);
  return f.coeff(k) * e + f.coeff(-k) * std::conj(e);
}

void check_degree(std::int64_t n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": degree must be non-negative");
}

}  // namespace

FourierFunction::FourierFunction(std::string name, Rule rule, std::optional<std::int64_t> support,
                                 bool real_valued, Evaluator evaluator)
    : name_(std::move(name)),
      rule_(std::move(rule)),
      support_(support),
      real_(real_valued),
      evaluator_(std::move(evaluator)) {
  if (!rule_) throw std::invalid_argument("FourierFunction: missing coefficient rule");
  if (support_ && *support_ < 0) throw std::invalid_argument("FourierFunction: negative support");
  if (real_) {
    const std::int64_t limit = support_ ? std::min<std::int64_t>(*support_, 64) : 64;
    for (std::int64_t k = 0; k <= limit; ++k) {
      const cplx a = coeff(k);
      const cplx b = std::conj(coeff(-k));
      if (std::abs(a - b) > 1e-12 * (1.0 + std::abs(a))) {
        throw std::invalid_argument("FourierFunction '" + name_ +
                                    "': declared real but coefficients are not Hermitian at k = " +
                                    std::to_string(k));
      }
    }
  }
}

FourierFunction FourierFunction::from_coefficients(std::string name, std::vector<cplx> coeffs,
                                                   bool real_valued) {
  if (coeffs.size() % 2 != 1) {
    throw std::invalid_argument("FourierFunction::from_coefficients: expected 2K+1 coefficients");
  }
  const auto K = static_cast<std::int64_t>(coeffs.size() / 2);
  auto table = std::make_shared<const std::vector<cplx>>(std::move(coeffs));
  return FourierFunction(
      std::move(name), [table, K](std::int64_t k) { return (*table)[static_cast<std::size_t>(k + K)]; },
      K, real_valued);
}

cplx FourierFunction::coeff(std::int64_t k) const {
  if (support_ && (k > *support_ || k < -*support_)) return {};
  return rule_(k);
}

cplx FourierFunction::evaluate(double x) const {
  if (!evaluator_) throw std::logic_error("FourierFunction '" + name_ + "' has no pointwise evaluator");
  return evaluator_(x);
}

double real_value(const FourierFunction& f, cplx z) {
  if (f.real_valued() && std::abs(z.imag()) > 1e-9 * (1.0 + std::abs(z.real()))) {
    throw ConsistencyError("real_value: imaginary residual " + std::to_string(z.imag()) + " for '" +
                           f.name() + "'");
  }
  return z.real();
}

std::vector<cplx> multiplier_sum(const FourierFunction& f, std::span<const double> weights,
                                 std::span<const double> x) {
  std::vector<cplx> out(x.size());
  if (weights.empty()) return out;
  const std::size_t M = weights.size();

  // sum_k w f^(k) e(kx) = sum_{k>=0} A_k cos(2 pi k x) + i B_k sin(2 pi k x) with
  // A_k = w (f^(k) + f^(-k)), B_k = w (f^(k) - f^(-k)) for k >= 1, A_0 = w f^(0).
  std::vector<double> a_re(M), a_im(M), b_re(M), b_im(M);
  const cplx c0 = weights[0] * f.coeff(0);
  a_re[0] = c0.real();
  a_im[0] = c0.imag();
  for (std::size_t k = 1; k < M; ++k) {
    const auto kk = static_cast<std::int64_t>(k);
    const cplx plus = f.coeff(kk), minus = f.coeff(-kk);
    const cplx A = weights[k] * (plus + minus);
    const cplx B = weights[k] * (plus - minus);
    a_re[k] = A.real();
    a_im[k] = A.imag();
    b_re[k] = B.real();
    b_im[k] = B.imag();
  }

  const simd::PointConstants pc = simd::point_constants(x);
  std::vector<double> cos_part(x.size()), sin_part(x.size());
  // Real part: A_re cos - B_im sin.
  simd::cos_sin_series(a_re, pc, cos_part, {});
  simd::cos_sin_series(b_im, pc, {}, sin_part);
  for (std::size_t i = 0; i < x.size(); ++i) out[i].real(cos_part[i] - sin_part[i]);
  if (f.real_valued()) return out;
  // Imaginary part: A_im cos + B_re sin.
  simd::cos_sin_series(a_im, pc, cos_part, {});
  simd::cos_sin_series(b_re, pc, {}, sin_part);
  for (std::size_t i = 0; i < x.size(); ++i) out[i].imag(cos_part[i] + sin_part[i]);
  return out;
}

std::vector<cplx> partial_sum(const FourierFunction& f, std::int64_t n, std::span<const double> x) {
  check_degree(n, "partial_sum");
  const std::vector<double> w(static_cast<std::size_t>(n + 1), 1.0);
  return multiplier_sum(f, w, x);
}

cplx partial_sum(const FourierFunction& f, std::int64_t n, double x) {
  return partial_sum(f, n, std::span<const double>(&x, 1)).front();
}

std::vector<cplx> fejer_mean(const FourierFunction& f, std::int64_t n, std::span<const double> x) {
  check_degree(n, "fejer_mean");
  std::vector<double> w(static_cast<std::size_t>(n + 1));
  for (std::int64_t k = 0; k <= n; ++k) {
    w[k] = 1.0 - static_cast<double>(k) / static_cast<double>(n + 1);
  }
  return multiplier_sum(f, w, x);
}

cplx fejer_mean(const FourierFunction& f, std::int64_t n, double x) {
  return fejer_mean(f, n, std::span<const double>(&x, 1)).front();
}

cplx fejer_mean_cesaro(const FourierFunction& f, std::int64_t n, double x) {
  check_degree(n, "fejer_mean_cesaro");
  cplx S = f.coeff(0);
  cplx total = S;
  for (std::int64_t k = 1; k <= n; ++k) {
    S += mode_pair(f, k, x);
    total += S;
  }
  return total / static_cast<double>(n + 1);
}

std::vector<cplx> delayed_mean(const FourierFunction& f, std::int64_t n, std::int64_t p,
                               std::span<const double> x) {
  if (n < 0 || p < 1) throw std::invalid_argument("delayed_mean: need n >= 0 and p >= 1");
  std::vector<double> w(static_cast<std::size_t>(n + p));
  for (std::int64_t k = 0; k < n + p; ++k) {
    w[k] = trapezoid_multiplier(static_cast<double>(n), static_cast<double>(p), static_cast<double>(k));
  }
  return multiplier_sum(f, w, x);
}

cplx delayed_mean(const FourierFunction& f, std::int64_t n, std::int64_t p, double x) {
  return delayed_mean(f, n, p, std::span<const double>(&x, 1)).front();
}

cplx delayed_mean_fejer_combination(const FourierFunction& f, std::int64_t n, std::int64_t p, double x) {
  if (n < 0 || p < 1) throw std::invalid_argument("delayed_mean_fejer_combination: need n >= 0 and p >= 1");
  const double pd = static_cast<double>(p);
  cplx value = (static_cast<double>(n + p) / pd) * fejer_mean_cesaro(f, n + p - 1, x);
  if (n > 0) value -= (static_cast<double>(n) / pd) * fejer_mean_cesaro(f, n - 1, x);
  return value;
}

cplx delayed_mean_partial_average(const FourierFunction& f, std::int64_t n, std::int64_t p, double x) {
  if (n < 0 || p < 1) throw std::invalid_argument("delayed_mean_partial_average: need n >= 0 and p >= 1");
  cplx S = f.coeff(0);
  for (std::int64_t k = 1; k <= n; ++k) S += mode_pair(f, k, x);
  cplx total = S;  // S_n
  for (std::int64_t k = n + 1; k < n + p; ++k) {
    S += mode_pair(f, k, x);
    total += S;
  }
  return total / static_cast<double>(p);
}

std::vector<TailMass> approximate_identity_report(const KernelParams& params, double delta,
                                                  std::span<const std::int64_t> N_list,
                                                  const QuadratureSpec& spec) {
  if (!(delta > 0.0 && delta < 0.5)) {
    throw std::invalid_argument("approximate_identity_report: delta must lie in (0, 1/2)");
  }
  std::vector<TailMass> out;
  out.reserve(N_list.size());
  for (std::int64_t N : N_list) {
    const KernelParams member = params.with_N(N);
    TailMass tm;
    tm.N = N;
    tm.tail = integrate_abs_kernel_window(member, delta, 1.0 - delta, spec);
    tm.full = integrate_abs_kernel(member, spec);
    out.push_back(tm);
  }
  return out;
}

}  // namespace dvp
