#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dvp/kernels.hpp"
#include "dvp/quadrature.hpp"

namespace dvp {

/// A periodic function given by its Fourier coefficients f^(k).
///
/// The coefficient rule must be callable concurrently. When `support` is set,
/// coefficients with |k| > support are treated as zero without calling the rule.
class FourierFunction {
 public:
  using Rule = std::function<std::complex<double>(std::int64_t)>;
  using Evaluator = std::function<std::complex<double>(double)>;

  /// A real-valued function must have Hermitian coefficients; this is checked
  /// on |k| <= 64 and violations throw std::invalid_argument.
  FourierFunction(std::string name, Rule rule, std::optional<std::int64_t> support, bool real_valued,
                  Evaluator evaluator = {});

  /// Coefficients listed for k = -K..K (odd length 2K+1).
  static FourierFunction from_coefficients(std::string name, std::vector<std::complex<double>> coeffs,
                                           bool real_valued);

  const std::string& name() const noexcept { return name_; }
  std::complex<double> coeff(std::int64_t k) const;
  std::optional<std::int64_t> support() const noexcept { return support_; }
  bool real_valued() const noexcept { return real_; }
  bool has_evaluator() const noexcept { return static_cast<bool>(evaluator_); }
  /// Ground truth f(x); throws std::logic_error without an evaluator.
  std::complex<double> evaluate(double x) const;

 private:
  std::string name_;
  Rule rule_;
  std::optional<std::int64_t> support_;
  bool real_;
  Evaluator evaluator_;
};

/// Re(z) for a function declared real; throws ConsistencyError if the imaginary
/// part exceeds 1e-9 (1 + |Re z|).
double real_value(const FourierFunction& f, std::complex<double> z);

/// sum_{|k| <= degree} weight(|k|) f^(k) e(kx) for every x, weight(0..degree).
/// Real-valued functions take a two-series fast path.
std::vector<std::complex<double>> multiplier_sum(const FourierFunction& f, std::span<const double> weights,
                                                 std::span<const double> x);

/// S_n(f, x).
std::vector<std::complex<double>> partial_sum(const FourierFunction& f, std::int64_t n,
                                              std::span<const double> x);
std::complex<double> partial_sum(const FourierFunction& f, std::int64_t n, double x);

/// sigma_n(f, x) via the multiplier 1 - |k|/(n+1).
std::vector<std::complex<double>> fejer_mean(const FourierFunction& f, std::int64_t n,
                                             std::span<const double> x);
std::complex<double> fejer_mean(const FourierFunction& f, std::int64_t n, double x);

/// sigma_n(f, x) as the average of S_0..S_n, accumulated term by term.
std::complex<double> fejer_mean_cesaro(const FourierFunction& f, std::int64_t n, double x);

/// sigma_{n,p}(f, x) via the trapezoid multiplier v_{n,p}(k).
std::vector<std::complex<double>> delayed_mean(const FourierFunction& f, std::int64_t n, std::int64_t p,
                                               std::span<const double> x);
std::complex<double> delayed_mean(const FourierFunction& f, std::int64_t n, std::int64_t p, double x);

/// ((n+p)/p) sigma_{n+p-1} - (n/p) sigma_{n-1}, with the Cesaro means.
std::complex<double> delayed_mean_fejer_combination(const FourierFunction& f, std::int64_t n,
                                                    std::int64_t p, double x);

/// (1/p) sum_{k=n}^{n+p-1} S_k(f, x), partial sums accumulated term by term.
std::complex<double> delayed_mean_partial_average(const FourierFunction& f, std::int64_t n,
                                                  std::int64_t p, double x);

struct TailMass {
  std::int64_t N = 0;
  double tail = 0.0;  // integral of |V_{rN,sN}| over dist(x, Z) >= delta
  double full = 0.0;  // integral over the whole period
};

/// Tail masses of the family (r, s) taken from `params`, for each N in N_list.
/// Requires 0 < delta < 1/2.
std::vector<TailMass> approximate_identity_report(const KernelParams& params, double delta,
                                                  std::span<const std::int64_t> N_list,
                                                  const QuadratureSpec& spec = {});

/// Named test functions with closed-form coefficients and evaluators:
/// constant, square, sawtooth, trigpoly, expcos, mode1, vp12.
std::vector<std::string> catalog_names();
/// Throws std::invalid_argument for unknown names.
FourierFunction catalog_function(std::string_view name);

}  // namespace dvp
