#include "dvp/quadrature.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dvp/zeros.hpp"

namespace dvp {

namespace {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// Newton iteration on P_n from Chebyshev starting points.
GaussRule make_gauss_legendre(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const GaussRule& rule_for(PanelRule r) {
  static const GaussRule gl10 = make_gauss_legendre(10);
  static const GaussRule gl20 = make_gauss_legendre(20);
  return r == PanelRule::GaussLegendre10 ? gl10 : gl20;
}

using Integrand = std::function<double(double)>;

class AdaptiveIntegrator {
 public:
  AdaptiveIntegrator(const QuadratureSpec& spec, Integrand f)
      : spec_(spec), rule_(rule_for(spec.panel_rule)), f_(std::move(f)) {}

  // Panels are integrated in order and summed in index order.
  double integrate(std::span<const double> breaks) {
    std::vector<double> parts;
    parts.reserve(breaks.size());
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
      const double a = breaks[i], b = breaks[i + 1];
      if (b <= a) continue;
      parts.push_back(refine(a, b, spec_.abs_tol * (b - a), apply(a, b), 0));
    }
    double total = 0.0;
    for (double p : parts) total += p;
    return total;
  }

  std::size_t subdivisions() const noexcept { return subdivisions_; }

 private:
  double apply(double a, double b) const {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule_.nodes.size(); ++i) {
      acc += rule_.weights[i] * f_(mid + half * rule_.nodes[i]);
    }
    return acc * half;
  }

  double refine(double a, double b, double tol, double whole, int depth) {
    const double mid = 0.5 * (a + b);
    const double left = apply(a, mid);
    const double right = apply(mid, b);
    const double both = left + right;
    if (std::abs(both - whole) <= tol || depth >= kMaxDepth) return both;
    if (++subdivisions_ > spec_.max_subdivisions) {
      throw BudgetExceededError("quadrature: subdivision budget of " +
                                std::to_string(spec_.max_subdivisions) + " exhausted");
    }
    return refine(a, mid, 0.5 * tol, left, depth + 1) + refine(mid, b, 0.5 * tol, right, depth + 1);
  }

  static constexpr int kMaxDepth = 60;

  QuadratureSpec spec_;
  const GaussRule& rule_;
  Integrand f_;
  std::size_t subdivisions_ = 0;
};

std::vector<double> zero_breaks(const KernelParams& params, double lo, double hi) {
  std::vector<double> breaks{lo};
  for (const Zero& z : enumerate_zeros(params).entries) {
    const double x = z.location.to_double();
    if (x > lo && x < hi) breaks.push_back(x);
  }
  breaks.push_back(hi);
  return breaks;
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(abs_tol >= 1e-13)) throw std::invalid_argument("QuadratureSpec: abs_tol must be >= 1e-13");
  if (max_subdivisions == 0) throw std::invalid_argument("QuadratureSpec: max_subdivisions must be positive");
}

QuadratureResult integrate_abs_kernel_detailed(const KernelParams& params, const QuadratureSpec& spec,
                                               Panelization panelization) {
  spec.validate();
  std::vector<double> breaks;
  if (panelization == Panelization::ZeroAnchored) {
    breaks = zero_breaks(params, 0.0, 1.0);
  } else {
    const std::int64_t panels = 4 * params.sN();
    for (std::int64_t i = 0; i <= panels; ++i) {
      breaks.push_back(static_cast<double>(i) / static_cast<double>(panels));
    }
  }
  AdaptiveIntegrator integrator(spec, [&params](double x) { return std::abs(eval_vp(params, x)); });
  QuadratureResult res;
  res.value = integrator.integrate(breaks);
  res.initial_panels = breaks.size() - 1;
  res.subdivisions = integrator.subdivisions();
  return res;
}

double integrate_abs_kernel(const KernelParams& params, const QuadratureSpec& spec) {
  return integrate_abs_kernel_detailed(params, spec).value;
}

double integrate_abs_kernel_window(const KernelParams& params, double lo, double hi,
                                   const QuadratureSpec& spec) {
  spec.validate();
  if (!(0.0 <= lo && lo <= hi && hi <= 1.0)) {
    throw std::invalid_argument("integrate_abs_kernel_window: need 0 <= lo <= hi <= 1");
  }
  AdaptiveIntegrator integrator(spec, [&params](double x) { return std::abs(eval_vp(params, x)); });
  return integrator.integrate(zero_breaks(params, lo, hi));
}

double lebesgue_constant(std::int64_t n, const QuadratureSpec& spec) {
  if (n < 0) throw std::invalid_argument("lebesgue_constant: n must be non-negative");
  spec.validate();
  const std::int64_t m = 2 * n + 1;
  std::vector<double> breaks;
  for (std::int64_t k = 0; k <= m; ++k) breaks.push_back(static_cast<double>(k) / static_cast<double>(m));
  AdaptiveIntegrator integrator(spec, [n](double x) { return std::abs(eval_dirichlet(n, x)); });
  return integrator.integrate(breaks);
}

NormReport norm_quadrature(const KernelParams& params, const QuadratureSpec& spec) {
  return NormReport::make(integrate_abs_kernel(params, spec), NormMethod::Quadrature);
}

}  // namespace dvp
