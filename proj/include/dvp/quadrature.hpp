#pragma once

// Numerical-integration oracle for the L1 norms. Independent of the exact
// engines: it only samples the kernels pointwise.

#include <cstddef>
#include <cstdint>

#include "dvp/exactnorm.hpp"
#include "dvp/kernels.hpp"

namespace dvp {

enum class PanelRule { GaussLegendre10, GaussLegendre20 };

struct QuadratureSpec {
  double abs_tol = 1e-10;
  std::size_t max_subdivisions = 1'000'000;
  PanelRule panel_rule = PanelRule::GaussLegendre20;

  /// Throws std::invalid_argument unless abs_tol >= 1e-13 and max_subdivisions > 0.
  void validate() const;
};

/// Where the initial panels of [0, 1] are placed.
enum class Panelization {
  ZeroAnchored,  // at the exact zeros of the integrand
  Uniform,       // 4 sN equal panels, zeros ignored
};

struct QuadratureResult {
  double value = 0.0;
  std::size_t initial_panels = 0;
  std::size_t subdivisions = 0;
};

/// Integral of |V_{rN,sN}| over [0, 1]. Throws BudgetExceededError when
/// max_subdivisions bisections do not reach abs_tol.
QuadratureResult integrate_abs_kernel_detailed(const KernelParams& params, const QuadratureSpec& spec,
                                               Panelization panelization = Panelization::ZeroAnchored);

double integrate_abs_kernel(const KernelParams& params, const QuadratureSpec& spec = {});

/// Integral of |V| over [lo, hi] (0 <= lo <= hi <= 1), panels anchored at zeros.
double integrate_abs_kernel_window(const KernelParams& params, double lo, double hi,
                                   const QuadratureSpec& spec = {});

/// L_n = integral of |D_n| over [0, 1], split at the zeros k/(2n+1).
double lebesgue_constant(std::int64_t n, const QuadratureSpec& spec = {});

NormReport norm_quadrature(const KernelParams& params, const QuadratureSpec& spec = {});

}  // namespace dvp
