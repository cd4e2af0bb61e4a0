#pragma once

#include <functional>
#include <vector>

namespace mqlandau::quadrature {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;    // ascending
  std::vector<double> weights;
};

/// Nodes by Newton iteration on the Legendre recurrence; exact for
/// polynomials of degree <= 2 * order - 1.
[[nodiscard]] GaussLegendreRule gauss_legendre(int order);

/// Fixed composite rule: `panels` equal panels on [a, b].
[[nodiscard]] double integrate_composite(const std::function<double(double)>& f, double a,
                                         double b, int panels, const GaussLegendreRule& rule);

struct AdaptiveResult {
  double value = 0.0;
  int panels = 0;
};

/// Doubles the panel count until two successive composite results differ by
/// at most rel_tol * max(|I|, 1).  Throws QuadratureError past max_panels.
[[nodiscard]] AdaptiveResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                                double b, double rel_tol = 1e-10,
                                                int order = 16, int max_panels = 1 << 14);

}  // namespace mqlandau::quadrature
