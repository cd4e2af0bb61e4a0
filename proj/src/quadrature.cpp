#include "mqlandau/quadrature.hpp"

#include <cmath>
#include <numbers>

#include <fmt/core.h>

#include "mqlandau/errors.hpp"

namespace mqlandau::quadrature {

GaussLegendreRule gauss_legendre(int order) {
  if (order < 1) {
    throw DomainError(fmt::format("Gauss-Legendre order must be >= 1, got {}", order));
  }
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<std::size_t>(order));
  rule.weights.resize(static_cast<std::size_t>(order));
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-like initial guess for the i-th largest root.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double derivative = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      derivative = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / derivative;
      x -= dx;
      if (std::abs(dx) < 1e-16) {
        break;
      }
    }
    const double w = 2.0 / ((1.0 - x * x) * derivative * derivative);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(order - 1 - i);
    rule.nodes[lo] = -x;
    rule.nodes[hi] = x;
    rule.weights[lo] = w;
    rule.weights[hi] = w;
  }
  return rule;
}

double integrate_composite(const std::function<double(double)>& f, double a, double b,
                           int panels, const GaussLegendreRule& rule) {
  const double width = (b - a) / panels;
  const double half = 0.5 * width;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * width;
    double panel = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      panel += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    total += half * panel;
  }
  return total;
}

AdaptiveResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                  double rel_tol, int order, int max_panels) {
  const auto rule = gauss_legendre(order);
  int panels = 1;
  double previous = integrate_composite(f, a, b, panels, rule);
  while (panels < max_panels) {
    panels *= 2;
    const double current = integrate_composite(f, a, b, panels, rule);
    if (std::abs(current - previous) <= rel_tol * std::max(std::abs(current), 1.0)) {
      return {current, panels};
    }
    previous = current;
  }
  throw QuadratureError(fmt::format(
      "composite Gauss-Legendre on [{}, {}] did not settle to {} within {} panels", a, b,
      rel_tol, max_panels));
}

}  // namespace mqlandau::quadrature
