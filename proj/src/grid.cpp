#include "mqlandau/grid.hpp"

#include <cmath>

#include <fmt/core.h>

#include "mqlandau/errors.hpp"

namespace mqlandau {

namespace {
constexpr int kMinPoints = 16;
}

RadialGrid RadialGrid::vertex(double rho_min, double rho_max, int n_points) {
  if (!(rho_min > 0.0) || !(rho_max > rho_min) || !std::isfinite(rho_max)) {
    throw DomainError(
        fmt::format("grid requires 0 < rho_min < rho_max, got [{}, {}]", rho_min, rho_max));
  }
  if (n_points < kMinPoints) {
    throw DomainError(fmt::format("grid requires >= {} points, got {}", kMinPoints, n_points));
  }
  return {rho_min, rho_max, n_points, GridLayout::kVertex};
}

RadialGrid RadialGrid::cell_centered(double rho_max, int n_points) {
  if (!(rho_max > 0.0) || !std::isfinite(rho_max)) {
    throw DomainError(fmt::format("grid requires rho_max > 0, got {}", rho_max));
  }
  if (n_points < kMinPoints) {
    throw DomainError(fmt::format("grid requires >= {} points, got {}", kMinPoints, n_points));
  }
  return {0.0, rho_max, n_points, GridLayout::kCellCentered};
}

double RadialGrid::spacing() const noexcept {
  if (layout_ == GridLayout::kVertex) {
    return (rho_max_ - rho_min_) / (n_points_ + 1);
  }
  return rho_max_ / n_points_;
}

double RadialGrid::point(int i) const noexcept {
  if (layout_ == GridLayout::kVertex) {
    return rho_min_ + (i + 1) * spacing();
  }
  return (i + 0.5) * spacing();
}

std::vector<double> RadialGrid::points() const {
  std::vector<double> out(static_cast<std::size_t>(n_points_));
  for (int i = 0; i < n_points_; ++i) {
    out[static_cast<std::size_t>(i)] = point(i);
  }
  return out;
}

RadialGrid RadialGrid::refined() const {
  if (layout_ == GridLayout::kVertex) {
    return {rho_min_, rho_max_, 2 * n_points_ + 1, layout_};
  }
  return {rho_min_, rho_max_, 2 * n_points_, layout_};
}

}  // namespace mqlandau
