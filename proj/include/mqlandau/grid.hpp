#pragma once

#include <vector>

namespace mqlandau {

/// Where the unknowns of a uniform radial grid sit.
enum class GridLayout {
  /// n_points interior nodes rho_min + i h, i = 1..n_points, with
  /// h = (rho_max - rho_min) / (n_points + 1); the end nodes carry Dirichlet
  /// values.
  kVertex,
  /// n_points cell centres (i + 1/2) h on [0, rho_max], h = rho_max / n_points.
  /// The inner face sits on the axis and carries no flux.
  kCellCentered,
};

/// Uniform discretization of the radial coordinate.
class RadialGrid {
 public:
  /// Throws DomainError unless 0 < rho_min < rho_max and n_points >= 16.
  static RadialGrid vertex(double rho_min, double rho_max, int n_points);
  /// Throws DomainError unless rho_max > 0 and n_points >= 16.
  static RadialGrid cell_centered(double rho_max, int n_points);

  [[nodiscard]] double rho_min() const noexcept { return rho_min_; }
  [[nodiscard]] double rho_max() const noexcept { return rho_max_; }
  [[nodiscard]] int n_points() const noexcept { return n_points_; }
  [[nodiscard]] GridLayout layout() const noexcept { return layout_; }

  [[nodiscard]] double spacing() const noexcept;
  /// Position of unknown i, 0 <= i < n_points.
  [[nodiscard]] double point(int i) const noexcept;
  [[nodiscard]] std::vector<double> points() const;

  /// Same domain, spacing halved.
  [[nodiscard]] RadialGrid refined() const;

 private:
  RadialGrid(double rho_min, double rho_max, int n_points, GridLayout layout)
      : rho_min_(rho_min), rho_max_(rho_max), n_points_(n_points), layout_(layout) {}

  double rho_min_;
  double rho_max_;
  int n_points_;
  GridLayout layout_;
};

}  // namespace mqlandau
