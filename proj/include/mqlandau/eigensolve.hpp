#pragma once

// Numeric route to the spectrum: the rotating-frame Hamiltonian restricted to
// the e^{i l phi} channel is discretized on a radial grid as a symmetric
// tridiagonal matrix acting on u = sqrt(rho) R, and its lowest eigenvalues are
// bracketed by Sturm-sequence bisection.
//
// The operator is assembled from the Hamiltonian's own coefficients
//   -(1/2m) laplacian,  (-i M lambda/m + i Omega) d/dphi,
//   (M^2 lambda^2/2m + M lambda Omega) rho^2,
// and does not reuse the analytic formulas of core.

#include <utility>
#include <vector>

#include "mqlandau/core.hpp"
#include "mqlandau/grid.hpp"

namespace mqlandau::eigensolve {

struct TridiagonalOperator {
  std::vector<double> diagonal;      // length N
  std::vector<double> off_diagonal;  // length N - 1

  [[nodiscard]] int size() const noexcept { return static_cast<int>(diagonal.size()); }
  /// Gershgorin interval containing the whole spectrum.
  [[nodiscard]] std::pair<double, double> gershgorin() const;
};

/// A discretized channel.  Eigenvalues of `matrix` plus `energy_offset` are
/// total energies.
struct RadialOperator {
  TridiagonalOperator matrix;
  double energy_offset = 0.0;  // azimuthal terms acting on e^{i l phi}
  int l = 0;
};

struct NumericSpectrum {
  int l = 0;
  std::vector<double> energies;  // ascending total energies
  std::vector<int> nodes;        // sign changes of each eigenvector
  RadialGrid grid;
};

/// Coefficient of rho^2 in the Hamiltonian, M^2 lambda^2/(2m) + M lambda Omega.
[[nodiscard]] double confinement_coefficient(const SystemParams& params) noexcept;

/// Energy contributed by the first-order azimuthal terms on e^{i l phi}.
[[nodiscard]] double azimuthal_offset(const SystemParams& params, int l);

/// Discretizes channel l.  The stencil follows the grid layout:
///
/// kVertex: three-point Liouville form with Dirichlet ends,
///   diag_i = 1/(m h^2) + (l^2 - 1/4)/(2 m rho_i^2) + c rho_i^2,
///   off    = -1/(2 m h^2).
/// The -1/4 rho^-2 term is critical in two dimensions, so the Dirichlet cut at
/// rho_min shifts the l = 0 levels by O(1/|ln rho_min|); prefer kCellCentered.
///
/// kCellCentered: flux form (1/rho) d/drho (rho dR/drho) with faces at
/// rho_{i +- 1/2} and zero flux through the axis, symmetrized by
/// u_i = sqrt(rho_i) R_i,
///   diag_i = (rho_{i+1/2} + rho_{i-1/2})/(2 m h^2 rho_i) + l^2/(2 m rho_i^2) + c rho_i^2,
///   off_i  = -rho_{i+1/2} / (2 m h^2 sqrt(rho_i rho_{i+1})),
/// and u vanishing one cell beyond rho_max.  Second order for every l.
[[nodiscard]] RadialOperator build_operator(const SystemParams& params, int l,
                                            const RadialGrid& grid);

/// Number of eigenvalues strictly below x.
[[nodiscard]] int sturm_count(const TridiagonalOperator& op, double x);

/// The k smallest eigenvalues, each bisected to width
/// 1e-12 * max(1, |Gershgorin bound|).
[[nodiscard]] std::vector<double> lowest_eigenvalues(const TridiagonalOperator& op, int k);

/// One inverse-iteration sweep at eigenvalue + 1e-10 * max(1, |eigenvalue|),
/// from a fixed pseudo-random start; unit 2-norm.
[[nodiscard]] std::vector<double> eigenvector(const TridiagonalOperator& op, double eigenvalue);

/// Sign changes of v, ignoring entries below rel_floor * max|v|.
[[nodiscard]] int sign_changes(const std::vector<double>& v, double rel_floor = 1e-10);

/// Lowest k total energies of channel l with node counts of the eigenvectors.
[[nodiscard]] NumericSpectrum solve_radial(const SystemParams& params, int l,
                                           const RadialGrid& grid, int k);

/// (4 e_h2 - e_h) / 3.
[[nodiscard]] double richardson(double e_h, double e_h2) noexcept;

/// log2(err_h / err_h2).
[[nodiscard]] double convergence_order(double err_h, double err_h2) noexcept;

/// rho with r = m delta rho^2/2 = |l| + 4 n_max + 80, delta taken from the
/// confinement coefficient.
[[nodiscard]] double default_rho_max(const SystemParams& params, int l, int n_max);

struct ExtrapolatedLevel {
  int index = 0;  // position in the channel's ascending spectrum
  int nodes = 0;  // from the fine-grid eigenvector
  double coarse = 0.0;
  double fine = 0.0;
  double extrapolated = 0.0;
};

/// Solves on `grid` and on grid.refined() and Richardson-combines the pair.
[[nodiscard]] std::vector<ExtrapolatedLevel> solve_extrapolated(const SystemParams& params, int l,
                                                                const RadialGrid& grid, int k);

}  // namespace mqlandau::eigensolve
