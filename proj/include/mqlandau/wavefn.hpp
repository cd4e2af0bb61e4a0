#pragma once

// Bound-state radial wavefunctions
//   R(rho) = N e^{-r/2} r^{|l|/2} M(-n, |l| + 1, r),   r = m delta rho^2 / 2.

#include <cmath>

#include "mqlandau/core.hpp"
#include "mqlandau/grid.hpp"

namespace mqlandau::wavefn {

/// Exponential envelope of the factorized radial solution.
enum class Envelope {
  kLinear,     // e^{-r/2}: the form that solves the radial equation
  kQuadratic,  // e^{-r^2/2}: kept only to show it does not
};

struct RadialState {
  SystemParams params;
  QuantumNumbers qn;
  double norm_constant = 1.0;  // makes int_0^inf R^2 rho drho = 1
};

[[nodiscard]] double dimensionless_radius(const SystemParams& params, double rho);

/// Inverse of dimensionless_radius.
[[nodiscard]] double physical_radius(const SystemParams& params, double r);

[[nodiscard]] double radial_value(const RadialState& state, double rho);

/// Dimensionless cutoff |l| + 4n + 60 beyond which the normalization
/// integrand is negligible.
[[nodiscard]] double integration_cutoff(QuantumNumbers qn);

/// Normalized state.  Composite Gauss-Legendre in r with panel doubling to
/// 1e-10; throws QuadratureError if the tail beyond the cutoff exceeds 1e-12
/// of the integral.
[[nodiscard]] RadialState normalize(const SystemParams& params, QuantumNumbers qn);

/// int_0^inf R_a R_b rho drho for two states of the same system.
[[nodiscard]] double overlap(const RadialState& a, const RadialState& b);

[[nodiscard]] inline double normalization_integral(const RadialState& s) { return overlap(s, s); }

/// Strict sign changes of R over the grid points (zeros are skipped).
/// Requires at least 64 grid points per expected node.
[[nodiscard]] int node_count(const RadialState& state, const RadialGrid& grid);

struct OdeResidual {
  double value = 0.0;  // left-hand side of the radial equation
  double scale = 0.0;  // largest magnitude among its terms

  [[nodiscard]] double relative() const { return scale > 0.0 ? std::abs(value) / scale : 0.0; }
};

/// Left side of the radial equation
///   R'' + R'/rho - (l^2/rho^2) R - (m^2 delta^2/4) rho^2 R
///     + 2m [E - (M lambda/m) l + Omega l] R
/// evaluated with analytic derivatives of the factorized form.  The linear
/// terms come straight from the azimuthal part of the Hamiltonian.  rho > 0.
[[nodiscard]] OdeResidual ode_residual(const RadialState& state, double rho, double energy,
                                       Envelope envelope = Envelope::kLinear);

/// Residual at the analytic energy_level of the state.
[[nodiscard]] OdeResidual ode_residual(const RadialState& state, double rho);

}  // namespace mqlandau::wavefn
