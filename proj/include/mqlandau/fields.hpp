#pragma once

// Lab-frame field configuration: the radial electric field of a cylinder with
// charge density growing like rho, and the effective vector potential it
// induces for the quadrupole tensor with M_{rho z} = M_{z rho} = M.

#include <functional>
#include <vector>

namespace mqlandau::fields {

/// Components in the local cylindrical basis (rho-hat, phi-hat, z-hat).
struct CylindricalVector {
  double rho_comp = 0.0;
  double phi_comp = 0.0;
  double z_comp = 0.0;

  friend bool operator==(const CylindricalVector&, const CylindricalVector&) = default;
};

/// Azimuthally symmetric, z-independent field rho -> F(rho).
using RadialField = std::function<CylindricalVector(double)>;

/// E = (lambda rho^2 / 2) rho-hat.
[[nodiscard]] CylindricalVector electric_field(double lambda, double rho);

/// A_eff = M x E.  With only M_{rho z} = M_{z rho} nonzero the operator vector
/// is (M d/dz, 0, M d/drho), so A_phi = M dE_rho/drho = lambda M rho.
[[nodiscard]] CylindricalVector effective_vector_potential(double quad_moment, double lambda,
                                                           double rho);

/// z-component of curl F, (1/rho) d(rho F_phi)/drho, by central differences.
/// Throws StepSizeError unless 0 < h < rho.
[[nodiscard]] double curl_z_numeric(const RadialField& field, double rho, double h);

/// phi-component of curl F, -dF_z/drho, by central differences.
[[nodiscard]] double curl_phi_numeric(const RadialField& field, double rho, double h);

inline constexpr double kCurlTolerance = 1e-8;

struct CurlReport {
  bool passed = true;
  double max_violation = 0.0;
  bool vacuous = false;  // no sample points were given
};

/// Checks that every curl component of `field` vanishes within kCurlTolerance
/// at the sample points.  For a z-independent symmetric field the rho
/// component is identically zero; the other two are differenced numerically.
[[nodiscard]] CurlReport curl_free_check(const RadialField& field,
                                         const std::vector<double>& sample_points);

/// curl_free_check applied to electric_field(lambda, .).
[[nodiscard]] CurlReport electrostatic_check(double lambda,
                                             const std::vector<double>& sample_points);

/// Step used by the checks: min(1e-4, rho / 2).
[[nodiscard]] double default_step(double rho) noexcept;

}  // namespace mqlandau::fields
