#include "mqlandau/fields.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>

#include "mqlandau/errors.hpp"

namespace mqlandau::fields {

namespace {

void check_step(double rho, double h) {
  if (!(h > 0.0) || !(h < rho)) {
    throw StepSizeError(fmt::format("finite-difference step {} must lie in (0, rho = {})", h, rho));
  }
}

}  // namespace

CylindricalVector electric_field(double lambda, double rho) {
  return {0.5 * lambda * rho * rho, 0.0, 0.0};
}

CylindricalVector effective_vector_potential(double quad_moment, double lambda, double rho) {
  // dE_rho/drho = lambda rho.
  return {0.0, quad_moment * lambda * rho, 0.0};
}

double curl_z_numeric(const RadialField& field, double rho, double h) {
  check_step(rho, h);
  const double outer = (rho + h) * field(rho + h).phi_comp;
  const double inner = (rho - h) * field(rho - h).phi_comp;
  return (outer - inner) / (2.0 * h * rho);
}

double curl_phi_numeric(const RadialField& field, double rho, double h) {
  check_step(rho, h);
  return -(field(rho + h).z_comp - field(rho - h).z_comp) / (2.0 * h);
}

double default_step(double rho) noexcept { return std::min(1e-4, 0.5 * rho); }

CurlReport curl_free_check(const RadialField& field, const std::vector<double>& sample_points) {
  CurlReport report;
  report.vacuous = sample_points.empty();
  for (double rho : sample_points) {
    if (!(rho > 0.0)) {
      throw DomainError(fmt::format("curl sample points must be positive, got {}", rho));
    }
    const double h = default_step(rho);
    const double violation =
        std::max(std::abs(curl_z_numeric(field, rho, h)), std::abs(curl_phi_numeric(field, rho, h)));
    report.max_violation = std::max(report.max_violation, violation);
  }
  report.passed = report.max_violation < kCurlTolerance;
  return report;
}

CurlReport electrostatic_check(double lambda, const std::vector<double>& sample_points) {
  return curl_free_check([lambda](double rho) { return electric_field(lambda, rho); },
                         sample_points);
}

}  // namespace mqlandau::fields
