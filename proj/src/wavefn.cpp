#include "mqlandau/wavefn.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include <fmt/core.h>

#include "mqlandau/errors.hpp"
#include "mqlandau/quadrature.hpp"
#include "mqlandau/specfun.hpp"

namespace mqlandau::wavefn {

namespace {

constexpr double kQuadratureTol = 1e-10;
constexpr double kTailTol = 1e-12;
constexpr int kPointsPerNode = 64;

double scale_factor(const SystemParams& params) {
  return params.mass() * effective_frequency(params);
}

// e^{-r/2} r^{|l|/2} M(-n, |l|+1, r) without the normalization constant.
double profile(QuantumNumbers qn, double r) {
  const int al = std::abs(qn.l);
  const double poly = specfun::confluent_m_polynomial(qn.n, al + 1.0, r);
  return std::exp(-0.5 * r) * std::pow(r, 0.5 * al) * poly;
}

// Unnormalized overlap in r: int_0^cut profile_a profile_b dr.
double profile_overlap(QuantumNumbers a, QuantumNumbers b) {
  const double cut = std::max(integration_cutoff(a), integration_cutoff(b));
  const auto integrand = [a, b](double r) { return profile(a, r) * profile(b, r); };
  const auto result = quadrature::integrate_adaptive(integrand, 0.0, cut, kQuadratureTol);

  // Beyond the cutoff the integrand decays at least as fast as e^{-r/2}, so
  // twice its boundary value bounds the tail.
  const double tail = 2.0 * std::abs(integrand(cut));
  const double reference = a == b ? std::abs(result.value) : 1.0;
  if (tail > kTailTol * reference) {
    throw QuadratureError(fmt::format(
        "normalization tail {} beyond r = {} exceeds {} of the integral", tail, cut, kTailTol));
  }
  return result.value;
}

}  // namespace

double dimensionless_radius(const SystemParams& params, double rho) {
  return 0.5 * scale_factor(params) * rho * rho;
}

double physical_radius(const SystemParams& params, double r) {
  return std::sqrt(2.0 * r / scale_factor(params));
}

double radial_value(const RadialState& state, double rho) {
  return state.norm_constant * profile(state.qn, dimensionless_radius(state.params, rho));
}

double integration_cutoff(QuantumNumbers qn) {
  return std::abs(qn.l) + 4.0 * qn.n + 60.0;
}

RadialState normalize(const SystemParams& params, QuantumNumbers qn) {
  // rho drho = dr / (m delta).
  const double integral = profile_overlap(qn, qn) / scale_factor(params);
  if (!(integral > 0.0) || !std::isfinite(integral)) {
    throw QuadratureError(fmt::format("non-positive normalization integral {}", integral));
  }
  return {params, qn, 1.0 / std::sqrt(integral)};
}

double overlap(const RadialState& a, const RadialState& b) {
  if (!(a.params == b.params)) {
    throw DomainError("overlap requires states of the same system");
  }
  return a.norm_constant * b.norm_constant * profile_overlap(a.qn, b.qn) /
         scale_factor(a.params);
}

int node_count(const RadialState& state, const RadialGrid& grid) {
  const int required = kPointsPerNode * std::max(state.qn.n, 1);
  if (grid.n_points() < required) {
    throw DomainError(fmt::format("node counting for n = {} needs >= {} grid points, got {}",
                                  state.qn.n, required, grid.n_points()));
  }
  int nodes = 0;
  int last_sign = 0;
  for (int i = 0; i < grid.n_points(); ++i) {
    const double rho = grid.point(i);
    if (!(rho > 0.0) || !(rho < grid.rho_max())) {
      continue;
    }
    const double v = radial_value(state, rho);
    const int sign = (v > 0.0) - (v < 0.0);
    if (sign == 0) {
      continue;
    }
    if (last_sign != 0 && sign != last_sign) {
      ++nodes;
    }
    last_sign = sign;
  }
  return nodes;
}

OdeResidual ode_residual(const RadialState& state, double rho, double energy,
                         Envelope envelope) {
  if (!(rho > 0.0)) {
    throw DomainError(fmt::format("ode_residual requires rho > 0, got {}", rho));
  }
  const auto& p = state.params;
  const int n = state.qn.n;
  const int l = state.qn.l;
  const double b = std::abs(l) + 1.0;
  const double a = 0.5 * std::abs(l);
  const double m = p.mass();
  const double delta = effective_frequency(p);
  const double r = dimensionless_radius(p, rho);

  // Kummer polynomial and its r-derivatives: dM(a,b,r)/dr = (a/b) M(a+1,b+1,r).
  const double poly = specfun::confluent_m_polynomial(n, b, r);
  const double dpoly = n >= 1 ? -n / b * specfun::confluent_m_polynomial(n - 1, b + 1.0, r) : 0.0;
  const double d2poly =
      n >= 2 ? (-n) * (1.0 - n) / (b * (b + 1.0)) * specfun::confluent_m_polynomial(n - 2, b + 2.0, r)
             : 0.0;

  // Envelope e^{phi(r)} r^a, with g = d ln(envelope)/dr.
  double phi = 0.0;
  double dphi = 0.0;
  double d2phi = 0.0;
  if (envelope == Envelope::kLinear) {
    phi = -0.5 * r;
    dphi = -0.5;
  } else {
    phi = -0.5 * r * r;
    dphi = -r;
    d2phi = -1.0;
  }
  const double env = std::exp(phi) * std::pow(r, a);
  const double g = a / r + dphi;
  const double dg = -a / (r * r) + d2phi;

  const double f = env * poly;
  const double df = env * (dpoly + g * poly);
  const double d2f = env * (d2poly + 2.0 * g * dpoly + (g * g + dg) * poly);

  const double dr_drho = m * delta * rho;
  const double d2r_drho2 = m * delta;

  const double norm = state.norm_constant;
  const double radial = norm * f;
  const double d_radial = norm * df * dr_drho;
  const double d2_radial = norm * (d2f * dr_drho * dr_drho + df * d2r_drho2);

  const double linear =
      -(p.quad_moment() * p.lambda() / m) * l + p.omega_rot() * l;  // from i l d/dphi terms
  const double terms[] = {
      d2_radial,
      d_radial / rho,
      -(static_cast<double>(l) * l) / (rho * rho) * radial,
      -(m * m * delta * delta / 4.0) * rho * rho * radial,
      2.0 * m * (energy + linear) * radial,
  };
  OdeResidual out;
  for (double t : terms) {
    out.value += t;
    out.scale = std::max(out.scale, std::abs(t));
  }
  return out;
}

OdeResidual ode_residual(const RadialState& state, double rho) {
  return ode_residual(state, rho, energy_level(state.params, state.qn));
}

}  // namespace mqlandau::wavefn
