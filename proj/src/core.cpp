#include "mqlandau/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <tuple>

#include <fmt/core.h>

#include "mqlandau/errors.hpp"

namespace mqlandau {

SystemParams::SystemParams(double mass, double quad_moment, double lambda, double omega_rot)
    : mass_(mass), quad_moment_(quad_moment), lambda_(lambda), omega_rot_(omega_rot) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw DomainError(fmt::format("mass must be positive and finite, got {}", mass));
  }
  if (!(quad_moment > 0.0) || !std::isfinite(quad_moment)) {
    throw DomainError(fmt::format("quadrupole moment must be positive and finite, got {}",
                                  quad_moment));
  }
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DomainError(fmt::format("lambda must be positive and finite, got {}", lambda));
  }
  if (!std::isfinite(omega_rot)) {
    throw DomainError("rotation rate must be finite");
  }
  // Validates the radicand.
  (void)effective_frequency(cyclotron_frequency(*this), omega_rot);
}

QuantumNumbers::QuantumNumbers(int n_radial, int l_angular) : n(n_radial), l(l_angular) {
  if (n_radial < 0) {
    throw DomainError(fmt::format("radial quantum number must be >= 0, got {}", n_radial));
  }
}

double cyclotron_frequency(const SystemParams& params) noexcept {
  return 2.0 * params.quad_moment() * params.lambda() / params.mass();
}

double effective_frequency(double omega, double omega_rot) {
  const double radicand = omega * omega + 4.0 * omega_rot * omega;
  if (!(radicand > 0.0)) {
    throw DomainError(fmt::format(
        "no bound-state regime: radicand omega^2 + 4*Omega*omega = {} <= 0 "
        "(omega = {}, Omega = {}; Omega must exceed -omega/4 = {})",
        radicand, omega, omega_rot, -omega / 4.0));
  }
  return std::sqrt(radicand);
}

double effective_frequency(const SystemParams& params) {
  return effective_frequency(cyclotron_frequency(params), params.omega_rot());
}

double energy_level_with_sign(const SystemParams& params, QuantumNumbers qn, int sign) {
  if (sign != 1 && sign != -1) {
    throw DomainError(fmt::format("sign convention must be +1 or -1, got {}", sign));
  }
  const double omega = cyclotron_frequency(params);
  const double delta = effective_frequency(omega, params.omega_rot());
  const double l = qn.l;
  const double radial = delta * (qn.n + 0.5 * std::abs(qn.l) + 0.5);
  return radial + sign * 0.5 * omega * l + page_werner_term(params, qn.l);
}

double energy_level(const SystemParams& params, QuantumNumbers qn) {
  return energy_level_with_sign(params, qn, kCyclotronSign);
}

double page_werner_term(const SystemParams& params, int l) noexcept {
  return -params.omega_rot() * l;
}

Spectrum spectrum(const SystemParams& params, int n_max, AngularRange l_range) {
  if (n_max < 0) {
    throw DomainError(fmt::format("n_max must be >= 0, got {}", n_max));
  }
  if (l_range.min > l_range.max) {
    throw DomainError(fmt::format("empty angular range [{}, {}]", l_range.min, l_range.max));
  }
  Spectrum out;
  out.lines.reserve(static_cast<std::size_t>(n_max + 1) *
                    static_cast<std::size_t>(l_range.max - l_range.min + 1));
  for (int n = 0; n <= n_max; ++n) {
    for (int l = l_range.min; l <= l_range.max; ++l) {
      out.lines.push_back({n, l, energy_level(params, {n, l})});
    }
  }
  std::sort(out.lines.begin(), out.lines.end(), [](const SpectrumLine& a, const SpectrumLine& b) {
    return std::tie(a.energy, a.n, a.l) < std::tie(b.energy, b.n, b.l);
  });
  return out;
}

std::vector<DegeneracyGroup> degeneracy_groups(const Spectrum& spec, double tol) {
  if (!(tol > 0.0)) {
    throw DomainError(fmt::format("degeneracy tolerance must be positive, got {}", tol));
  }
  std::vector<SpectrumLine> lines = spec.lines;
  std::stable_sort(lines.begin(), lines.end(),
                   [](const SpectrumLine& a, const SpectrumLine& b) { return a.energy < b.energy; });

  std::vector<DegeneracyGroup> groups;
  for (const auto& line : lines) {
    if (groups.empty() || line.energy - groups.back().energy >= tol) {
      groups.push_back({line.energy, {}});
    }
    groups.back().members.emplace_back(line.n, line.l);
  }
  return groups;
}

}  // namespace mqlandau
