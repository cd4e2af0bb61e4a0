#pragma once

// Analytic spectrum of a neutral atom with a magnetic quadrupole moment in the
// Landau-type field configuration, observed from a frame rotating about z.
//
// Natural units throughout: hbar = c = 1.  The scalar potential of the
// single-particle Hamiltonian is zero for this configuration.

#include <compare>
#include <utility>
#include <vector>

namespace mqlandau {

/// Sign s of the linear cyclotron term s*(omega/2)*l in the energy levels.
///
/// Acting with the azimuthal terms of the rotating-frame Hamiltonian,
/// -i(M lambda/m) d/dphi + i Omega d/dphi, on e^{i l phi} gives
/// +(omega/2) l - Omega l, so s = +1.  The numeric diagonalization in
/// eigensolve applies those coefficients independently and its tests pin
/// this value.  With s = +1 the non-rotating degenerate branch is l <= 0.
inline constexpr int kCyclotronSign = +1;

/// Physical inputs.  Construction validates the bound-state regime
/// omega^2 + 4 Omega omega > 0 and throws DomainError otherwise.
class SystemParams {
 public:
  SystemParams(double mass, double quad_moment, double lambda, double omega_rot);

  [[nodiscard]] double mass() const noexcept { return mass_; }
  [[nodiscard]] double quad_moment() const noexcept { return quad_moment_; }
  [[nodiscard]] double lambda() const noexcept { return lambda_; }
  [[nodiscard]] double omega_rot() const noexcept { return omega_rot_; }

  /// Same system observed at a different rotation rate.
  [[nodiscard]] SystemParams with_omega_rot(double omega_rot) const {
    return {mass_, quad_moment_, lambda_, omega_rot};
  }

  friend bool operator==(const SystemParams&, const SystemParams&) = default;

 private:
  double mass_;
  double quad_moment_;
  double lambda_;
  double omega_rot_;
};

struct QuantumNumbers {
  int n = 0;  // radial, n >= 0
  int l = 0;  // angular momentum

  QuantumNumbers() = default;
  QuantumNumbers(int n_radial, int l_angular);

  friend auto operator<=>(const QuantumNumbers&, const QuantumNumbers&) = default;
};

struct SpectrumLine {
  int n = 0;
  int l = 0;
  double energy = 0.0;

  friend bool operator==(const SpectrumLine&, const SpectrumLine&) = default;
};

struct Spectrum {
  std::vector<SpectrumLine> lines;  // sorted by energy, then (n, l)

  [[nodiscard]] bool empty() const noexcept { return lines.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return lines.size(); }
};

struct DegeneracyGroup {
  double energy = 0.0;  // lowest member energy
  std::vector<std::pair<int, int>> members;  // (n, l)
};

/// Closed integer interval [min, max] of angular momenta.
struct AngularRange {
  int min = 0;
  int max = 0;
};

/// Absolute grouping tolerance for analytic spectra; numeric spectra need a
/// looser value matching their discretization error.
inline constexpr double kDefaultDegeneracyTol = 1e-9;

/// omega = 2 M lambda / m.
[[nodiscard]] double cyclotron_frequency(const SystemParams& params) noexcept;

/// delta = sqrt(omega^2 + 4 Omega omega); throws DomainError when the radicand
/// is not strictly positive.
[[nodiscard]] double effective_frequency(double omega, double omega_rot);
[[nodiscard]] double effective_frequency(const SystemParams& params);

/// E_{n,l} = delta (n + |l|/2 + 1/2) + s (omega/2) l - Omega l, s = kCyclotronSign.
[[nodiscard]] double energy_level(const SystemParams& params, QuantumNumbers qn);

/// Same formula with an explicit sign s in {-1, +1}; used to arbitrate the
/// sign against the numeric spectrum.
[[nodiscard]] double energy_level_with_sign(const SystemParams& params, QuantumNumbers qn,
                                            int sign);

/// Rotation/angular-momentum coupling -Omega l.
[[nodiscard]] double page_werner_term(const SystemParams& params, int l) noexcept;

/// All levels for 0 <= n <= n_max and l in l_range; throws DomainError when
/// n_max < 0 or the range is inverted.
[[nodiscard]] Spectrum spectrum(const SystemParams& params, int n_max, AngularRange l_range);

/// Greedy partition of the energy-sorted lines: a group closes as soon as a
/// line is at least tol above the group's lowest energy, so every pair inside
/// a group differs by less than tol.
[[nodiscard]] std::vector<DegeneracyGroup> degeneracy_groups(const Spectrum& spec,
                                                             double tol = kDefaultDegeneracyTol);

}  // namespace mqlandau
