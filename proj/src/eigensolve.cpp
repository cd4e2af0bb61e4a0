#include "mqlandau/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <limits>
#include <random>

#include <fmt/core.h>

#include "mqlandau/errors.hpp"

namespace mqlandau::eigensolve {

namespace {

constexpr double kBisectionRelWidth = 1e-12;
constexpr int kBisectionCap = 300;
constexpr double kInverseIterationShift = 1e-10;
constexpr int kInverseIterationSweeps = 3;
constexpr double kTurningPointMargin = 80.0;

// In-place LU with partial pivoting of a tridiagonal matrix (row interchanges
// fill in a second superdiagonal), followed by one solve.
std::vector<double> solve_shifted(const TridiagonalOperator& op, double shift,
                                  std::vector<double> rhs) {
  const auto n = static_cast<std::size_t>(op.size());
  std::vector<double> d(n);
  std::vector<double> dl(op.off_diagonal);
  std::vector<double> du(op.off_diagonal);
  std::vector<double> du2(n > 2 ? n - 2 : 0, 0.0);
  std::vector<bool> swapped(n, false);
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = op.diagonal[i] - shift;
    norm = std::max(norm, std::abs(d[i]));
  }
  for (double e : op.off_diagonal) {
    norm = std::max(norm, std::abs(e));
  }
  const double tiny = std::numeric_limits<double>::epsilon() * std::max(norm, 1.0);

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(d[i]) >= std::abs(dl[i])) {
      if (d[i] == 0.0) {
        d[i] = tiny;
      }
      const double fact = dl[i] / d[i];
      dl[i] = fact;
      d[i + 1] -= fact * du[i];
    } else {
      const double fact = d[i] / dl[i];
      d[i] = dl[i];
      dl[i] = fact;
      const double temp = du[i];
      du[i] = d[i + 1];
      d[i + 1] = temp - fact * d[i + 1];
      if (i + 2 < n) {
        du2[i] = du[i + 1];
        du[i + 1] = -fact * du[i + 1];
      }
      swapped[i] = true;
    }
  }
  if (n > 0 && d[n - 1] == 0.0) {
    d[n - 1] = tiny;
  }

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (swapped[i]) {
      const double temp = rhs[i];
      rhs[i] = rhs[i + 1];
      rhs[i + 1] = temp - dl[i] * rhs[i];
    } else {
      rhs[i + 1] -= dl[i] * rhs[i];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    double v = rhs[k];
    if (k + 1 < n) {
      v -= du[k] * rhs[k + 1];
    }
    if (k + 2 < n) {
      v -= du2[k] * rhs[k + 2];
    }
    rhs[k] = v / d[k];
  }
  return rhs;
}

}  // namespace

std::pair<double, double> TridiagonalOperator::gershgorin() const {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  const auto n = diagonal.size();
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) {
      radius += std::abs(off_diagonal[i - 1]);
    }
    if (i + 1 < n) {
      radius += std::abs(off_diagonal[i]);
    }
    lo = std::min(lo, diagonal[i] - radius);
    hi = std::max(hi, diagonal[i] + radius);
  }
  return {lo, hi};
}

double confinement_coefficient(const SystemParams& params) noexcept {
  const double coupling = params.quad_moment() * params.lambda();
  return coupling * coupling / (2.0 * params.mass()) + coupling * params.omega_rot();
}

double azimuthal_offset(const SystemParams& params, int l) {
  using namespace std::complex_literals;
  const double coupling = params.quad_moment() * params.lambda();
  // Coefficient of d/dphi in the Hamiltonian, applied to d/dphi e^{i l phi} = i l e^{i l phi}.
  const std::complex<double> coefficient = -1.0i * (coupling / params.mass()) +
                                           1.0i * params.omega_rot();
  const std::complex<double> eigenvalue = coefficient * (1.0i * static_cast<double>(l));
  return eigenvalue.real();
}

RadialOperator build_operator(const SystemParams& params, int l, const RadialGrid& grid) {
  const double confinement = confinement_coefficient(params);
  if (!(confinement > 0.0)) {
    throw DomainError(fmt::format("no confining potential: rho^2 coefficient {} <= 0",
                                  confinement));
  }
  const double m = params.mass();
  const double h = grid.spacing();
  const double kinetic = 1.0 / (2.0 * m * h * h);
  const double l2 = static_cast<double>(l) * l;
  const auto n = static_cast<std::size_t>(grid.n_points());

  RadialOperator out;
  out.l = l;
  out.energy_offset = azimuthal_offset(params, l);
  auto& diag = out.matrix.diagonal;
  auto& off = out.matrix.off_diagonal;
  diag.resize(n);
  off.resize(n - 1);

  if (grid.layout() == GridLayout::kVertex) {
    for (std::size_t i = 0; i < n; ++i) {
      const double rho = grid.point(static_cast<int>(i));
      diag[i] = 2.0 * kinetic + (l2 - 0.25) / (2.0 * m * rho * rho) + confinement * rho * rho;
    }
    std::fill(off.begin(), off.end(), -kinetic);
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const double rho = grid.point(static_cast<int>(i));
      const double inner_face = static_cast<double>(i) * h;
      const double outer_face = static_cast<double>(i + 1) * h;
      diag[i] = kinetic * (inner_face + outer_face) / rho + l2 / (2.0 * m * rho * rho) +
                confinement * rho * rho;
      if (i + 1 < n) {
        const double next = grid.point(static_cast<int>(i + 1));
        off[i] = -kinetic * outer_face / std::sqrt(rho * next);
      }
    }
  }
  return out;
}

int sturm_count(const TridiagonalOperator& op, double x) {
  const auto n = op.diagonal.size();
  double max_off2 = 0.0;
  for (double e : op.off_diagonal) {
    max_off2 = std::max(max_off2, e * e);
  }
  const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, max_off2);

  int count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double coupling = i == 0 ? 0.0 : op.off_diagonal[i - 1] * op.off_diagonal[i - 1];
    q = op.diagonal[i] - x - (i == 0 ? 0.0 : coupling / q);
    if (std::abs(q) < pivmin) {
      q = pivmin;  // an exact eigenvalue at x is not strictly below it
    }
    if (q < 0.0) {
      ++count;
    }
  }
  return count;
}

std::vector<double> lowest_eigenvalues(const TridiagonalOperator& op, int k) {
  if (k < 1 || k > op.size()) {
    throw DomainError(
        fmt::format("requested {} eigenvalues of a {}x{} operator", k, op.size(), op.size()));
  }
  const auto [lower, upper] = op.gershgorin();
  const double width =
      kBisectionRelWidth * std::max({1.0, std::abs(lower), std::abs(upper)});

  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(k));
  double floor = lower;
  for (int j = 0; j < k; ++j) {
    // Invariant: count(lo) <= j < count(hi).
    double lo = floor;
    double hi = upper + width;
    int iter = 0;
    while (hi - lo > width) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) {
        break;
      }
      if (sturm_count(op, mid) > j) {
        hi = mid;
      } else {
        lo = mid;
      }
      if (++iter > kBisectionCap) {
        throw ConvergenceError(fmt::format("bisection for eigenvalue {} exceeded {} steps", j,
                                           kBisectionCap));
      }
    }
    out.push_back(0.5 * (lo + hi));
    floor = lo;
  }
  return out;
}

std::vector<double> eigenvector(const TridiagonalOperator& op, double eigenvalue) {
  const auto n = static_cast<std::size_t>(op.size());
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> start(n);
  for (auto& v : start) {
    v = dist(rng);
  }
  const double shift = eigenvalue + kInverseIterationShift * std::max(1.0, std::abs(eigenvalue));
  // A single sweep leaves ~1e-10 contamination in the far tail, enough to fake nodes.
  std::vector<double> v = std::move(start);
  for (int sweep = 0; sweep < kInverseIterationSweeps; ++sweep) {
    v = solve_shifted(op, shift, std::move(v));
    double norm = 0.0;
    for (double x : v) {
      norm += x * x;
    }
    norm = std::sqrt(norm);
    if (!(norm > 0.0) || !std::isfinite(norm)) {
      throw ConvergenceError("inverse iteration produced a degenerate vector");
    }
    for (auto& x : v) {
      x /= norm;
    }
  }
  return v;
}

int sign_changes(const std::vector<double>& v, double rel_floor) {
  double peak = 0.0;
  for (double x : v) {
    peak = std::max(peak, std::abs(x));
  }
  const double floor = rel_floor * peak;
  int changes = 0;
  int last = 0;
  for (double x : v) {
    if (std::abs(x) <= floor) {
      continue;
    }
    const int sign = x > 0.0 ? 1 : -1;
    if (last != 0 && sign != last) {
      ++changes;
    }
    last = sign;
  }
  return changes;
}

NumericSpectrum solve_radial(const SystemParams& params, int l, const RadialGrid& grid, int k) {
  const auto op = build_operator(params, l, grid);
  const auto channel = lowest_eigenvalues(op.matrix, k);
  NumericSpectrum out{l, {}, {}, grid};
  out.energies.reserve(channel.size());
  out.nodes.reserve(channel.size());
  for (double e : channel) {
    out.energies.push_back(e + op.energy_offset);
    out.nodes.push_back(sign_changes(eigenvector(op.matrix, e)));
  }
  return out;
}

double richardson(double e_h, double e_h2) noexcept {
  return (4.0 * e_h2 - e_h) / 3.0;
}

double convergence_order(double err_h, double err_h2) noexcept {
  return std::log2(std::abs(err_h) / std::abs(err_h2));
}

double default_rho_max(const SystemParams& params, int l, int n_max) {
  const double confinement = confinement_coefficient(params);
  if (!(confinement > 0.0)) {
    throw DomainError(fmt::format("no confining potential: rho^2 coefficient {} <= 0",
                                  confinement));
  }
  // m delta = sqrt(8 m c), with c = m delta^2 / 8.
  const double m_delta = std::sqrt(8.0 * params.mass() * confinement);
  const double r = std::abs(l) + 4.0 * n_max + kTurningPointMargin;
  return std::sqrt(2.0 * r / m_delta);
}

std::vector<ExtrapolatedLevel> solve_extrapolated(const SystemParams& params, int l,
                                                  const RadialGrid& grid, int k) {
  const auto coarse = solve_radial(params, l, grid, k);
  const auto fine = solve_radial(params, l, grid.refined(), k);
  std::vector<ExtrapolatedLevel> out;
  out.reserve(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) {
    out.push_back({static_cast<int>(i), fine.nodes[i], coarse.energies[i], fine.energies[i],
                   richardson(coarse.energies[i], fine.energies[i])});
  }
  return out;
}

}  // namespace mqlandau::eigensolve
