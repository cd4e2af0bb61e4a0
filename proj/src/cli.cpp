#include "mqlandau/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <limits>
#include <sstream>

#include <fmt/core.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "mqlandau/eigensolve.hpp"
#include "mqlandau/errors.hpp"
#include "mqlandau/fields.hpp"
#include "mqlandau/grid.hpp"
#include "mqlandau/wavefn.hpp"

namespace mqlandau::cli {

namespace {

constexpr double kDefaultFieldsRhoMax = 5.0;
constexpr int kMinNodeGridPoints = 4096;

void add_param_meta(Table& t, const SystemParams& p) {
  t.meta.emplace_back("units", std::string("hbar=c=1"));
  t.meta.emplace_back("mass", p.mass());
  t.meta.emplace_back("quad_moment", p.quad_moment());
  t.meta.emplace_back("lambda", p.lambda());
  t.meta.emplace_back("omega_rot", p.omega_rot());
  t.meta.emplace_back("omega", cyclotron_frequency(p));
}

void check_ranges(const RunConfig& c) {
  if (c.n_max < 0) {
    throw DomainError(fmt::format("--n-max must be >= 0, got {}", c.n_max));
  }
  if (c.l_min > c.l_max) {
    throw DomainError(fmt::format("--l-min {} exceeds --l-max {}", c.l_min, c.l_max));
  }
}

nlohmann::json to_json(const Value& v) {
  return std::visit([](const auto& x) { return nlohmann::json(x); }, v);
}

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") {
    return OutputFormat::kCsv;
  }
  if (s == "json") {
    return OutputFormat::kJson;
  }
  throw DomainError(fmt::format("unknown output format '{}' (csv|json)", s));
}

}  // namespace

std::vector<double> SweepSpec::values() const {
  std::vector<double> out(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    out[static_cast<std::size_t>(i)] =
        i == steps - 1 ? stop : start + (stop - start) * i / (steps - 1);
  }
  return out;
}

SweepSpec parse_sweep(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? first : text.find(':', first + 1);
  if (second == std::string::npos || text.find(':', second + 1) != std::string::npos) {
    throw DomainError(fmt::format("--sweep expects start:stop:steps, got '{}'", text));
  }
  SweepSpec s;
  try {
    std::size_t used = 0;
    const auto a = text.substr(0, first);
    const auto b = text.substr(first + 1, second - first - 1);
    const auto c = text.substr(second + 1);
    s.start = std::stod(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    s.stop = std::stod(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
    s.steps = std::stoi(c, &used);
    if (used != c.size()) throw std::invalid_argument(c);
  } catch (const std::logic_error&) {
    throw DomainError(fmt::format("--sweep expects start:stop:steps, got '{}'", text));
  }
  if (s.steps < 2) {
    throw DomainError(fmt::format("--sweep needs at least 2 steps, got {}", s.steps));
  }
  return s;
}

std::string format_value(const Value& v) {
  if (const auto* d = std::get_if<double>(&v)) {
    return fmt::format("{:.17g}", *d + 0.0);  // folds -0 into 0
  }
  if (const auto* i = std::get_if<long long>(&v)) {
    return fmt::format("{}", *i);
  }
  return std::get<std::string>(v);
}

void write_csv(const Table& table, std::ostream& out) {
  for (const auto& [key, value] : table.meta) {
    out << "# " << key << ": " << format_value(value) << '\n';
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << format_value(row[i]);
    }
    out << '\n';
  }
}

void write_json(const Table& table, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["meta"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : table.meta) {
    doc["meta"][key] = to_json(value);
  }
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      obj[table.columns[i]] = to_json(row[i]);
    }
    doc["rows"].push_back(std::move(obj));
  }
  out << doc.dump(2) << '\n';
}

CommandResult cmd_spectrum(const RunConfig& config) {
  check_ranges(config);
  CommandResult result;
  auto& t = result.table;
  add_param_meta(t, config.params);
  const double delta = effective_frequency(config.params);
  t.meta.emplace_back("delta", delta);
  t.columns = {"n", "l", "energy", "page_werner_term", "delta"};
  const auto spec = spectrum(config.params, config.n_max, {config.l_min, config.l_max});
  for (const auto& line : spec.lines) {
    t.rows.push_back({static_cast<long long>(line.n), static_cast<long long>(line.l), line.energy,
                      page_werner_term(config.params, line.l), delta});
  }
  return result;
}

CommandResult cmd_sweep(const RunConfig& config) {
  check_ranges(config);
  if (!config.sweep) {
    throw DomainError("sweep requires --sweep start:stop:steps");
  }
  CommandResult result;
  auto& t = result.table;
  add_param_meta(t, config.params);
  t.meta.emplace_back("degeneracy_tol", kDefaultDegeneracyTol);
  t.columns = {"omega_rot", "n", "l", "energy", "groups", "status"};
  const double nan = std::numeric_limits<double>::quiet_NaN();
  int computed = 0;
  for (double omega_rot : config.sweep->values()) {
    std::optional<SystemParams> point;
    try {
      point = config.params.with_omega_rot(omega_rot);
    } catch (const DomainError&) {
      t.rows.push_back({omega_rot, nan, nan, nan, 0LL, std::string("skipped_out_of_domain")});
      continue;
    }
    ++computed;
    const auto spec = spectrum(*point, config.n_max, {config.l_min, config.l_max});
    const auto groups = static_cast<long long>(degeneracy_groups(spec).size());
    for (const auto& line : spec.lines) {
      t.rows.push_back({omega_rot, static_cast<long long>(line.n), static_cast<long long>(line.l),
                        line.energy, groups, std::string("ok")});
    }
  }
  if (computed == 0) {
    result.exit_code = kEmptyResult;
    result.diagnostic = "every sweep point lies outside the bound-state regime Omega > -omega/4";
  }
  return result;
}

CommandResult cmd_verify(const RunConfig& config) {
  check_ranges(config);
  if (config.grid_points < 32) {
    throw DomainError(fmt::format("--grid-points must be >= 32, got {}", config.grid_points));
  }
  const int coarse_points = config.grid_points / 2;
  const int k = config.n_max + 1;

  struct ChannelResult {
    int l;
    double rho_max;
    std::vector<eigensolve::ExtrapolatedLevel> levels;
  };
  std::vector<std::future<ChannelResult>> jobs;
  for (int l = config.l_min; l <= config.l_max; ++l) {
    jobs.push_back(std::async(std::launch::async, [&config, l, coarse_points, k] {
      const double rho_max =
          config.rho_max.value_or(eigensolve::default_rho_max(config.params, l, config.n_max));
      const auto grid = RadialGrid::cell_centered(rho_max, coarse_points);
      return ChannelResult{l, rho_max, eigensolve::solve_extrapolated(config.params, l, grid, k)};
    }));
  }

  CommandResult result;
  auto& t = result.table;
  add_param_meta(t, config.params);
  t.meta.emplace_back("delta", effective_frequency(config.params));
  t.meta.emplace_back("grid_layout", std::string("cell_centered"));
  t.meta.emplace_back("grid_points_coarse", static_cast<long long>(coarse_points));
  t.meta.emplace_back("grid_points_fine", static_cast<long long>(2 * coarse_points));
  t.meta.emplace_back("tol", config.tol);
  t.columns = {"n", "l", "analytic", "numeric", "abs_err", "conv_order"};

  double worst = -1.0;
  std::string worst_label;
  std::string labeling_failures;
  for (auto& job : jobs) {
    const auto channel = job.get();
    for (const auto& level : channel.levels) {
      if (level.nodes != level.index) {
        labeling_failures += fmt::format(" (l={}, level {}: {} nodes)", channel.l, level.index,
                                         level.nodes);
      }
      const int n = level.nodes;
      const double analytic = energy_level(config.params, {std::max(n, 0), channel.l});
      const double abs_err = std::abs(level.extrapolated - analytic);
      const double order =
          eigensolve::convergence_order(level.coarse - analytic, level.fine - analytic);
      t.rows.push_back({static_cast<long long>(n), static_cast<long long>(channel.l), analytic,
                        level.extrapolated, abs_err, order});
      if (!(abs_err < config.tol) && abs_err > worst) {
        worst = abs_err;
        worst_label = fmt::format("n={}, l={}: abs_err {:.3e} >= tol {:.3e}", n, channel.l,
                                  abs_err, config.tol);
      }
    }
  }
  if (!labeling_failures.empty()) {
    result.exit_code = kVerificationFailure;
    result.diagnostic = "node-count labeling failed:" + labeling_failures;
  } else if (worst >= 0.0) {
    result.exit_code = kVerificationFailure;
    result.diagnostic = "verification failed; worst offender " + worst_label;
  }
  t.meta.emplace_back("verdict", std::string(result.exit_code == kSuccess ? "pass" : "fail"));
  return result;
}

CommandResult cmd_wavefunction(const RunConfig& config) {
  if (config.samples < 2) {
    throw DomainError(fmt::format("--samples must be >= 2, got {}", config.samples));
  }
  const QuantumNumbers qn{config.n, config.l};
  const auto state = wavefn::normalize(config.params, qn);
  const double rho_cut =
      wavefn::physical_radius(config.params, wavefn::integration_cutoff(qn));
  const double rho_max = config.rho_max.value_or(rho_cut);
  if (!(rho_max > 0.0)) {
    throw DomainError(fmt::format("--rho-max must be positive, got {}", rho_max));
  }
  const auto node_grid = RadialGrid::vertex(rho_cut * 1e-6, rho_cut,
                                            std::max(kMinNodeGridPoints, 64 * (qn.n + 1)));

  CommandResult result;
  auto& t = result.table;
  add_param_meta(t, config.params);
  t.meta.emplace_back("n", static_cast<long long>(qn.n));
  t.meta.emplace_back("l", static_cast<long long>(qn.l));
  t.meta.emplace_back("energy", energy_level(config.params, qn));
  t.meta.emplace_back("norm_constant", state.norm_constant);
  t.meta.emplace_back("normalization", wavefn::normalization_integral(state));
  t.meta.emplace_back("nodes", static_cast<long long>(wavefn::node_count(state, node_grid)));
  t.columns = {"rho", "R", "probability_density"};
  for (int i = 0; i < config.samples; ++i) {
    const double rho = i == config.samples - 1 ? rho_max : rho_max * i / (config.samples - 1);
    const double value = wavefn::radial_value(state, rho);
    t.rows.push_back({rho, value, rho * value * value});
  }
  return result;
}

CommandResult cmd_fields(const RunConfig& config) {
  if (config.samples < 2) {
    throw DomainError(fmt::format("--samples must be >= 2, got {}", config.samples));
  }
  const double rho_max = config.rho_max.value_or(kDefaultFieldsRhoMax);
  if (!(rho_max > 0.0)) {
    throw DomainError(fmt::format("--rho-max must be positive, got {}", rho_max));
  }
  const auto& p = config.params;
  const fields::RadialField potential = [&p](double rho) {
    return fields::effective_vector_potential(p.quad_moment(), p.lambda(), rho);
  };

  CommandResult result;
  auto& t = result.table;
  add_param_meta(t, p);
  t.columns = {"rho", "E_rho", "A_phi", "B_eff_z_numeric"};
  std::vector<double> samples;
  double b_min = std::numeric_limits<double>::infinity();
  double b_max = -b_min;
  for (int i = 0; i < config.samples; ++i) {
    const double rho = rho_max * (i + 1) / config.samples;
    samples.push_back(rho);
    const double b = fields::curl_z_numeric(potential, rho, fields::default_step(rho));
    b_min = std::min(b_min, b);
    b_max = std::max(b_max, b);
    t.rows.push_back({rho, fields::electric_field(p.lambda(), rho).rho_comp,
                      potential(rho).phi_comp, b});
  }
  const auto check = fields::electrostatic_check(p.lambda(), samples);
  t.meta.emplace_back("m_omega", p.mass() * cyclotron_frequency(p));
  t.meta.emplace_back("B_eff_spread", b_max - b_min);
  t.meta.emplace_back("electrostatic_max_violation", check.max_violation);
  t.meta.emplace_back("electrostatic", std::string(check.passed ? "pass" : "fail"));
  return result;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "Landau-type levels of an atom with a magnetic quadrupole moment in a rotating frame.\n"
      "Natural units: hbar = c = 1. Energies, frequencies and lengths share one scale.",
      "mqlandau"};
  app.set_config("--config", "", "Flat key=value file; command-line flags win");
  app.require_subcommand(1);
  app.fallthrough();

  double mass = 1.0;
  double quad_moment = 1.0;
  double lambda = 1.0;
  double omega_rot = 0.0;
  RunConfig config;
  std::string sweep_text;
  std::string format_text = "csv";
  std::string out_path;
  double rho_max = 0.0;

  app.add_option("--mass", mass, "Particle mass m")->capture_default_str();
  app.add_option("--quad-moment", quad_moment, "Quadrupole moment M")->capture_default_str();
  app.add_option("--lambda", lambda, "Charge-density parameter lambda")->capture_default_str();
  app.add_option("--omega-rot", omega_rot, "Rotation rate Omega about z")->capture_default_str();
  app.add_option("--n-max", config.n_max, "Largest radial quantum number")->capture_default_str();
  app.add_option("--l-min", config.l_min, "Smallest angular momentum")->capture_default_str();
  app.add_option("--l-max", config.l_max, "Largest angular momentum")->capture_default_str();
  app.add_option("--sweep", sweep_text, "Omega sweep start:stop:steps");
  app.add_option("--grid-points", config.grid_points, "Fine grid size for verify")
      ->capture_default_str();
  app.add_option("--rho-max", rho_max, "Radial extent (command-specific default)");
  app.add_option("--tol", config.tol, "Verification tolerance")->capture_default_str();
  app.add_option("--format", format_text, "csv|json")->capture_default_str();
  app.add_option("--out", out_path, "Write output to PATH instead of stdout");
  app.add_option("--n", config.n, "Radial quantum number (wavefunction)")->capture_default_str();
  app.add_option("--l", config.l, "Angular momentum (wavefunction)")->capture_default_str();
  app.add_option("--samples", config.samples, "Sample count (wavefunction, fields)")
      ->capture_default_str();

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Analytic energy levels");
  auto* sweep_cmd = app.add_subcommand("sweep", "Levels and degeneracy groups across Omega");
  auto* verify_cmd = app.add_subcommand("verify", "Analytic levels against the numeric eigensolve");
  auto* wave_cmd = app.add_subcommand("wavefunction", "Normalized radial wavefunction");
  auto* fields_cmd = app.add_subcommand("fields", "Field configuration and curl checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }

  CommandResult result;
  try {
    config.params = SystemParams(mass, quad_moment, lambda, omega_rot);
    config.format = parse_format(format_text);
    if (!sweep_text.empty()) {
      config.sweep = parse_sweep(sweep_text);
    }
    if (app.count("--rho-max") > 0) {
      config.rho_max = rho_max;
    }
    if (!out_path.empty()) {
      config.output_path = out_path;
    }
    if (*spectrum_cmd) {
      result = cmd_spectrum(config);
    } else if (*sweep_cmd) {
      result = cmd_sweep(config);
    } else if (*verify_cmd) {
      result = cmd_verify(config);
    } else if (*wave_cmd) {
      result = cmd_wavefunction(config);
    } else if (*fields_cmd) {
      result = cmd_fields(config);
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailure;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (config.output_path) {
    file.open(*config.output_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot open " << *config.output_path << " for writing\n";
      return kDomainError;
    }
    sink = &file;
  }
  if (config.format == OutputFormat::kJson) {
    write_json(result.table, *sink);
  } else {
    write_csv(result.table, *sink);
  }
  if (!result.diagnostic.empty()) {
    err << result.diagnostic << '\n';
  }
  return result.exit_code;
}

}  // namespace mqlandau::cli
