#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mqlandau/core.hpp"

namespace mqlandau::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kDomainError = 2,           // invalid input or parameters outside the bound-state regime
  kEmptyResult = 3,           // nothing computable (e.g. every sweep point out of domain)
  kVerificationFailure = 4,   // numeric and analytic spectra disagree beyond tolerance
};

enum class OutputFormat { kCsv, kJson };

struct SweepSpec {
  double start = 0.0;
  double stop = 0.0;
  int steps = 2;  // inclusive of both ends, >= 2

  [[nodiscard]] std::vector<double> values() const;
};

/// Parses "start:stop:steps"; throws DomainError on malformed input.
[[nodiscard]] SweepSpec parse_sweep(const std::string& text);

struct RunConfig {
  SystemParams params{1.0, 1.0, 1.0, 0.0};
  int n_max = 3;
  int l_min = -3;
  int l_max = 3;
  std::optional<SweepSpec> sweep;
  int grid_points = 4000;              // fine grid of verify; the coarse grid has half
  std::optional<double> rho_max;       // default depends on the command
  double tol = 1e-4;
  OutputFormat format = OutputFormat::kCsv;
  std::optional<std::string> output_path;
  // wavefunction / fields
  int n = 0;
  int l = 0;
  int samples = 101;
};

using Value = std::variant<double, long long, std::string>;

/// Rows plus metadata, rendered as CSV (metadata in '#' comments) or JSON
/// ({"meta": {...}, "rows": [{...}, ...]}).
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;
  std::vector<std::pair<std::string, Value>> meta;
};

/// Doubles with 17 significant digits.
[[nodiscard]] std::string format_value(const Value& v);
void write_csv(const Table& table, std::ostream& out);
void write_json(const Table& table, std::ostream& out);

struct CommandResult {
  Table table;
  int exit_code = kSuccess;
  std::string diagnostic;  // written to stderr when non-empty
};

[[nodiscard]] CommandResult cmd_spectrum(const RunConfig& config);
[[nodiscard]] CommandResult cmd_sweep(const RunConfig& config);
[[nodiscard]] CommandResult cmd_verify(const RunConfig& config);
[[nodiscard]] CommandResult cmd_wavefunction(const RunConfig& config);
[[nodiscard]] CommandResult cmd_fields(const RunConfig& config);

/// Full front end: args exclude the program name.  Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mqlandau::cli
