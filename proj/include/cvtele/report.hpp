#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cvtele/types.hpp"

namespace cvtele {

/// Bad or inconsistent run configuration (exit code 2).
class ConfigError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// File could not be read or written (exit code 4).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum ExitCode : int { kExitOk = 0, kExitConfig = 2, kExitConvergence = 3, kExitIo = 4 };

enum class Command { Fidelity, Sweep, Optimize, Metrics, Plan, Figure };
enum class OutputFormat { Auto, Csv, Json };
enum class FigureId { Fig1, Fig2, Fig3, Fig4, Fig5, Fig6, Fig7DeltaF, Fig8, Fig9Affinity };

Command parse_command(std::string_view name);
FigureId parse_figure_id(std::string_view name);
std::string_view to_string(Command c);
std::string_view to_string(FigureId id);

struct RunConfig {
  Command command = Command::Fidelity;
  std::vector<std::string> resources{"twin_beam"};
  std::vector<std::string> inputs{"coherent"};
  double r = 1.0;
  double phi = kPi;
  double delta = kPi / 4;
  double theta = 0.0;
  cplx beta{0.3, 0.0};
  double s = 0.8;
  double varphi = 0.0;
  std::vector<double> grid;
  double tol = 1e-10;
  int cutoff = 30;
  std::string method = "moment";
  double gain = 0.01;
  std::string out;
  OutputFormat format = OutputFormat::Auto;
  std::string figure;

  /// Throws ConfigError.
  void validate() const;
};

/// Builds a config from flat string settings (keys are the long flag names
/// without dashes). Unknown keys and unparsable values raise ConfigError.
RunConfig make_run_config(Command command, const std::map<std::string, std::string>& settings);

/// Reads a flat JSON object into string settings; throws IoError or
/// ConfigError.
std::map<std::string, std::string> read_config_file(const std::filesystem::path& path);

/// "a:b:step" (inclusive) or "x1,x2,...".
std::vector<double> parse_grid(std::string_view text);

ResourceSpec resource_from(const RunConfig& cfg, std::string_view family, double r);
InputSpec input_from(const RunConfig& cfg, std::string_view family);

/// Twelve significant digits; non-finite values print as "nan"/"inf".
std::string format_number(double x);

using Cell = std::variant<double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// RFC-4180 quoting, header row first, "\n" line ends.
void write_csv(std::ostream& os, const Table& table);
/// Single record as a JSON object, or a table as {"columns", "rows"}.
void write_json_record(std::ostream& os, const std::vector<std::pair<std::string, Cell>>& record);
void write_json_table(std::ostream& os, const Table& table);

struct FigurePanel {
  std::string suffix;  // "" for single-panel figures, else "I", "II"
  Table table;
};

/// Curves of one figure with the standard parameters (phi = pi, s = 0.8,
/// beta = 0.3).
std::vector<FigurePanel> figure_data(FigureId id);

/// Writes figure CSVs (one per panel, "<stem>_I.csv" etc. for multi-panel
/// figures) plus a "<file>.meta.json" sidecar each. Returns written paths.
std::vector<std::filesystem::path> run_figure(FigureId id, const std::filesystem::path& out_path);

/// Dispatches a command. Writes to cfg.out (plus sidecar) or to `console`
/// when no path is set. Returns the exit code; diagnostics go to `errors`.
int run_config(const RunConfig& cfg, std::ostream& console, std::ostream& errors);

}  // namespace cvtele
