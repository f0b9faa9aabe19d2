#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gensmooth::cli {

enum class Command { translate, norm, bestapprox, modulus, verify, sweep };

struct RunConfig {
  Command command = Command::verify;
  std::string function_id;
  double p = 2.0;
  double alpha = 1.0;
  int n = 0;      // bestapprox: single n (0 = use n_max)
  int n_max = 0;  // verify; bestapprox prints rows 1..n_max
  std::vector<double> deltas;
  double t = 0.0;
  std::vector<double> xs;  // translate; empty means the default grid
  int t_grid = 33;
  std::string output_path;  // empty: standard output
  std::string config_path;  // sweep
  bool allow_out_of_hypothesis = false;
  bool degree_probe = false;
  std::optional<double> t_max_override;
  std::optional<std::string> help;  // set when --help was requested
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// args excludes the program name. Throws UsageError naming the offending flag.
RunConfig parse_args(const std::vector<std::string>& args);

/// Runs the command and writes CSV to config.output_path (atomically) or to
/// `out`. Returns 0 on success, 1 on invalid parameters, 2 on numerical
/// failure; diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with the exit-code mapping, for main().
int main_entry(int argc, char** argv);

/// Writes `content` to a temporary file beside `path`, then renames it.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace gensmooth::cli
