#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qillum::cli {

enum class Subcommand { bounds, opa, roc, snr, wigner, montecarlo, feasibility };
enum class OutputFormat { csv, json };

const char* to_string(Subcommand s);

inline constexpr int kSchemaVersion = 1;

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNumeric = 1;
inline constexpr int kExitValidation = 2;

/// Everything a subcommand needs. Optional fields are required by some
/// subcommands and meaningless to others; validate() decides.
struct RunConfig {
  Subcommand subcommand = Subcommand::bounds;
  std::string output;  // empty: stdout
  std::optional<OutputFormat> format;

  // scenario
  std::optional<double> n_s;
  std::optional<double> n_b;
  std::optional<double> kappa;
  std::optional<double> m;  // integral, but accepted as 1e6 etc.
  double w0 = 0.5;
  std::optional<double> gain;  // OPA gain G; default is the optimal gain

  // M grid for bounds / opa
  double m_min = 1.0;
  double m_max = 1e9;
  int points = 0;  // 0: subcommand default

  // snr
  std::vector<double> pf;
  double snr_db_min = -10.0;
  double snr_db_max = 20.0;

  // wigner
  std::optional<std::string> state;  // vacuum | coherent | thermal | tmsv
  double photons = 0.0;
  double alpha_re = 0.0;
  double alpha_im = 0.0;
  std::optional<std::string> quadratures;
  std::optional<double> extent;

  // montecarlo
  std::optional<std::string> receiver;  // homodyne | opa
  double trials = 100000;
  std::uint64_t seed = 12345;
  unsigned threads = 1;

  // feasibility
  std::optional<double> freq_hz;
  std::optional<double> bandwidth_hz;
  double kappa_i = 1.0;
  double kappa_m = 1.0;
};

/// Throws std::invalid_argument describing the first problem found.
void validate(const RunConfig& config);

OutputFormat effective_format(const RunConfig& config);

struct ParseResult {
  std::optional<RunConfig> config;  // empty when parsing ended the run (help or error)
  int exit_code = kExitOk;
};

/// Parses argv (argv[0] is the program name), merging an optional --config
/// JSON file underneath the flags.
ParseResult parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Validates, computes and writes the result. Returns the exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args followed by run.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qillum::cli
