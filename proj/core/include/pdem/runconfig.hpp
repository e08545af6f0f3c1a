#ifndef PDEM_RUNCONFIG_HPP
#define PDEM_RUNCONFIG_HPP

#include <cmath>
#include <string>

#include "pdem/errors.hpp"

namespace pdem::cli {

enum class OutputFormat { csv, json };

// Flat parameter block shared by the CLI subcommands. Optional physics
// parameters stay NaN until set; each command validates what it needs.
struct RunConfig {
  double alpha = 1.0;
  double lambda = std::numeric_limits<double>::quiet_NaN();
  double lambda_prime = std::numeric_limits<double>::quiet_NaN();
  double z_re = 3.0;
  double z_im = 0.0;
  int trunc = 200;
  double rel_tol = 1e-12;
  std::string out;
  OutputFormat format = OutputFormat::csv;

  bool has_lambda() const { return !std::isnan(lambda); }
  bool has_lambda_prime() const { return !std::isnan(lambda_prime); }
  // lambda' = lambda / (2 alpha) when only lambda was given.
  double effective_lambda_prime() const;
};

// Flat key=value file, one key per line, '#' starts a comment.
RunConfig load_config_file(const std::string& path);
void apply_key_value(RunConfig& cfg, const std::string& key,
                     const std::string& value);

// Floats printed with 17 significant digits (deterministic output files).
std::string fmt17(double x);

}  // namespace pdem::cli

#endif
