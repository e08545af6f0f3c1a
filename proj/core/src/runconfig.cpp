#include "pdem/runconfig.hpp"

#include <cstdio>
#include <fstream>

namespace pdem::cli {

double RunConfig::effective_lambda_prime() const {
  if (has_lambda_prime()) return lambda_prime;
  if (has_lambda()) return lambda / (2.0 * alpha);
  throw ConfigError("neither lambda nor lambda_prime is set");
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("invalid numeric value for '" + key + "': " + v);
  }
}

}  // namespace

void apply_key_value(RunConfig& cfg, const std::string& key,
                     const std::string& value) {
  if (key == "alpha") cfg.alpha = parse_double(key, value);
  else if (key == "lambda") cfg.lambda = parse_double(key, value);
  else if (key == "lambda_prime") cfg.lambda_prime = parse_double(key, value);
  else if (key == "z_re") cfg.z_re = parse_double(key, value);
  else if (key == "z_im") cfg.z_im = parse_double(key, value);
  else if (key == "trunc") cfg.trunc = static_cast<int>(parse_double(key, value));
  else if (key == "rel_tol") cfg.rel_tol = parse_double(key, value);
  else if (key == "out") cfg.out = value;
  else if (key == "format") {
    if (value == "csv") cfg.format = OutputFormat::csv;
    else if (value == "json") cfg.format = OutputFormat::json;
    else throw ConfigError("format must be csv or json, got: " + value);
  } else {
    throw ConfigError("unknown config key: " + key);
  }
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) +
                        " is not key=value: " + line);
    apply_key_value(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

}  // namespace pdem::cli
