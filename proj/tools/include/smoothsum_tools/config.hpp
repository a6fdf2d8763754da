#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "smoothsum/numeric.hpp"
#include "smoothsum/test_function.hpp"

namespace smoothsum::tools {

enum class OutputFormat { csv, json };

/// Every knob of every subcommand. Config files use the same names as the
/// long flags, one key=value per line.
struct RunConfig {
  std::string command;
  cplx alpha{1.0, 0.0};
  int k = 2;
  std::vector<std::uint64_t> N{100};
  std::string f = "gaussian:1,0.4";
  double eta = 4.0;
  double tol = 1e-9;
  double eps = 0.05;
  double tau_max = 3.0;
  int tau_points = 61;
  double u_max = 10.0;
  double step = 0.1;
  double x_max = 10.0;
  std::optional<double> u_cutoff;  // unset: derived from f
  std::uint64_t count_cap = 200'000'000;
  std::uint64_t h_cutoff = 0;
  std::uint64_t n_floor = 20;
  std::string level = "desk";
  std::string out;  // empty: stdout
  OutputFormat format = OutputFormat::csv;
  unsigned threads = 1;
};

/// "re,im" or "re".
cplx parse_complex(const std::string& text);
std::vector<std::uint64_t> parse_n_list(const std::string& text);
double parse_real(const std::string& text);

/// "gaussian:mu,sigma" or "constant" (brute force only).
TestFunction parse_test_function(const std::string& spec, double eta);

/// Lines of a config file turned into "--key value" tokens. Throws ConfigError
/// on malformed lines.
std::vector<std::string> config_tokens(const std::string& text);

/// Canonical key=value text; parsing it back yields the same config.
std::string emit_config(const RunConfig& cfg);

/// FNV-1a over the canonical text without threads and out, as 16 hex digits.
std::string config_hash(const RunConfig& cfg);

std::vector<double> tau_grid(const RunConfig& cfg);

}  // namespace smoothsum::tools
