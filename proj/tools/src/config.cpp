#include "smoothsum_tools/config.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include <fmt/format.h>

#include "smoothsum/error.hpp"

namespace smoothsum::tools {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(trim(cur));
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::string real(double v) { return fmt::format("{:.17g}", v); }

}  // namespace

double parse_real(const std::string& text) {
  const std::string t = trim(text);
  if (t == "inf") return std::numeric_limits<double>::infinity();
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
    throw ConfigError("not a number: '" + text + "'");
  }
  return v;
}

cplx parse_complex(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() == 1) return {parse_real(parts[0]), 0.0};
  if (parts.size() == 2) return {parse_real(parts[0]), parse_real(parts[1])};
  throw ConfigError("complex value must be 're,im': '" + text + "'");
}

std::vector<std::uint64_t> parse_n_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const auto& p : split(text, ',')) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(p.data(), p.data() + p.size(), v);
    if (ec != std::errc{} || ptr != p.data() + p.size() || p.empty()) {
      throw ConfigError("N list entries must be positive integers: '" + text + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError("N list is empty");
  return out;
}

TestFunction parse_test_function(const std::string& spec, double eta) {
  if (spec == "constant") return TestFunction::constant_one();
  const std::string prefix = "gaussian:";
  if (spec.rfind(prefix, 0) != 0) {
    throw ConfigError("test function must be 'gaussian:mu,sigma' or 'constant': '" + spec + "'");
  }
  const auto parts = split(spec.substr(prefix.size()), ',');
  if (parts.size() != 2) throw ConfigError("gaussian needs mu,sigma: '" + spec + "'");
  const double mu = parse_real(parts[0]);
  const double sigma = parse_real(parts[1]);
  if (!(sigma > 0.0) || !std::isfinite(sigma) || !std::isfinite(mu)) {
    throw ConfigError("gaussian sigma must be positive and finite");
  }
  if (!(eta > 0.0)) throw ConfigError("eta must be positive");
  return TestFunction::gaussian(mu, sigma, eta);
}

std::vector<std::string> config_tokens(const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ConfigError(fmt::format("config line {}: expected key=value", lineno));
    }
    const std::string key = trim(t.substr(0, eq));
    if (key == "command" || key == "config") continue;
    tokens.push_back("--" + key);
    tokens.push_back(trim(t.substr(eq + 1)));
  }
  return tokens;
}

std::string emit_config(const RunConfig& cfg) {
  std::string n_list;
  for (std::size_t i = 0; i < cfg.N.size(); ++i) {
    n_list += (i ? "," : "") + std::to_string(cfg.N[i]);
  }
  std::string s;
  s += "command=" + cfg.command + "\n";
  s += "alpha=" + real(cfg.alpha.real()) + "," + real(cfg.alpha.imag()) + "\n";
  s += fmt::format("k={}\n", cfg.k);
  s += "N=" + n_list + "\n";
  s += "f=" + cfg.f + "\n";
  s += "eta=" + real(cfg.eta) + "\n";
  s += "tol=" + real(cfg.tol) + "\n";
  s += "eps=" + real(cfg.eps) + "\n";
  s += "tau-max=" + real(cfg.tau_max) + "\n";
  s += fmt::format("tau-points={}\n", cfg.tau_points);
  s += "u-max=" + real(cfg.u_max) + "\n";
  s += "step=" + real(cfg.step) + "\n";
  s += "x-max=" + real(cfg.x_max) + "\n";
  if (cfg.u_cutoff) {
    s += "u-cutoff=" + (std::isinf(*cfg.u_cutoff) ? std::string("inf") : real(*cfg.u_cutoff)) +
         "\n";
  }
  s += fmt::format("count-cap={}\n", cfg.count_cap);
  s += fmt::format("h-cutoff={}\n", cfg.h_cutoff);
  s += fmt::format("n-floor={}\n", cfg.n_floor);
  s += "level=" + cfg.level + "\n";
  if (!cfg.out.empty()) s += "out=" + cfg.out + "\n";
  s += std::string("format=") + (cfg.format == OutputFormat::csv ? "csv" : "json") + "\n";
  s += fmt::format("threads={}\n", cfg.threads);
  return s;
}

std::string config_hash(const RunConfig& cfg) {
  RunConfig c = cfg;
  c.threads = 1;
  c.out.clear();
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : emit_config(c)) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return fmt::format("{:016x}", h);
}

std::vector<double> tau_grid(const RunConfig& cfg) {
  std::vector<double> g;
  const int n = cfg.tau_points;
  if (n == 1) return {0.0};
  for (int i = 0; i < n; ++i) {
    g.push_back(2 * i == n - 1 ? 0.0 : -cfg.tau_max + 2.0 * cfg.tau_max * i / (n - 1));
  }
  return g;
}

}  // namespace smoothsum::tools
