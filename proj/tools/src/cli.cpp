#include "smoothsum_tools/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "smoothsum/arith.hpp"
#include "smoothsum/asymptotic.hpp"
#include "smoothsum/dickman.hpp"
#include "smoothsum/error.hpp"
#include "smoothsum/euler_products.hpp"
#include "smoothsum/oracle.hpp"
#include "smoothsum/parallel.hpp"
#include "smoothsum/zeta.hpp"
#include "smoothsum_tools/verify.hpp"

#ifndef SMOOTHSUM_VERSION
#define SMOOTHSUM_VERSION "0.0.0"
#endif

namespace smoothsum::tools {
namespace {

using Builder = std::function<std::vector<Table>(const RunConfig&)>;

struct Command {
  std::string name;
  std::string help;
  std::vector<std::string> options;  // long option names without dashes
  std::vector<Table> schema;         // column documentation
};

std::int64_t as_int(std::uint64_t v) { return static_cast<std::int64_t>(v); }

Table dickman_schema() {
  return {"dickman", {{"u", "argument"}, {"rho", "Dickman rho(u)"}}, {}};
}
Table rho_hat_schema() {
  return {"rho_hat",
          {{"x", "s = ix"},
           {"rho_hat_re", "Re rho_hat(ix)"},
           {"rho_hat_im", "Im rho_hat(ix)"},
           {"abs_scaled", "|rho_hat(ix)| sqrt(1 + x^2)"}},
          {}};
}
Table zeta_schema() {
  return {"zeta",
          {{"tau", "s = 1 + i tau"},
           {"zeta_re", "Re zeta(s) (nan at s = 1)"},
           {"zeta_im", "Im zeta(s)"},
           {"regular_re", "Re (s-1) zeta(s)"},
           {"regular_im", "Im (s-1) zeta(s)"},
           {"method", "euler_maclaurin or laurent"}},
          {}};
}
Table products_schema() {
  return {"products",
          {{"N", "N"},
           {"tau", "s = 1 + i tau"},
           {"g_re", "Re g_N(s)"},
           {"g_im", "Im g_N(s)"},
           {"zeta_pow_re", "Re zeta_N(s)^alpha (factorwise principal logs)"},
           {"zeta_pow_im", "Im zeta_N(s)^alpha"},
           {"h_re", "Re h_N(s)"},
           {"h_im", "Im h_N(s)"},
           {"h_inf_re", "Re h(s), infinite product"},
           {"h_inf_im", "Im h(s)"}},
          {}};
}
Table brute_schema() {
  return {"brute",
          {{"N", "N"},
           {"S_re", "Re S by enumeration"},
           {"S_im", "Im S"},
           {"terms_used", "enumerated integers"},
           {"u_cutoff", "log n <= u_cutoff log N"},
           {"tail_certificate", "bound on omitted terms"}},
          {}};
}
Table quad_schema(const std::string& name, const std::string& what) {
  return {name,
          {{"N", "N"},
           {"value_re", "Re " + what},
           {"value_im", "Im " + what},
           {"quad_error", "quadrature error estimate"},
           {"tail_bound", "truncation bound"},
           {"node_count", "integrand evaluations"}},
          {}};
}
Table theorem2_schema() {
  return {"theorem2",
          {{"N", "N"},
           {"S_re", "Re S (Fourier integral)"},
           {"S_im", "Im S"},
           {"C_re", "Re C_f"},
           {"C_im", "Im C_f"},
           {"abs_E", "|S / (C_f (log N)^alpha) - 1|"},
           {"predicted_envelope",
            "(log N)^{1-eta}, times (log log N)^{2 Re alpha / 3} when Re alpha >= 0"}},
          {}};
}
Table tenenbaum_schema() {
  return {"tenenbaum",
          {{"N", "N"},
           {"max_error", "max over tau of |zeta_N / (zeta (s-1) log N rho_hat) - 1|"},
           {"tau_at_max", "tau attaining max_error"},
           {"error_at_zero", "error at tau = 0 (0 if not on the grid)"},
           {"L_eps", "exp((log N)^{3/5 - eps})"}},
          {}};
}
Table lemma1_schema() {
  return {"lemma1",
          {{"N", "N"},
           {"max_error", "max over tau of |h_N / h - 1|"},
           {"tau_at_max", "tau attaining max_error"},
           {"decay_ratio", "previous max_error / this max_error (0 on the first row)"}},
          {}};
}
Table errordecomp_schema() {
  return {"errordecomp",
          {{"N", "N"},
           {"I1_re", "Re of the integral over |x| <= 3 log N"},
           {"I1_im", "Im of the same"},
           {"I2_abs", "|integral over |x| > 3 log N|"},
           {"I2_bound", "quadrature and truncation bound on I2"},
           {"shape", "decay shape compared against I2"},
           {"shape_ratio", "I2_abs / shape"},
           {"E2", "relative change of I1 when h_N is replaced by h"},
           {"E2_predicted", "(log N)^{Re alpha - 1} / N"}},
          {}};
}

const std::vector<Command>& commands() {
  static const std::vector<Command> list = {
      {"dickman-table", "Tables of rho(u) on [0, u-max] and rho_hat(ix) on [-x-max, x-max]",
       {"u-max", "step", "x-max"}, {dickman_schema(), rho_hat_schema()}},
      {"zeta-table", "zeta(1 + i tau) and (s-1) zeta(s) for tau on [-x-max, x-max]",
       {"x-max", "step"}, {zeta_schema()}},
      {"products-table", "g_N, zeta_N^alpha, h_N and h on s = 1 + i tau",
       {"alpha", "k", "N", "tau-max", "tau-points", "tol"}, {products_schema()}},
      {"brute", "S by direct enumeration",
       {"alpha", "k", "N", "f", "eta", "u-cutoff", "count-cap"}, {brute_schema()}},
      {"exact", "S by the Fourier integral", {"alpha", "k", "N", "f", "eta", "tol"},
       {quad_schema("exact", "S")}},
      {"cfactor", "The main-term constant C_f",
       {"alpha", "k", "N", "f", "eta", "tol", "h-cutoff", "n-floor"},
       {quad_schema("cfactor", "C_f")}},
      {"theorem2", "S against C_f (log N)^alpha",
       {"alpha", "k", "N", "f", "eta", "tol", "h-cutoff", "n-floor"}, {theorem2_schema()}},
      {"tenenbaum", "zeta_N(1 + i tau) against zeta(s)(s-1)(log N) rho_hat(i tau log N)",
       {"N", "tau-max", "tau-points", "eps"}, {tenenbaum_schema()}},
      {"lemma1", "|h_N / h - 1| on s = 1 + i tau", {"alpha", "k", "N", "tau-max", "tau-points"},
       {lemma1_schema()}},
      {"errordecomp", "Split of the integral at |x| = 3 log N and the h_N -> h change",
       {"alpha", "k", "N", "f", "eta", "tol"}, {errordecomp_schema()}},
      {"verify-all", "Run the acceptance suite; exit 1 on any failure", {"level"}, {}},
  };
  return list;
}

std::string columns_help(const Command& c) {
  std::string s = "\nOutput columns:\n";
  for (const auto& t : c.schema) {
    s += "  table " + t.name + "\n";
    for (const auto& col : t.columns) s += fmt::format("    {:<20} {}\n", col.name, col.doc);
  }
  if (c.name == "verify-all") {
    s += "  table acceptance: id, name, status (PASS/FAIL), summary\n"
         "  followed by the measurement tables of each criterion\n";
  }
  return s;
}

// Option string values collected by CLI11 before conversion.
struct RawOptions {
  std::map<std::string, std::string> values;
};

void add_option(CLI::App& sub, RawOptions& raw, const std::string& name) {
  static const std::map<std::string, std::string> docs = {
      {"alpha", "complex alpha as re,im"},
      {"k", "k-free order, integer >= 2"},
      {"N", "comma separated list of N"},
      {"f", "test function gaussian:mu,sigma (brute also accepts constant)"},
      {"eta", "decay exponent claimed for fhat"},
      {"tol", "absolute tolerance, in (0, 1e-3]"},
      {"eps", "epsilon of L_eps(N), in (0, 0.6)"},
      {"tau-max", "tau grid on [-tau-max, tau-max], at most 3"},
      {"tau-points", "number of tau grid points"},
      {"u-max", "upper end of the rho table"},
      {"step", "grid spacing"},
      {"x-max", "upper end of the x or tau table"},
      {"u-cutoff", "enumerate log n <= u-cutoff log N; 'inf' for everything"},
      {"count-cap", "enumeration element cap"},
      {"h-cutoff", "prime cutoff for the infinite product (0 = automatic)"},
      {"n-floor", "smallest N accepted by the main term"},
      {"level", "quick or desk"},
  };
  sub.add_option_function<std::string>(
      "--" + name, [&raw, name](const std::string& v) { raw.values[name] = v; },
      docs.at(name));
}

template <class T>
T to_unsigned(const std::string& key, const std::string& v) {
  const double d = parse_real(v);
  if (!(d >= 0.0) || d != std::floor(d) || d > 1.8e19) {
    throw ConfigError(key + " must be a nonnegative integer: '" + v + "'");
  }
  return static_cast<T>(d);
}

void apply(RunConfig& cfg, const std::string& key, const std::string& v) {
  if (key == "alpha") cfg.alpha = parse_complex(v);
  else if (key == "k") {
    const double d = parse_real(v);
    if (d != std::floor(d) || std::abs(d) > 1e6) throw ConfigError("k must be an integer");
    cfg.k = static_cast<int>(d);
  } else if (key == "N") cfg.N = parse_n_list(v);
  else if (key == "f") cfg.f = v;
  else if (key == "eta") cfg.eta = parse_real(v);
  else if (key == "tol") cfg.tol = parse_real(v);
  else if (key == "eps") cfg.eps = parse_real(v);
  else if (key == "tau-max") cfg.tau_max = parse_real(v);
  else if (key == "tau-points") cfg.tau_points = to_unsigned<int>(key, v);
  else if (key == "u-max") cfg.u_max = parse_real(v);
  else if (key == "step") cfg.step = parse_real(v);
  else if (key == "x-max") cfg.x_max = parse_real(v);
  else if (key == "u-cutoff") cfg.u_cutoff = parse_real(v);
  else if (key == "count-cap") cfg.count_cap = to_unsigned<std::uint64_t>(key, v);
  else if (key == "h-cutoff") cfg.h_cutoff = to_unsigned<std::uint64_t>(key, v);
  else if (key == "n-floor") cfg.n_floor = to_unsigned<std::uint64_t>(key, v);
  else if (key == "level") cfg.level = v;
  else throw ConfigError("unknown option " + key);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inserts the tokens of any --config file right after the subcommand so that
// explicit flags override the file.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> rest;
  std::vector<std::string> from_file;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw ConfigError("--config needs a file");
      from_file = config_tokens(read_file(args[++i]));
    } else if (args[i].rfind("--config=", 0) == 0) {
      from_file = config_tokens(read_file(args[i].substr(9)));
    } else {
      rest.push_back(args[i]);
    }
  }
  if (from_file.empty()) return rest;
  const auto sub = std::find_if(rest.begin(), rest.end(),
                                [](const std::string& a) { return a.rfind('-', 0) != 0; });
  if (sub == rest.end()) throw ConfigError("no subcommand given");

  // A config file may carry keys for other subcommands; those are skipped.
  const std::vector<std::string> common{"out", "format", "threads"};
  const Command* target = nullptr;
  for (const auto& c : commands()) {
    if (c.name == *sub) target = &c;
  }
  auto known_to = [&](const Command& c, const std::string& key) {
    return std::find(c.options.begin(), c.options.end(), key) != c.options.end() ||
           std::find(common.begin(), common.end(), key) != common.end();
  };
  std::vector<std::string> kept;
  for (std::size_t i = 0; i + 1 < from_file.size(); i += 2) {
    const std::string key = from_file[i].substr(2);
    const bool anywhere = std::any_of(commands().begin(), commands().end(),
                                      [&](const Command& c) { return known_to(c, key); });
    if (!anywhere) throw ConfigError("config: unknown key " + key);
    if (target && !known_to(*target, key)) continue;
    kept.push_back(from_file[i]);
    kept.push_back(from_file[i + 1]);
  }
  rest.insert(sub + 1, kept.begin(), kept.end());
  return rest;
}

void require(bool cond, const std::string& message) {
  if (!cond) throw ConfigError(message);
}

const Command& find_command(const std::string& name) {
  for (const auto& c : commands()) {
    if (c.name == name) return c;
  }
  throw ConfigError("unknown subcommand " + name);
}

std::vector<double> even_grid(double lo, double hi, double step) {
  const auto n = static_cast<long>(std::llround((hi - lo) / step));
  std::vector<double> g;
  for (long i = 0; i <= n; ++i) g.push_back(lo + (hi - lo) * static_cast<double>(i) / n);
  return g;
}

std::vector<Table> run_dickman(const RunConfig& cfg) {
  Table t = dickman_schema();
  const DickmanTable* table = &default_dickman_table();
  std::optional<DickmanTable> own;
  if (cfg.u_max > table->u_max()) {
    own = DickmanTable::build(cfg.u_max, 1e-13);
    table = &*own;
  }
  for (double u : even_grid(0.0, cfg.u_max, cfg.step)) t.add_row({u, (*table)(u)});
  Table r = rho_hat_schema();
  for (double x : even_grid(-cfg.x_max, cfg.x_max, cfg.step)) {
    const cplx v = rho_hat(x).value;
    r.add_row({x, v.real(), v.imag(), std::abs(v) * std::sqrt(1.0 + x * x)});
  }
  return {t, r};
}

std::vector<Table> run_zeta(const RunConfig& cfg) {
  Table t = zeta_schema();
  for (double tau : even_grid(-cfg.x_max, cfg.x_max, cfg.step)) {
    const ZetaValue z = zeta(cplx{1.0, tau});
    const bool pole = tau == 0.0;
    t.add_row({tau, pole ? std::nan("") : z.zeta.real(), pole ? std::nan("") : z.zeta.imag(),
               z.regular.real(), z.regular.imag(),
               std::string(z.method == ZetaMethod::laurent ? "laurent" : "euler_maclaurin")});
  }
  return {t};
}

std::vector<Table> run_products(const RunConfig& cfg) {
  Table t = products_schema();
  const auto taus = tau_grid(cfg);
  std::uint64_t max_n = *std::max_element(cfg.N.begin(), cfg.N.end());
  const auto automatic =
      static_cast<std::uint64_t>(std::max(1e4, 64.0 * std::ceil(std::abs(cfg.alpha))));
  const HInfinite h(cfg.alpha, cfg.k, std::min(cfg.tol, 1e-10), std::max(automatic, max_n));
  for (auto N : cfg.N) {
    const PrimeView view = shared_primes(N)->view_up_to(N);
    std::vector<std::vector<Cell>> rows(taus.size());
    parallel_for(taus.size(), [&](std::size_t i) {
      const cplx s{1.0, taus[i]};
      const cplx g = g_product(view, cfg.alpha, cfg.k, s).value;
      const cplx zp = zeta_partial_pow(view, s, cfg.alpha).value;
      const cplx hn = h_finite(view, cfg.alpha, cfg.k, s).value;
      const cplx hi = h(s).value;
      rows[i] = {as_int(N), taus[i], g.real(), g.imag(), zp.real(), zp.imag(),
                 hn.real(), hn.imag(), hi.real(), hi.imag()};
    });
    for (auto& r : rows) t.add_row(std::move(r));
  }
  return {t};
}

std::vector<Table> run_brute(const RunConfig& cfg, const TestFunction& f) {
  Table t = brute_schema();
  const double u = cfg.u_cutoff ? *cfg.u_cutoff : default_u_cutoff(f);
  EnumerationOptions opts;
  opts.count_cap = cfg.count_cap;
  for (auto N : cfg.N) {
    const BruteResult b = brute_S({cfg.alpha, cfg.k, N}, f, u, opts);
    t.add_row({as_int(N), b.value.real(), b.value.imag(), static_cast<std::int64_t>(b.terms_used),
               b.u_cutoff, b.tail_certificate});
  }
  return {t};
}

MainTermOptions main_options(const RunConfig& cfg) {
  MainTermOptions o;
  o.tol = cfg.tol;
  o.h_cutoff = cfg.h_cutoff;
  o.N_floor = cfg.n_floor;
  return o;
}

std::vector<Table> run_quad(const RunConfig& cfg, const TestFunction& f, bool main) {
  Table t = main ? quad_schema("cfactor", "C_f") : quad_schema("exact", "S");
  for (auto N : cfg.N) {
    const SumParams p{cfg.alpha, cfg.k, N};
    const QuadResult q = main ? main_term(p, f, main_options(cfg))
                              : exact_integral(p, f, IntegralOptions{cfg.tol});
    t.add_row({as_int(N), q.value.real(), q.value.imag(), q.quad_error, q.tail_bound,
               static_cast<std::int64_t>(q.node_count)});
  }
  return {t};
}

std::vector<Table> run_theorem2(const RunConfig& cfg, const TestFunction& f) {
  Table t = theorem2_schema();
  std::vector<SumParams> ps;
  for (auto N : cfg.N) ps.push_back({cfg.alpha, cfg.k, N});
  Theorem2Options o;
  o.exact.tol = cfg.tol;
  o.main = main_options(cfg);
  for (const auto& row : theorem2_report(ps, f, o)) {
    t.add_row({as_int(row.params.N), row.exact.value.real(), row.exact.value.imag(),
               row.main.value.real(), row.main.value.imag(), std::abs(row.E), row.envelope});
  }
  return {t};
}

std::vector<Table> run_tenenbaum(const RunConfig& cfg) {
  Table t = tenenbaum_schema();
  const auto taus = tau_grid(cfg);
  for (const auto& row : tenenbaum_check(cfg.N, taus, cfg.eps).rows) {
    t.add_row({as_int(row.N), row.max_error, row.tau_at_max, row.error_at_zero, row.L_eps});
  }
  return {t};
}

std::vector<Table> run_lemma1(const RunConfig& cfg) {
  Table t = lemma1_schema();
  const auto taus = tau_grid(cfg);
  for (const auto& row : lemma1_check(cfg.alpha, cfg.k, cfg.N, taus).rows) {
    t.add_row({as_int(row.N), row.max_error, row.tau_at_max, row.decay_ratio});
  }
  return {t};
}

std::vector<Table> run_errordecomp(const RunConfig& cfg, const TestFunction& f) {
  Table t = errordecomp_schema();
  for (auto N : cfg.N) {
    const auto d = error_decomposition({cfg.alpha, cfg.k, N}, f, IntegralOptions{cfg.tol});
    t.add_row({as_int(N), d.restricted.value.real(), d.restricted.value.imag(),
               std::abs(d.outer.value), d.outer.total_error(), d.shape, d.shape_ratio, d.E2,
               d.E2_predicted});
  }
  return {t};
}

void emit(const RunConfig& cfg, const std::vector<Table>& tables, std::ostream& out) {
  Metadata meta{cfg.command, SMOOTHSUM_VERSION, config_hash(cfg), current_timestamp()};
  std::ofstream file;
  std::ostream* dest = &out;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) throw ConfigError("cannot write " + cfg.out);
    dest = &file;
  }
  if (cfg.format == OutputFormat::csv) write_csv(*dest, meta, tables);
  else write_json(*dest, meta, tables);
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args_in) {
  const std::vector<std::string> args = expand_config(args_in);
  CLI::App app{"smoothsum: weighted sums over smooth k-free integers", "smoothsum"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.set_version_flag("--version", SMOOTHSUM_VERSION);

  RunConfig cfg;
  RawOptions raw;
  std::string format = "csv";
  std::map<std::string, CLI::App*> subs;
  for (const auto& c : commands()) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    for (const auto& o : c.options) add_option(*sub, raw, o);
    sub->add_option("--out", cfg.out, "output file (default: stdout)");
    sub->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--threads", cfg.threads, "worker thread cap; results do not depend on it")
        ->check(CLI::Range(1u, 256u));
    sub->add_option("--config", "key=value file with the same names as the flags");
    sub->footer(columns_help(c));
    subs[c.name] = sub;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() != 0) throw ConfigError(e.what());
    std::ostringstream text;
    std::ostringstream ignored;
    app.exit(e, text, ignored);
    throw HelpRequested{text.str()};
  }
  for (const auto& [name, sub] : subs) {
    if (sub->parsed()) cfg.command = name;
  }
  for (const auto& [key, value] : raw.values) apply(cfg, key, value);
  cfg.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
  return cfg;
}

void validate(const RunConfig& cfg) {
  const Command& c = find_command(cfg.command);
  const auto uses = [&](const char* opt) {
    return std::find(c.options.begin(), c.options.end(), opt) != c.options.end();
  };
  require(cfg.threads >= 1 && cfg.threads <= 256, "threads must lie in [1, 256]");
  if (uses("alpha")) {
    require(std::isfinite(cfg.alpha.real()) && std::isfinite(cfg.alpha.imag()),
            "alpha must be finite");
  }
  if (uses("k")) require(cfg.k >= 2 && cfg.k <= 64, "k must lie in [2, 64]");
  if (uses("N")) {
    for (auto n : cfg.N) {
      require(n >= 2 && n <= kSieveCap, fmt::format("N = {} outside [2, {}]", n, kSieveCap));
    }
  }
  if (uses("tol")) require(cfg.tol > 0.0 && cfg.tol <= 1e-3, "tol must lie in (0, 1e-3]");
  if (uses("eps")) require(cfg.eps > 0.0 && cfg.eps < 0.6, "eps must lie in (0, 0.6)");
  if (uses("tau-max")) {
    require(cfg.tau_max > 0.0 && cfg.tau_max <= 3.0, "tau-max must lie in (0, 3]");
    require(cfg.tau_points >= 1 && cfg.tau_points <= 100000, "tau-points must lie in [1, 1e5]");
  }
  if (uses("step")) require(cfg.step > 0.0 && std::isfinite(cfg.step), "step must be positive");
  if (uses("u-max")) {
    require(cfg.u_max >= 1.0 && cfg.u_max <= 200.0, "u-max must lie in [1, 200]");
    require(cfg.u_max / cfg.step <= 1e6, "u-max / step exceeds 1e6 rows");
  }
  if (uses("x-max")) {
    require(cfg.x_max > 0.0 && cfg.x_max <= 1e6, "x-max must lie in (0, 1e6]");
    require(2.0 * cfg.x_max / cfg.step <= 1e6, "x-max / step exceeds 1e6 rows");
  }
  if (uses("u-cutoff") && cfg.u_cutoff) require(*cfg.u_cutoff >= 0.0, "u-cutoff must be >= 0");
  if (uses("count-cap")) require(cfg.count_cap >= 1, "count-cap must be positive");
  if (uses("level")) parse_level(cfg.level);

  if (uses("f")) {
    const TestFunction f = parse_test_function(cfg.f, cfg.eta);
    if (f.is_test_mode() && cfg.command != "brute") {
      throw ConfigError("the constant test function is only accepted by brute");
    }
    if (cfg.command == "cfactor" || cfg.command == "theorem2") {
      try {
        require_eta(f, cfg.alpha);
      } catch (const EtaTooSmall& e) {
        throw ConfigError(e.what());
      }
      for (auto n : cfg.N) {
        require(n >= cfg.n_floor, fmt::format("N = {} is below n-floor = {}", n, cfg.n_floor));
      }
    }
  }
  if (cfg.command == "tenenbaum") {
    for (auto n : cfg.N) require(n >= 1000, "tenenbaum needs every N >= 1000");
  }
  if (cfg.command == "lemma1") {
    for (auto n : cfg.N) require(n >= 100, "lemma1 needs every N >= 100");
  }
}

std::vector<Table> compute(const RunConfig& cfg) {
  const std::string& c = cfg.command;
  if (c == "dickman-table") return run_dickman(cfg);
  if (c == "zeta-table") return run_zeta(cfg);
  if (c == "products-table") return run_products(cfg);
  if (c == "tenenbaum") return run_tenenbaum(cfg);
  if (c == "lemma1") return run_lemma1(cfg);
  const TestFunction f = parse_test_function(cfg.f, cfg.eta);
  if (c == "brute") return run_brute(cfg, f);
  if (c == "exact") return run_quad(cfg, f, false);
  if (c == "cfactor") return run_quad(cfg, f, true);
  if (c == "theorem2") return run_theorem2(cfg, f);
  if (c == "errordecomp") return run_errordecomp(cfg, f);
  throw ConfigError("subcommand " + c + " has no table builder");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = parse_args(args);
    validate(cfg);
  } catch (const HelpRequested& h) {
    out << h.text;
    return kExitOk;
  } catch (const Error& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  }

  set_max_threads(cfg.threads);
  try {
    if (cfg.command == "verify-all") {
      const auto results = run_acceptance(parse_level(cfg.level), [&](const CriterionResult& r) {
        err << result_line(r) << '\n';
      });
      std::vector<Table> tables{summary_table(results)};
      for (const auto& r : results) tables.insert(tables.end(), r.tables.begin(), r.tables.end());
      emit(cfg, tables, out);
      const bool ok = std::all_of(results.begin(), results.end(),
                                  [](const CriterionResult& r) { return r.passed; });
      return ok ? kExitOk : kExitAcceptance;
    }
    emit(cfg, compute(cfg), out);
    return kExitOk;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::config) {
      err << "configuration error: " << e.what() << '\n';
      return kExitConfig;
    }
    err << "computation failed [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return kExitCompute;
  }
}

}  // namespace smoothsum::tools
