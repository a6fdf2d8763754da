#include "smoothsum_tools/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include <fmt/format.h>

#include "smoothsum/arith.hpp"
#include "smoothsum/asymptotic.hpp"
#include "smoothsum/dickman.hpp"
#include "smoothsum/error.hpp"
#include "smoothsum/euler_products.hpp"
#include "smoothsum/oracle.hpp"
#include "smoothsum/parallel.hpp"
#include "smoothsum/quadrature.hpp"
#include "smoothsum/zeta.hpp"

namespace smoothsum::tools {
namespace {

using Clock = std::chrono::steady_clock;

Table oracle_table() {
  return {"oracle_equivalence",
          {{"alpha_re", "Re alpha"},
           {"alpha_im", "Im alpha"},
           {"k", "k"},
           {"N", "N"},
           {"exact_re", "Re S from the Fourier integral"},
           {"exact_im", "Im S from the Fourier integral"},
           {"brute_re", "Re S from enumeration"},
           {"brute_im", "Im S from enumeration"},
           {"abs_diff", "|exact - brute|"},
           {"quad_error", "quadrature error estimate"},
           {"tail_bound", "integral range truncation bound"},
           {"tail_certificate", "enumeration truncation bound"},
           {"ok", "1 if abs_diff <= sum of bounds and each bound <= 1e-7"}},
          {}};
}

Table identity_table() {
  return {"factorization_identity",
          {{"alpha_re", "Re alpha"},
           {"alpha_im", "Im alpha"},
           {"k", "k"},
           {"N", "N"},
           {"tau", "s = 1 + i tau"},
           {"residual", "|log g - alpha log zeta_N - log h| modulo 2 pi i"},
           {"value_residual", "|g / (zeta_N^alpha h) - 1|"}},
          {}};
}

Table closed_form_table() {
  return {"brute_vs_product",
          {{"alpha_re", "Re alpha"},
           {"alpha_im", "Im alpha"},
           {"k", "k"},
           {"N", "N"},
           {"terms", "number of enumerated integers"},
           {"brute_re", "Re of the full sum with f = 1"},
           {"brute_im", "Im of the full sum with f = 1"},
           {"product_re", "Re g_N(1)"},
           {"product_im", "Im g_N(1)"},
           {"rel_diff", "|brute - product| / |product|"}},
          {}};
}

Table golden_table() {
  return {"golden_values",
          {{"quantity", "what is compared"},
           {"computed", "library value (real part or modulus as named)"},
           {"reference", "independent or closed-form value"},
           {"abs_error", "|computed - reference|"},
           {"threshold", "pass threshold"}},
          {}};
}

Table tenenbaum_table() {
  return {"tenenbaum",
          {{"N", "N"},
           {"max_error", "max over tau of the relative error"},
           {"tau_at_max", "tau attaining max_error"},
           {"error_at_zero", "relative error at tau = 0"},
           {"L_eps", "exp((log N)^{3/5 - eps})"}},
          {}};
}

Table lemma1_table() {
  return {"lemma1",
          {{"alpha_re", "Re alpha"},
           {"alpha_im", "Im alpha"},
           {"k", "k"},
           {"N", "N"},
           {"max_error", "max over tau of |h_N / h - 1|"},
           {"tau_at_max", "tau attaining max_error"},
           {"decay_ratio", "previous max_error / this max_error"}},
          {}};
}

Table theorem2_table() {
  return {"theorem2",
          {{"alpha_re", "Re alpha"},
           {"alpha_im", "Im alpha"},
           {"k", "k"},
           {"N", "N"},
           {"S_re", "Re S (Fourier integral)"},
           {"S_im", "Im S"},
           {"C_re", "Re C_f"},
           {"C_im", "Im C_f"},
           {"abs_E", "|S / (C_f (log N)^alpha) - 1|"},
           {"E_bound", "numerical uncertainty of E"},
           {"envelope", "predicted error shape"}},
          {}};
}

Table degenerate_table() {
  return {"degenerate_alpha",
          {{"quantity", "what is compared"},
           {"N", "N"},
           {"value", "measured value"},
           {"reference", "expected value"},
           {"abs_error", "|value - reference|"}},
          {}};
}

Table vk_table() {
  return {"vinogradov_korobov",
          {{"t", "t"},
           {"zeta_abs", "|zeta(1 + it)|"},
           {"bound", "76.2 (log |t|)^{2/3}"},
           {"holds", "1 if zeta_abs <= bound"}},
          {}};
}

Table branch_table() {
  return {"branch_robustness",
          {{"alpha", "integer alpha"},
           {"N", "N"},
           {"C_branch_re", "Re C_f via branch paths"},
           {"C_branch_im", "Im C_f via branch paths"},
           {"C_integer_re", "Re C_f via integer powers"},
           {"C_integer_im", "Im C_f via integer powers"},
           {"route_diff", "|branch - integer|"},
           {"refine_shift", "|C_f(doubled nodes) - C_f|"},
           {"quad_error", "reported quadrature error of C_f"}},
          {}};
}

Table determinism_table() {
  return {"determinism",
          {{"run", "rerun index"},
           {"threads", "thread cap for the rerun"},
           {"identical", "1 if the tables of criteria 1-9 match the first run byte for byte"}},
          {}};
}

std::vector<double> grid(double lo, double hi, int n) {
  std::vector<double> g;
  for (int i = 0; i < n; ++i) {
    g.push_back(2 * i == n - 1 && lo == -hi ? 0.0 : lo + (hi - lo) * i / (n - 1));
  }
  return g;
}

CriterionResult begin_result(int id, std::string name) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  return r;
}

std::int64_t flag(bool b) { return b ? 1 : 0; }

CriterionResult oracle_equivalence(Level) {
  CriterionResult r = begin_result(1, "oracle equivalence");
  r.time_limit = 120.0;
  Table t = oracle_table();
  const auto f = TestFunction::gaussian(1.0, 0.4);
  double worst = 0.0;
  bool ok_all = true;
  for (cplx a : {cplx{0, 0}, cplx{1, 0}, cplx{-1, 0}, cplx{0.5, 0.5}}) {
    for (int k : {2, 3}) {
      for (std::uint64_t N : {10, 30}) {
        const SumParams p{a, k, N};
        const QuadResult e = exact_integral(p, f);
        const BruteResult b = brute_S(p, f, default_u_cutoff(f));
        const double diff = std::abs(e.value - b.value);
        const double budget = e.quad_error + e.tail_bound + b.tail_certificate;
        const bool ok = diff <= budget && e.quad_error <= 1e-7 && e.tail_bound <= 1e-7 &&
                        b.tail_certificate <= 1e-7;
        ok_all = ok_all && ok;
        worst = std::max(worst, diff);
        t.add_row({a.real(), a.imag(), std::int64_t{k}, static_cast<std::int64_t>(N),
                   e.value.real(), e.value.imag(), b.value.real(), b.value.imag(), diff,
                   e.quad_error, e.tail_bound, b.tail_certificate, flag(ok)});
      }
    }
  }
  r.passed = ok_all;
  r.summary = fmt::format("16 cases, max |exact - brute| = {:.3e}", worst);
  r.tables.push_back(std::move(t));
  return r;
}

CriterionResult product_identity(Level level) {
  CriterionResult r = begin_result(2, "closed-form product identity");
  Table ti = identity_table();
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::uint64_t Ns[3] = {100, 1000, 10000};
  double worst = 0.0;
  const int points = level == Level::desk ? 100 : 30;
  for (int i = 0; i < points; ++i) {
    const double radius = 3.0 * std::sqrt(unit(rng));
    const double phase = 2.0 * kPi * unit(rng);
    const cplx a = std::polar(radius, phase);
    const int k = 2 + static_cast<int>(unit(rng) * 2.0);
    const std::uint64_t N = Ns[static_cast<int>(unit(rng) * 3.0)];
    const double tau = -3.0 + 6.0 * unit(rng);
    const cplx s{1.0, tau};
    const PrimeView view = shared_primes(N)->view_up_to(N);
    const ProductValue g = g_product(view, a, k, s);
    const ProductValue z = zeta_partial(view, s);
    const ProductValue h = h_finite(view, a, k, s);
    cplx d = g.log_value - a * z.log_value - h.log_value;
    d.imag(std::remainder(d.imag(), 2.0 * kPi));
    const double res = std::abs(d);
    const double vres = std::abs(g.value / (std::exp(a * z.log_value) * h.value) - 1.0);
    worst = std::max(worst, res);
    ti.add_row({a.real(), a.imag(), std::int64_t{k}, static_cast<std::int64_t>(N), tau, res,
                vres});
  }
  bool ok = worst <= 1e-10;

  Table tc = closed_form_table();
  double worst_rel = 0.0;
  const auto one = TestFunction::constant_one();
  for (cplx a : {cplx{1, 0}, cplx{2, 0}, cplx{-1, 0}, cplx{0.5, 0.5}, cplx{3, -1}}) {
    for (int k : {2, 3, 4}) {
      for (std::uint64_t N : {3, 10, 30, 50}) {
        const std::size_t pi_n = shared_primes(N)->count_up_to(N);
        if (std::pow(static_cast<double>(k), static_cast<double>(pi_n)) > 1e6) continue;
        const SumParams p{a, k, N};
        const BruteResult b = brute_S(p, one, kUnbounded);
        const ProductValue g = g_product(p, cplx{1.0, 0.0});
        const double rel = std::abs(b.value - g.value) / std::abs(g.value);
        worst_rel = std::max(worst_rel, rel);
        tc.add_row({a.real(), a.imag(), std::int64_t{k}, static_cast<std::int64_t>(N),
                    static_cast<std::int64_t>(b.terms_used), b.value.real(), b.value.imag(),
                    g.value.real(), g.value.imag(), rel});
      }
    }
  }
  ok = ok && worst_rel <= 1e-12;
  r.passed = ok;
  r.summary = fmt::format("identity residual max {:.3e} over {} points; brute/product rel max {:.3e}",
                          worst, points, worst_rel);
  r.tables.push_back(std::move(ti));
  r.tables.push_back(std::move(tc));
  return r;
}

// J(s) along the ray u = s (1 + r), a different contour from the library's.
cplx j_by_ray(cplx s) {
  const double R = 40.0 / s.real();
  std::vector<double> bp;
  for (int i = 0; i <= 16; ++i) bp.push_back(R * i / 16.0);
  QuadOptions o;
  o.abs_tol = 1e-13;
  o.max_panels = 200000;
  return integrate([s](double r) { return std::exp(-s * (1.0 + r)) / (1.0 + r); }, bp, o).value;
}

CriterionResult golden_values(Level) {
  CriterionResult r = begin_result(3, "special-function golden values");
  r.time_limit = 60.0;
  Table t = golden_table();
  bool ok = true;
  auto row = [&](std::string name, double computed, double reference, double threshold) {
    const double err = std::abs(computed - reference);
    ok = ok && err <= threshold;
    t.add_row({std::move(name), computed, reference, err, threshold});
  };

  const DickmanTable& rho = default_dickman_table();
  row("rho(2)", rho(2.0), 1.0 - std::log(2.0), 1e-10);

  std::vector<double> bp;
  for (int u = 0; u <= 40; ++u) bp.push_back(u);
  QuadOptions o;
  o.abs_tol = 1e-12;
  const double laplace0 = integrate([&](double u) { return cplx{rho(u), 0.0}; }, bp, o).value.real();
  row("rho_hat(0) by integral of rho", laplace0, std::exp(kEulerGamma), 1e-6);
  const double eps = 1e-8;
  row("rho_hat(0) by exp(-J(s))/s, s=1e-8", (std::exp(-expint_J(eps)) / eps).real(),
      std::exp(kEulerGamma), 1e-6);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> re(0.5, 8.0);
  std::uniform_real_distribution<double> im(-8.0, 8.0);
  for (int i = 0; i < 20; ++i) {
    const cplx s{re(rng), im(rng)};
    const cplx a = expint_J(s);
    const cplx b = j_by_ray(s);
    const double err = std::abs(a - b);
    ok = ok && err <= 1e-8;
    t.add_row({fmt::format("J({:.6f}{:+.6f}i) vs ray integral", s.real(), s.imag()),
               std::abs(a), std::abs(b), err, 1e-8});
  }

  for (int k : {2, 3, 4}) {
    const double h = h_infinite(1.0, k, cplx{1.0, 0.0}).value.real();
    row(fmt::format("h_inf(1,{},1) vs 1/zeta({})", k, k), h,
        1.0 / zeta(cplx{static_cast<double>(k), 0.0}).zeta.real(), 1e-8);
  }
  row("zeta(2)", zeta(cplx{2.0, 0.0}).zeta.real(), kPi * kPi / 6.0, 1e-10);

  r.passed = ok;
  r.summary = fmt::format("{} golden comparisons", t.rows.size());
  r.tables.push_back(std::move(t));
  return r;
}

CriterionResult tenenbaum_trend(Level level) {
  CriterionResult r = begin_result(4, "partial zeta vs Dickman transform");
  r.time_limit = 300.0;
  std::vector<std::uint64_t> Ns{1000, 10000, 100000};
  if (level == Level::desk) Ns.push_back(1000000);
  const auto taus = grid(-3.0, 3.0, level == Level::desk ? 121 : 31);
  const TenenbaumReport rep = tenenbaum_check(Ns, taus, 0.05);
  Table t = tenenbaum_table();
  bool ok = true;
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const auto& row = rep.rows[i];
    if (i > 0) ok = ok && row.max_error < rep.rows[i - 1].max_error;
    t.add_row({static_cast<std::int64_t>(row.N), row.max_error, row.tau_at_max,
               row.error_at_zero, row.L_eps});
  }
  ok = ok && rep.rows.back().max_error <= 0.1;
  r.passed = ok;
  r.summary = fmt::format("max error {:.3e} at N = {}", rep.rows.back().max_error,
                          rep.rows.back().N);
  r.tables.push_back(std::move(t));
  return r;
}

CriterionResult lemma1_trend(Level level) {
  CriterionResult r = begin_result(5, "h_N to h convergence");
  Table t = lemma1_table();
  const std::uint64_t Ns[2] = {1000, 10000};
  const auto taus = grid(-3.0, 3.0, level == Level::desk ? 61 : 13);
  bool ok = true;
  double worst_ratio = 1e300;
  for (cplx a : {cplx{1, 0}, cplx{0.5, 0.5}}) {
    const Lemma1Report rep = lemma1_check(a, 2, Ns, taus);
    for (const auto& row : rep.rows) {
      t.add_row({a.real(), a.imag(), std::int64_t{2}, static_cast<std::int64_t>(row.N),
                 row.max_error, row.tau_at_max, row.decay_ratio});
    }
    worst_ratio = std::min(worst_ratio, rep.rows.back().decay_ratio);
    ok = ok && rep.rows.back().decay_ratio >= 8.0;
  }
  r.passed = ok;
  r.summary = fmt::format("smallest decay ratio 1e3 -> 1e4: {:.3f}", worst_ratio);
  r.tables.push_back(std::move(t));
  return r;
}

CriterionResult theorem2_convergence(Level level) {
  CriterionResult r = begin_result(6, "main-term convergence");
  r.time_limit = 600.0;
  Table t = theorem2_table();
  const auto f = TestFunction::gaussian(1.0, 0.4);
  std::vector<std::pair<cplx, int>> cases{{1.0, 2}};
  if (level == Level::desk) {
    cases.push_back({-1.0, 2});
    cases.push_back({cplx{0.5, 0.5}, 3});
  }
  std::vector<std::uint64_t> Ns{100, 1000, 10000};
  if (level == Level::desk) Ns.push_back(100000);
  bool ok = true;
  std::string detail;
  for (auto [a, k] : cases) {
    std::vector<SumParams> ps;
    for (auto N : Ns) ps.push_back({a, k, N});
    const auto rows = theorem2_report(ps, f);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& row = rows[i];
      if (i > 0) ok = ok && std::abs(row.E) < std::abs(rows[i - 1].E);
      ok = ok && row.E_bound < 1e-6;
      t.add_row({a.real(), a.imag(), std::int64_t{k}, static_cast<std::int64_t>(row.params.N),
                 row.exact.value.real(), row.exact.value.imag(), row.main.value.real(),
                 row.main.value.imag(), std::abs(row.E), row.E_bound, row.envelope});
    }
    const double shrink = std::abs(rows.front().E) / std::abs(rows.back().E);
    ok = ok && shrink >= 5.0;
    detail += fmt::format("{}({:g},{:g}),k={}: x{:.1f}", detail.empty() ? "" : "; ", a.real(),
                          a.imag(), k, shrink);
  }
  r.passed = ok;
  r.summary = "|E| shrink first -> last N: " + detail;
  r.tables.push_back(std::move(t));
  return r;
}

CriterionResult degenerate_alpha(Level) {
  CriterionResult r = begin_result(7, "degenerate alpha = 0");
  Table t = degenerate_table();
  const auto f = TestFunction::gaussian(1.0, 0.4);
  bool ok = true;
  for (std::uint64_t N : {10, 30}) {
    const BruteResult b = brute_S({0.0, 2, N}, f, default_u_cutoff(f));
    const double ref = f.f(0.0).real();
    ok = ok && b.value == cplx{ref, 0.0} && b.terms_used == 1;
    t.add_row({std::string("brute_S"), static_cast<std::int64_t>(N), b.value.real(), ref,
               std::abs(b.value - ref)});
  }
  const std::vector<SumParams> ps{{0.0, 2, 1000}, {0.0, 2, 10000}};
  double worst = 0.0;
  for (const auto& row : theorem2_report(ps, f)) {
    worst = std::max(worst, std::abs(row.E));
    t.add_row({std::string("theorem2 |E|"), static_cast<std::int64_t>(row.params.N),
               std::abs(row.E), 0.0, std::abs(row.E)});
  }
  ok = ok && worst <= 1e-6;
  r.passed = ok;
  r.summary = fmt::format("brute_S = f(0) exactly; max |E| = {:.3e}", worst);
  r.tables.push_back(std::move(t));
  return r;
}

CriterionResult vk_bound(Level) {
  CriterionResult r = begin_result(8, "Vinogradov-Korobov bound");
  Table t = vk_table();
  bool ok = true;
  for (double tt : {3.0, 10.0, 1e3, 1e6}) {
    const VkReport v = vk_check(tt);
    ok = ok && v.holds;
    t.add_row({tt, v.zeta_abs, v.bound, flag(v.holds)});
  }
  r.passed = ok;
  r.summary = "t in {3, 10, 1e3, 1e6}";
  r.tables.push_back(std::move(t));
  return r;
}

CriterionResult branch_robustness(Level level) {
  CriterionResult r = begin_result(9, "branch robustness");
  Table t = branch_table();
  const auto f = TestFunction::gaussian(1.0, 0.4);
  std::vector<std::uint64_t> Ns{1000};
  if (level == Level::desk) Ns.push_back(100000);
  bool ok = true;
  double worst = 0.0;
  for (int a : {1, 2}) {
    for (auto N : Ns) {
      const SumParams p{static_cast<double>(a), 2, N};
      MainTermOptions o;
      const QuadResult cb = main_term(p, f, o);
      o.integer_powers = true;
      const QuadResult ci = main_term(p, f, o);
      o.integer_powers = false;
      o.refine_all = true;
      const QuadResult cr = main_term(p, f, o);
      const double diff = std::abs(cb.value - ci.value);
      const double shift = std::abs(cr.value - cb.value);
      ok = ok && diff <= 1e-9 && shift <= cb.quad_error;
      worst = std::max(worst, diff);
      t.add_row({std::int64_t{a}, static_cast<std::int64_t>(N), cb.value.real(),
                 cb.value.imag(), ci.value.real(), ci.value.imag(), diff, shift,
                 cb.quad_error});
    }
  }
  r.passed = ok;
  r.summary = fmt::format("max route difference {:.3e}", worst);
  r.tables.push_back(std::move(t));
  return r;
}

}  // namespace

Level parse_level(const std::string& text) {
  if (text == "quick") return Level::quick;
  if (text == "desk") return Level::desk;
  throw ConfigError("level must be 'quick' or 'desk': '" + text + "'");
}

CriterionResult run_criterion(int id, Level level) {
  const auto start = Clock::now();
  CriterionResult r;
  switch (id) {
    case 1: r = oracle_equivalence(level); break;
    case 2: r = product_identity(level); break;
    case 3: r = golden_values(level); break;
    case 4: r = tenenbaum_trend(level); break;
    case 5: r = lemma1_trend(level); break;
    case 6: r = theorem2_convergence(level); break;
    case 7: r = degenerate_alpha(level); break;
    case 8: r = vk_bound(level); break;
    case 9: r = branch_robustness(level); break;
    default: throw ConfigError(fmt::format("no runnable criterion {}", id));
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (r.time_limit > 0.0 && r.seconds > r.time_limit) {
    r.passed = false;
    r.summary += fmt::format("; runtime {:.1f} s exceeds {:.0f} s", r.seconds, r.time_limit);
  }
  return r;
}

std::string render_tables(const std::vector<CriterionResult>& results) {
  std::vector<Table> tables;
  for (const auto& r : results) {
    if (r.id == 10) continue;
    tables.insert(tables.end(), r.tables.begin(), r.tables.end());
  }
  std::ostringstream out;
  write_csv(out, {}, tables);
  return strip_metadata(out.str());
}

std::vector<CriterionResult> run_acceptance(Level level, const Progress& progress) {
  std::vector<CriterionResult> results;
  for (int id = 1; id < kCriterionCount; ++id) {
    results.push_back(run_criterion(id, level));
    if (progress) progress(results.back());
  }

  const auto start = Clock::now();
  CriterionResult det = begin_result(10, "determinism");
  Table t = determinism_table();
  const std::string reference = render_tables(results);
  const unsigned base_threads = max_threads();
  bool ok = true;
  int run = 1;
  for (unsigned threads : {8u, base_threads}) {
    set_max_threads(threads);
    std::vector<CriterionResult> again;
    for (int id = 1; id < kCriterionCount; ++id) again.push_back(run_criterion(id, level));
    const bool same = render_tables(again) == reference;
    ok = ok && same;
    t.add_row({std::int64_t{run++}, static_cast<std::int64_t>(threads), flag(same)});
  }
  set_max_threads(base_threads);
  det.passed = ok;
  det.summary = fmt::format("tables of criteria 1-9 identical across reruns at {} and 8 threads",
                            base_threads);
  if (!ok) det.summary = "tables differ between reruns";
  det.tables.push_back(std::move(t));
  det.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  results.push_back(std::move(det));
  if (progress) progress(results.back());
  return results;
}

Table summary_table(const std::vector<CriterionResult>& results) {
  Table t{"acceptance",
          {{"id", "criterion number"},
           {"name", "criterion"},
           {"status", "PASS or FAIL"},
           {"summary", "headline measurement"}},
          {}};
  for (const auto& r : results) {
    t.add_row({std::int64_t{r.id}, r.name, std::string(r.passed ? "PASS" : "FAIL"), r.summary});
  }
  return t;
}

std::string result_line(const CriterionResult& r) {
  return fmt::format("[{}] {:>2} {}: {} ({:.1f} s)", r.passed ? "PASS" : "FAIL", r.id, r.name,
                     r.summary, r.seconds);
}

}  // namespace smoothsum::tools
