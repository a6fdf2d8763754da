#include "smoothsum/asymptotic.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "smoothsum/arith.hpp"
#include "smoothsum/dickman.hpp"
#include "smoothsum/error.hpp"
#include "smoothsum/euler_products.hpp"
#include "smoothsum/parallel.hpp"
#include "smoothsum/zeta.hpp"

namespace smoothsum {
namespace {

std::vector<double> symmetric_grid(double X, double step) {
  if (!(step > 0.0)) throw DomainError("branch grid step must be positive");
  const auto n = static_cast<long>(std::ceil(X / step));
  std::vector<double> xs;
  xs.reserve(2 * static_cast<std::size_t>(n) + 1);
  for (long i = -n; i <= n; ++i) xs.push_back(n == 0 ? 0.0 : X * static_cast<double>(i) / n);
  return xs;
}

void require_integral_route(const TestFunction& f, const char* who) {
  if (f.is_test_mode()) {
    throw DomainError(std::string(who) + ": the constant test function has no transform");
  }
}

// fhat(x) g_N(1 + ix/L); alpha = 0 short-circuits the product.
Integrand g_integrand(const TestFunction& f, PrimeView primes, const SumParams& params) {
  const double L = params.logN();
  const bool trivial = params.alpha == cplx{0.0, 0.0};
  return [&f, primes, params, L, trivial](double x) {
    const cplx w = f.fhat(x);
    if (trivial) return w;
    return w * g_product(primes, params.alpha, params.k, cplx{1.0, x / L}).value;
  };
}

std::uint64_t engine_cutoff(cplx alpha, std::uint64_t at_least) {
  const auto automatic =
      static_cast<std::uint64_t>(std::max(1e4, 64.0 * std::ceil(std::abs(alpha))));
  return std::max(automatic, at_least);
}

}  // namespace

void require_eta(const TestFunction& f, cplx alpha) {
  const double need = std::max(1.0, 1.0 - alpha.real());
  if (!(f.eta() > need)) {
    throw EtaTooSmall("eta = " + std::to_string(f.eta()) + " must exceed " +
                      std::to_string(need));
  }
}

cplx log_power(std::uint64_t N, cplx alpha) {
  return std::exp(alpha * std::log(std::log(static_cast<double>(N))));
}

double theorem2_envelope(cplx alpha, double eta, std::uint64_t N) {
  const double L = std::log(static_cast<double>(N));
  double shape = std::pow(L, 1.0 - eta);
  if (alpha.real() >= 0.0) shape *= std::pow(std::log(L), 2.0 * alpha.real() / 3.0);
  return shape;
}

QuadResult exact_integral(const SumParams& params, const TestFunction& f,
                          const IntegralOptions& options) {
  params.validate();
  require_integral_route(f, "exact_integral");
  if (!(options.tol > 0.0 && options.tol <= 1e-3)) {
    throw DomainError("exact_integral: tol must lie in (0, 1e-3]");
  }
  const PrimeView primes = shared_primes(params.N)->view_up_to(params.N);
  const double envelope = g_envelope(primes, params.alpha, params.k);
  const double X = f.cutoff_for(0.5 * options.tol / envelope);
  const double inner = 3.0 * params.logN();

  std::vector<double> bp{-X};
  if (inner < X) bp.push_back(-inner);
  bp.push_back(0.0);
  if (inner < X) bp.push_back(inner);
  bp.push_back(X);

  QuadOptions q;
  q.abs_tol = 0.5 * options.tol;
  q.refine_all = options.refine_all;
  q.max_panels = options.max_panels;
  QuadResult r = integrate(g_integrand(f, primes, params), bp, q);
  r.tail_bound = f.fhat_tail(X) * envelope;
  return r;
}

QuadResult main_term(const SumParams& params, const TestFunction& f,
                     const MainTermOptions& options) {
  params.validate();
  require_integral_route(f, "main_term");
  if (params.N < options.N_floor) {
    throw DomainError("main_term: N = " + std::to_string(params.N) + " is below N_floor = " +
                      std::to_string(options.N_floor));
  }
  require_eta(f, params.alpha);
  if (!(options.tol > 0.0 && options.tol <= 1e-3)) {
    throw DomainError("main_term: tol must lie in (0, 1e-3]");
  }
  const cplx alpha = params.alpha;
  const double L = params.logN();
  const double X = 3.0 * L;
  const double h_tol = 0.1 * options.tol;
  const bool trivial = alpha == cplx{0.0, 0.0};

  long long power = 0;
  if (options.integer_powers) {
    if (!is_integer_valued(alpha)) {
      throw DomainError("main_term: integer powers requested for non-integer alpha");
    }
    power = std::llround(alpha.real());
  }

  std::optional<BranchedPath> path_a;
  std::optional<BranchedPath> path_r;
  std::optional<HInfinite> h;
  if (!trivial) {
    if (!options.integer_powers) {
      const auto xs = symmetric_grid(X, options.branch_step);
      path_a = regular_factor_path(xs, L);
      path_r = rho_hat_path(X, options.branch_step);
    }
    h.emplace(alpha, params.k, h_tol, options.h_cutoff);
  }

  auto integrand = [&](double x) -> cplx {
    const cplx w = f.fhat(x);
    if (trivial) return w;
    const cplx s{1.0, x / L};
    const cplx a = regular_factor(s);
    const cplx r = rho_hat(x).value;
    cplx pw;
    if (options.integer_powers) {
      pw = integer_power(a * r, power);
    } else {
      pw = std::exp(alpha * (path_a->lift(x, a) + path_r->lift(x, r)));
    }
    return w * pw * (*h)(s).value;
  };

  const double bp[3] = {-X, 0.0, X};
  QuadOptions q;
  q.abs_tol = 0.5 * options.tol;
  q.refine_all = options.refine_all;
  q.max_panels = options.max_panels;
  QuadResult r = integrate(integrand, std::span<const double>(bp, 3), q);
  if (!trivial) r.tail_bound = r.abs_integral * std::expm1(1.1 * h_tol);
  return r;
}

std::vector<Theorem2Row> theorem2_report(std::span<const SumParams> params_list,
                                         const TestFunction& f, const Theorem2Options& options) {
  for (const auto& p : params_list) {
    p.validate();
    require_eta(f, p.alpha);
  }
  std::vector<Theorem2Row> rows;
  rows.reserve(params_list.size());
  for (const auto& p : params_list) {
    Theorem2Row row;
    row.params = p;
    row.exact = exact_integral(p, f, options.exact);
    row.main = main_term(p, f, options.main);
    row.log_pow = log_power(p.N, p.alpha);
    row.model = row.main.value * row.log_pow;
    row.E = row.exact.value / row.model - 1.0;
    const double rel_s = row.exact.total_error() / std::abs(row.exact.value);
    const double rel_c = row.main.total_error() / std::abs(row.main.value);
    row.E_bound = std::abs(row.E + 1.0) * (rel_s + rel_c);
    row.envelope = theorem2_envelope(p.alpha, f.eta(), p.N);
    rows.push_back(std::move(row));
  }
  return rows;
}

TenenbaumReport tenenbaum_check(std::span<const std::uint64_t> N_values,
                                std::span<const double> tau_grid, double eps) {
  if (!(eps > 0.0 && eps < 0.6)) throw DomainError("tenenbaum_check: eps must lie in (0, 0.6)");
  if (tau_grid.empty()) throw DomainError("tenenbaum_check: empty tau grid");
  std::uint64_t max_n = 0;
  for (auto n : N_values) {
    if (n < 1000) throw DomainError("tenenbaum_check: every N must be >= 1000");
    max_n = std::max(max_n, n);
  }
  for (double t : tau_grid) {
    if (!(std::abs(t) <= 3.0)) throw DomainError("tenenbaum_check: tau must lie in [-3, 3]");
  }
  const auto primes = shared_primes(max_n);

  TenenbaumReport report;
  report.eps = eps;
  report.tau_grid.assign(tau_grid.begin(), tau_grid.end());
  for (auto n : N_values) {
    const PrimeView view = primes->view_up_to(n);
    const double L = std::log(static_cast<double>(n));
    TenenbaumRow row;
    row.N = n;
    row.L_eps = std::exp(std::pow(L, 0.6 - eps));
    row.errors.resize(tau_grid.size());
    parallel_for(tau_grid.size(), [&](std::size_t i) {
      const double tau = tau_grid[i];
      const cplx s{1.0, tau};
      const cplx partial = zeta_partial(view, s).value;
      const cplx model = regular_factor(s) * L * rho_hat(tau * L).value;
      row.errors[i] = std::abs(partial / model - 1.0);
    });
    for (std::size_t i = 0; i < tau_grid.size(); ++i) {
      if (row.errors[i] > row.max_error) {
        row.max_error = row.errors[i];
        row.tau_at_max = tau_grid[i];
      }
      if (tau_grid[i] == 0.0) row.error_at_zero = row.errors[i];
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

ErrorDecomposition error_decomposition(const SumParams& params, const TestFunction& f,
                                       const IntegralOptions& options) {
  ErrorDecomposition d;
  d.params = params;
  d.full = exact_integral(params, f, options);

  const PrimeView primes = shared_primes(params.N)->view_up_to(params.N);
  const double envelope = g_envelope(primes, params.alpha, params.k);
  const double L = params.logN();
  const double inner = 3.0 * L;
  const double X = std::max(f.cutoff_for(0.5 * options.tol / envelope), inner);
  const Integrand g_int = g_integrand(f, primes, params);

  QuadOptions q;
  q.abs_tol = 0.5 * options.tol;
  q.refine_all = options.refine_all;
  q.max_panels = options.max_panels;
  const double bp_in[3] = {-inner, 0.0, inner};
  d.restricted = integrate(g_int, std::span<const double>(bp_in, 3), q);

  if (X > inner) {
    const QuadResult left = integrate(g_int, -X, -inner, q);
    const QuadResult right = integrate(g_int, inner, X, q);
    d.outer.value = left.value + right.value;
    d.outer.quad_error = left.quad_error + right.quad_error;
    d.outer.node_count = left.node_count + right.node_count;
    d.outer.panel_count = left.panel_count + right.panel_count;
    d.outer.abs_integral = left.abs_integral + right.abs_integral;
  }
  d.outer.tail_bound = f.fhat_tail(X) * envelope;

  d.shape = theorem2_envelope(params.alpha, f.eta(), params.N);
  d.shape_ratio = std::abs(d.outer.value) / d.shape;
  d.E2_predicted = std::pow(L, params.alpha.real() - 1.0) / static_cast<double>(params.N);

  if (params.alpha != cplx{0.0, 0.0}) {
    const HInfinite h(params.alpha, params.k, 1e-15, engine_cutoff(params.alpha, params.N));
    QuadOptions qe = q;
    qe.abs_tol = std::max(1e-15, 1e-3 * options.tol);
    const auto shift = [&](double x) {
      const cplx s{1.0, x / L};
      return g_int(x) * expm1_c(h.log_tail_beyond(s, params.N).log_value);
    };
    const QuadResult e2 = integrate(shift, std::span<const double>(bp_in, 3), qe);
    const double base = std::abs(d.restricted.value);
    d.E2 = std::abs(e2.value) / base;
    d.E2_bound = (e2.quad_error + d.restricted.total_error() * d.E2) / base;
  }
  return d;
}

BranchedPath rho_hat_path(double X, double step) {
  const auto xs = symmetric_grid(std::abs(X), step);
  return BranchedPath::build([](double x) { return rho_hat(x).value; }, xs, 0.0,
                             cplx{kEulerGamma, 0.0});
}

cplx F_weight(const TestFunction& f, cplx alpha, const BranchedPath& path, double x) {
  const cplx w = f.fhat(x);
  if (alpha == cplx{0.0, 0.0}) return w;
  return w * std::exp(alpha * path.lift(x, rho_hat(x).value));
}

cplx F_weight(const TestFunction& f, cplx alpha, double x) {
  return F_weight(f, alpha, rho_hat_path(std::abs(x)), x);
}

}  // namespace smoothsum
