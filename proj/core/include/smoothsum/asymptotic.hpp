#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "smoothsum/branch.hpp"
#include "smoothsum/numeric.hpp"
#include "smoothsum/params.hpp"
#include "smoothsum/quadrature.hpp"
#include "smoothsum/test_function.hpp"

namespace smoothsum {

struct IntegralOptions {
  double tol = 1e-9;       // split evenly between quadrature and range truncation
  bool refine_all = false;  // one extra uniform bisection after convergence
  std::size_t max_panels = 50000;
};

/// S(alpha, k; N) as the integral of fhat(x) g_N(1 + ix/log N) over the real
/// line. tail_bound covers the truncated range times the uniform bound on |g_N|.
QuadResult exact_integral(const SumParams& params, const TestFunction& f,
                          const IntegralOptions& options = {});

struct MainTermOptions {
  double tol = 1e-9;
  bool refine_all = false;
  std::size_t max_panels = 50000;
  /// Evaluate A^alpha rho_hat^alpha by direct integer powers. Requires an
  /// integer-valued alpha; otherwise both logs come from branch paths.
  bool integer_powers = false;
  std::uint64_t N_floor = 20;
  double branch_step = 0.25;   // branch path grid spacing in x
  std::uint64_t h_cutoff = 0;  // 0 selects the engine default
};

/// C_f(alpha, k; N): the integral over |x| <= 3 log N of
/// fhat(x) A(x)^alpha rho_hat(ix)^alpha h(1 + ix/log N), A(x) = (s-1) zeta(s).
/// tail_bound carries the truncation of the infinite product for h.
QuadResult main_term(const SumParams& params, const TestFunction& f,
                     const MainTermOptions& options = {});

/// Throws EtaTooSmall unless eta > max(1, 1 - Re alpha).
void require_eta(const TestFunction& f, cplx alpha);

/// (log N)^alpha on the real-positive branch.
cplx log_power(std::uint64_t N, cplx alpha);

struct Theorem2Row {
  SumParams params;
  QuadResult exact;
  QuadResult main;
  cplx log_pow;        // (log N)^alpha
  cplx model;          // C_f (log N)^alpha
  cplx E;              // exact / model - 1
  double E_bound = 0;  // propagated numerical uncertainty of E
  double envelope = 0; // (log N)^{1-eta} (log log N)^{2 Re alpha / 3 if Re alpha >= 0}
};

struct Theorem2Options {
  IntegralOptions exact;
  MainTermOptions main;
};

std::vector<Theorem2Row> theorem2_report(std::span<const SumParams> params_list,
                                         const TestFunction& f,
                                         const Theorem2Options& options = {});

/// Error-term envelope shape for the given alpha, eta and N.
double theorem2_envelope(cplx alpha, double eta, std::uint64_t N);

struct TenenbaumRow {
  std::uint64_t N = 0;
  double max_error = 0.0;
  double tau_at_max = 0.0;
  double error_at_zero = 0.0;  // only meaningful when 0 is on the grid
  double L_eps = 0.0;          // exp((log N)^{3/5 - eps})
  std::vector<double> errors;  // per tau, same order as the grid
};

struct TenenbaumReport {
  double eps = 0.0;
  std::vector<double> tau_grid;
  std::vector<TenenbaumRow> rows;
};

/// Relative error of zeta_N(1 + i tau) against zeta(s)(s-1)(log N) rho_hat(i tau log N).
TenenbaumReport tenenbaum_check(std::span<const std::uint64_t> N_values,
                                std::span<const double> tau_grid, double eps = 0.05);

struct ErrorDecomposition {
  SumParams params;
  QuadResult full;        // exact integral
  QuadResult restricted;  // over |x| <= 3 log N
  QuadResult outer;       // over |x| > 3 log N, computed directly
  double shape = 0.0;     // the decay shape compared against |outer|
  double shape_ratio = 0.0;
  /// Relative change of the restricted integral when h_N is replaced by h.
  double E2 = 0.0;
  double E2_bound = 0.0;
  double E2_predicted = 0.0;  // (log N)^{Re alpha - 1} / N
};

ErrorDecomposition error_decomposition(const SumParams& params, const TestFunction& f,
                                       const IntegralOptions& options = {});

/// fhat(x) rho_hat(ix)^alpha with the log taken along the given path of rho_hat.
cplx F_weight(const TestFunction& f, cplx alpha, const BranchedPath& rho_hat_path, double x);

/// As above, building a path from 0 to x first.
cplx F_weight(const TestFunction& f, cplx alpha, double x);

/// Branch path of rho_hat(ix) on [-X, X] with the given spacing.
BranchedPath rho_hat_path(double X, double step = 0.25);

}  // namespace smoothsum
