#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "smoothsum/numeric.hpp"

namespace smoothsum {

/// Value of an integral (or product) together with the error budget that
/// certifies it.
struct QuadResult {
  cplx value{0.0, 0.0};
  double quad_error = 0.0;   // sum of per-panel |K15 - G7|
  double tail_bound = 0.0;   // truncation of the integration range or series
  std::size_t node_count = 0;
  std::size_t panel_count = 0;
  double abs_integral = 0.0;  // K15 estimate of the integral of |f|

  double total_error() const { return quad_error + tail_bound; }
};

struct QuadOptions {
  double abs_tol = 1e-10;
  double rel_tol = 0.0;
  // Each interval between consecutive breakpoints starts as this many panels.
  std::size_t initial_panels = 4;
  std::size_t max_panels = 50000;
  // After convergence, bisect every panel once more and report the refined
  // result. Used to check that the error estimate is honest.
  bool refine_all = false;
};

using Integrand = std::function<cplx(double)>;

/// Adaptive Gauss-Kronrod (7/15) quadrature over [breakpoints.front(),
/// breakpoints.back()]. Panels never straddle a breakpoint. Panels whose error
/// exceeds their length-proportional share of the tolerance are bisected in
/// batches; node evaluations inside a batch may run in parallel, while the
/// panel bookkeeping and final summation follow left-to-right order.
///
/// Throws ToleranceUnachievable if max_panels is reached first.
QuadResult integrate(const Integrand& f, std::span<const double> breakpoints,
                     const QuadOptions& options = {});

inline QuadResult integrate(const Integrand& f, double a, double b,
                            const QuadOptions& options = {}) {
  const double bp[2] = {a, b};
  return integrate(f, std::span<const double>(bp, 2), options);
}

}  // namespace smoothsum
