#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "smoothsum/branch.hpp"
#include "smoothsum/numeric.hpp"

namespace smoothsum {

/// Piecewise-polynomial Dickman function on [0, u_max].
///
/// Each unit interval [m, m+1] is split into equal panels holding rho at
/// Chebyshev-Lobatto nodes; values come from stepping
///   rho(u) = rho(m) - int_m^u rho(t - 1) / t dt
/// with Gauss-Legendre quadrature over the previous interval's interpolant.
/// Panel edges line up with the integers, where rho loses smoothness.
/// accuracy() is the largest disagreement with a build at half the panel
/// width.
class DickmanTable {
 public:
  /// Throws ToleranceUnachievable if the panel budget cannot certify tol.
  static DickmanTable build(double u_max, double tol = 1e-13);

  /// rho(u); 1 on [0, 1], 0 for u < 0. Throws DomainError beyond u_max.
  double operator()(double u) const;

  double u_max() const noexcept { return u_max_; }
  double accuracy() const noexcept { return accuracy_; }
  int panels_per_unit() const noexcept { return panels_; }

  std::string serialize() const;
  /// Throws DomainError on malformed text.
  static DickmanTable deserialize(std::string_view text);

 private:
  double u_max_ = 0.0;
  int units_ = 0;
  int panels_ = 0;
  double accuracy_ = 0.0;
  std::vector<double> values_;  // [unit][panel][node]

  static DickmanTable build_fixed(double u_max, int panels);
  double eval_panel(int unit, int panel, double u) const;
};

/// Shared table with u_max = 40 and accuracy 1e-13, loaded from or stored
/// to SMOOTHSUM_CACHE_DIR when that variable is set.
const DickmanTable& default_dickman_table();

/// J(s) = int_0^inf e^{-s-t} / (s + t) dt, which equals E1(s). Uses the
/// small-argument series for |s| <= 4 and adaptive quadrature of the
/// defining integral otherwise. Throws DomainError on (-inf, 0].
cplx expint_J(cplx s);

struct RhoHatValue {
  cplx s;
  cplx value;
  cplx log_value;
};

/// Laplace transform of rho on the imaginary axis, s = ix:
/// rho_hat(ix) = e^{-J(ix)} / (ix), and e^gamma at x = 0.
RhoHatValue rho_hat(double x);

/// Continuous logarithm of rho_hat(ix) along the real x axis, evaluated
/// directly as -J(ix) - Log(ix) (gamma at 0).
cplx rho_hat_log(double x);

struct RhoHatPowPath {
  BranchedPath path;
  cplx alpha;
  std::vector<double> xs;
  std::vector<cplx> values;  // rho_hat(ix)^alpha at xs
};

/// rho_hat(ix)^alpha := exp(alpha * log rho_hat(ix)) with the log unwrapped
/// along xs from the real-positive anchor rho_hat(0) = e^gamma. The anchor
/// x = 0 is always included even if absent from xs.
RhoHatPowPath rho_hat_pow(std::span<const double> xs, cplx alpha);

}  // namespace smoothsum
