#pragma once

#include <functional>
#include <string>

#include "smoothsum/numeric.hpp"

namespace smoothsum {

enum class TestFamily { gaussian, constant, tabulated };

/// A weight f together with its Fourier transform under the convention
/// f(t) = integral of fhat(x) e^{-ixt} dx, and a decay exponent eta with
/// |fhat(x)| <= C (1 + x^2)^{-eta/2}.
class TestFunction {
 public:
  using Fn = std::function<cplx(double)>;

  /// f(t) = exp(-(t - mu)^2 / (2 sigma^2)). The transform decays faster than
  /// any power, so any eta > 0 may be requested.
  static TestFunction gaussian(double mu, double sigma, double eta = 4.0);

  /// f = 1. Only for closed-form totals in brute-force sums; fhat is a point
  /// mass and every integral route rejects it.
  static TestFunction constant_one();

  /// User supplied pair with an envelope |fhat(x)| <= envelope (1+x^2)^{-eta/2}
  /// and a support cutoff x_max. The convention is checked by quadrature at
  /// five seeded random t; a mismatch of 1e-6 or more throws DomainError.
  static TestFunction tabulated(Fn f, Fn fhat, double eta, double envelope, double x_max,
                                double f_sup = 1.0);

  cplx f(double t) const;
  cplx fhat(double x) const;

  /// Bound on the integral of |fhat| over |x| > X.
  double fhat_tail(double X) const;

  /// Smallest X (up to 1e-3 relative) with fhat_tail(X) <= tail_tol. Throws
  /// ToleranceUnachievable if that would pass x_max.
  double cutoff_for(double tail_tol) const;

  /// sup of |f(t)| over t > u.
  double f_sup_beyond(double u) const;

  TestFamily family() const noexcept { return family_; }
  bool is_test_mode() const noexcept { return family_ == TestFamily::constant; }
  double eta() const noexcept { return eta_; }
  double x_max() const noexcept { return x_max_; }
  double mu() const noexcept { return mu_; }
  double sigma() const noexcept { return sigma_; }
  std::string describe() const;

 private:
  TestFamily family_ = TestFamily::gaussian;
  double mu_ = 0.0;
  double sigma_ = 1.0;
  double eta_ = 0.0;
  double x_max_ = 0.0;
  double envelope_ = 0.0;
  double f_sup_ = 1.0;
  Fn f_;
  Fn fhat_;
};

}  // namespace smoothsum
