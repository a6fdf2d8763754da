#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace smoothsum {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kEulerGamma = std::numbers::egamma;

// e^gamma. Equals the integral of the Dickman function over [0, inf) and is
// the value of the Laplace transform of rho at 0; the dickman tests recompute
// it from a DickmanTable and from the small-argument limit of e^{-J(s)}/s.
inline constexpr double kExpEulerGamma = 1.7810724179901979852;

/// Neumaier-compensated accumulator. Addition order is the caller's order,
/// so results are reproducible as long as that order is fixed.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class CompensatedComplexSum {
 public:
  void add(cplx z) noexcept {
    re_.add(z.real());
    im_.add(z.imag());
  }
  cplx value() const noexcept { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

/// z^n by repeated squaring; no logarithm is taken, so no branch is chosen.
inline cplx integer_power(cplx z, long long n) {
  if (n < 0) return 1.0 / integer_power(z, -n);
  cplx result{1.0, 0.0};
  while (n > 0) {
    if (n & 1) result *= z;
    z *= z;
    n >>= 1;
  }
  return result;
}

/// Principal logarithm with the imaginary part shifted by 2*pi*m so that it is
/// as close as possible to `reference_imag`.
inline cplx log_near(cplx z, double reference_imag) {
  cplx l = std::log(z);
  const double turns = std::round((reference_imag - l.imag()) / (2.0 * kPi));
  return {l.real(), l.imag() + 2.0 * kPi * turns};
}

inline bool is_integer_valued(cplx alpha) {
  return alpha.imag() == 0.0 && std::nearbyint(alpha.real()) == alpha.real() &&
         std::abs(alpha.real()) < 1e9;
}

}  // namespace smoothsum

namespace smoothsum {

/// log(1 + w), accurate when |w| is small.
inline cplx log1p_c(cplx w) {
  const double a = w.real();
  const double b = w.imag();
  return {0.5 * std::log1p(2.0 * a + a * a + b * b), std::atan2(b, 1.0 + a)};
}

/// exp(w) - 1, accurate when |w| is small.
inline cplx expm1_c(cplx w) {
  const double a = w.real();
  const double b = w.imag();
  const double sh = std::sin(0.5 * b);
  const double em = std::expm1(a);
  return {em * std::cos(b) - 2.0 * sh * sh, (em + 1.0) * std::sin(b)};
}

}  // namespace smoothsum
