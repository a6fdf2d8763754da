#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "smoothsum/branch.hpp"
#include "smoothsum/numeric.hpp"

namespace smoothsum {

enum class ZetaMethod { euler_maclaurin, laurent };

struct ZetaValue {
  cplx s;
  cplx zeta;     // not finite at s = 1
  cplx regular;  // (s - 1) zeta(s); equals 1 at s = 1
  ZetaMethod method = ZetaMethod::euler_maclaurin;
  double error_estimate = 0.0;  // absolute, on zeta (on regular for laurent)
};

inline constexpr double kLaurentRadius = 0.05;
inline constexpr double kMaxZetaImag = 1e7;

/// Riemann zeta for Re s >= 1/2. Euler-Maclaurin with Bernoulli corrections
/// through B12 and M >= max(20, 2|Im s|), grown until the remainder estimate
/// is below 1e-13 |zeta|. Within kLaurentRadius of 1 the regular part comes
/// from the Stieltjes expansion instead.
///
/// Throws DomainError for Re s < 1/2 and PrecisionLoss for |Im s| above
/// kMaxZetaImag.
ZetaValue zeta(cplx s);

/// Raw Euler-Maclaurin value with an explicit truncation point M; optional
/// remainder estimate. Valid for Re s > -11, s != 1.
cplx zeta_em(cplx s, std::size_t M, double* error_estimate = nullptr);

/// (s - 1) zeta(s) by Euler-Maclaurin, computed without dividing by s - 1,
/// so it is finite at s = 1.
cplx regular_em(cplx s, std::size_t M);

/// (s - 1) zeta(s) through zeta(); 1 at s = 1.
cplx regular_factor(cplx s);

/// gamma_0 .. gamma_3, taken from the Taylor coefficients of (s-1) zeta(s)
/// at s = 1. The coefficients come from a trapezoid-rule Cauchy integral of
/// Euler-Maclaurin values on |s - 1| = 1/2. Cached under SMOOTHSUM_CACHE_DIR.
const std::array<double, 4>& stieltjes_constants();

/// A(x) = (s - 1) zeta(s) along s = 1 + ix / logN, with the log unwrapped
/// from A(0) = 1.
BranchedPath regular_factor_path(std::span<const double> xs, double logN);

inline constexpr double kVinogradovKorobovA = 76.2;

struct VkReport {
  double t = 0.0;
  double zeta_abs = 0.0;  // |zeta(1 + it)|
  double bound = 0.0;     // 76.2 (log|t|)^{2/3}
  bool holds = false;
};

/// |zeta(1 + it)| <= 76.2 (log |t|)^{2/3}. Throws DomainError for |t| < 3.
VkReport vk_check(double t);

}  // namespace smoothsum
