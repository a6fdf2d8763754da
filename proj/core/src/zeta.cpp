#include "smoothsum/zeta.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>
#include <string>

#include "smoothsum/cache.hpp"
#include "smoothsum/error.hpp"

namespace smoothsum {
namespace {

// B_{2j} / (2j)! for j = 1..7.
constexpr std::array<double, 7> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
};
constexpr int kCorrections = 6;  // through B12; B14 estimates the remainder

struct EmParts {
  cplx head;   // sum_{n<M} n^{-s}
  cplx tail;   // M^{-s}/2 + Bernoulli corrections
  cplx power;  // M^{1-s}
  double error = 0.0;
};

EmParts em_parts(cplx s, std::size_t M) {
  EmParts p;
  CompensatedComplexSum head;
  for (std::size_t n = 1; n < M; ++n) {
    head.add(std::exp(-s * std::log(static_cast<double>(n))));
  }
  p.head = head.value();
  const double logM = std::log(static_cast<double>(M));
  const cplx Ms = std::exp(-s * logM);  // M^{-s}
  p.power = Ms * static_cast<double>(M);
  cplx tail = 0.5 * Ms;
  // poch = s (s+1) ... (s+2j-2); mpow = M^{-s-2j+1}
  cplx poch = s;
  cplx mpow = Ms / static_cast<double>(M);
  const double inv_m2 = 1.0 / (static_cast<double>(M) * static_cast<double>(M));
  for (int j = 1; j <= kCorrections; ++j) {
    tail += kBernoulliOverFactorial[j - 1] * poch * mpow;
    poch *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
    mpow *= inv_m2;
  }
  p.tail = tail;
  const double sigma = s.real();
  const double next = std::abs(kBernoulliOverFactorial[kCorrections] * poch * mpow);
  const double grow = std::abs(s + (2.0 * kCorrections + 1.0)) /
                      std::max(1e-300, sigma + 2.0 * kCorrections + 1.0);
  p.error = next * grow;
  return p;
}

std::size_t initial_terms(cplx s) {
  return static_cast<std::size_t>(std::max(20.0, std::ceil(2.0 * std::abs(s.imag()))));
}

std::array<double, 4> compute_stieltjes() {
  constexpr int kPoints = 64;
  constexpr double kRadius = 0.5;
  constexpr std::size_t kTerms = 60;
  std::array<cplx, 5> coeff{};
  for (int q = 0; q < kPoints; ++q) {
    const double theta = 2.0 * kPi * q / kPoints;
    const cplx e = std::polar(1.0, theta);
    const cplx r = regular_em(1.0 + kRadius * e, kTerms);
    for (int j = 0; j < 5; ++j) {
      coeff[j] += r * std::polar(std::pow(kRadius, -j), -j * theta);
    }
  }
  std::array<double, 4> gamma{};
  double factorial = 1.0;
  for (int n = 0; n < 4; ++n) {
    if (n > 0) factorial *= n;
    const double c = (coeff[n + 1] / static_cast<double>(kPoints)).real();
    gamma[n] = (n % 2 == 0 ? 1.0 : -1.0) * factorial * c;
  }
  return gamma;
}

}  // namespace

cplx zeta_em(cplx s, std::size_t M, double* error_estimate) {
  if (s == cplx{1.0, 0.0}) throw DomainError("zeta: pole at s = 1");
  if (M < 2) M = 2;
  const EmParts p = em_parts(s, M);
  if (error_estimate) *error_estimate = p.error;
  return p.head + p.power / (s - 1.0) + p.tail;
}

cplx regular_em(cplx s, std::size_t M) {
  if (M < 2) M = 2;
  const EmParts p = em_parts(s, M);
  return (s - 1.0) * (p.head + p.tail) + p.power;
}

const std::array<double, 4>& stieltjes_constants() {
  static const std::array<double, 4> gamma = [] {
    const std::string name = "stieltjes-v1.txt";
    if (auto text = cache_load(name)) {
      std::istringstream in(*text);
      std::string header;
      std::getline(in, header);
      if (header == "smoothsum-stieltjes v1") {
        std::array<double, 4> g{};
        bool ok = true;
        for (auto& v : g) {
          std::string tok;
          if (!(in >> tok)) {
            ok = false;
            break;
          }
          auto r = std::from_chars(tok.data(), tok.data() + tok.size(), v,
                                   std::chars_format::hex);
          ok = ok && r.ec == std::errc{};
        }
        if (ok) return g;
      }
    }
    const auto g = compute_stieltjes();
    std::string out = "smoothsum-stieltjes v1\n";
    char buf[64];
    for (double v : g) {
      auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::hex);
      out.append(buf, r.ptr);
      out.push_back('\n');
    }
    cache_store(name, out);
    return g;
  }();
  return gamma;
}

ZetaValue zeta(cplx s) {
  if (s.real() < 0.5) throw DomainError("zeta: requires Re(s) >= 1/2");
  if (std::abs(s.imag()) > kMaxZetaImag) {
    throw PrecisionLoss("zeta: |Im s| = " + std::to_string(std::abs(s.imag())) +
                        " exceeds the supported range");
  }
  ZetaValue out;
  out.s = s;
  const cplx d = s - 1.0;
  if (std::abs(d) < kLaurentRadius) {
    const auto& g = stieltjes_constants();
    cplx reg{1.0, 0.0};
    cplx pw = d;
    double factorial = 1.0;
    for (int n = 0; n < 4; ++n) {
      if (n > 0) factorial *= n;
      reg += (n % 2 == 0 ? 1.0 : -1.0) * g[n] * pw / factorial;
      pw *= d;
    }
    out.method = ZetaMethod::laurent;
    out.regular = reg;
    out.zeta = d == cplx{0.0, 0.0}
                   ? cplx{std::numeric_limits<double>::infinity(), 0.0}
                   : reg / d;
    // First dropped term: |gamma_4| / 4! |s-1|^5 with |gamma_4| < 0.0024.
    out.error_estimate = 0.0024 / 24.0 * std::pow(std::abs(d), 5);
    return out;
  }
  std::size_t M = initial_terms(s);
  for (;;) {
    const EmParts p = em_parts(s, M);
    const cplx z = p.head + p.power / d + p.tail;
    if (p.error <= 1e-13 * std::abs(z) || M > 4 * static_cast<std::size_t>(kMaxZetaImag)) {
      out.zeta = z;
      out.regular = d * (p.head + p.tail) + p.power;
      out.error_estimate = p.error;
      return out;
    }
    M *= 2;
  }
}

cplx regular_factor(cplx s) { return zeta(s).regular; }

BranchedPath regular_factor_path(std::span<const double> xs, double logN) {
  if (!(logN > 0.0)) throw DomainError("regular_factor_path: logN must be positive");
  return BranchedPath::build(
      [logN](double x) { return regular_factor(cplx{1.0, x / logN}); }, xs, 0.0,
      cplx{0.0, 0.0});
}

VkReport vk_check(double t) {
  if (std::abs(t) < 3.0) throw DomainError("vk_check: requires |t| >= 3");
  VkReport r;
  r.t = t;
  r.zeta_abs = std::abs(zeta(cplx{1.0, t}).zeta);
  r.bound = kVinogradovKorobovA * std::pow(std::log(std::abs(t)), 2.0 / 3.0);
  r.holds = r.zeta_abs <= r.bound;
  return r;
}

}  // namespace smoothsum
