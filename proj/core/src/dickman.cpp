#include "smoothsum/dickman.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <mutex>
#include <sstream>
#include <string>

#include "smoothsum/cache.hpp"
#include "smoothsum/error.hpp"
#include "smoothsum/quadrature.hpp"

namespace smoothsum {
namespace {

constexpr int kNodes = 16;  // Chebyshev-Lobatto nodes per panel
constexpr int kMaxPanels = 1024;
constexpr int kGaussOrder = 12;

struct Chebyshev {
  std::array<double, kNodes> unit{};  // nodes on [0, 1], ascending
  std::array<double, kNodes> weights{};
  Chebyshev() {
    for (int i = 0; i < kNodes; ++i) {
      unit[i] = 0.5 * (1.0 - std::cos(kPi * i / (kNodes - 1)));
      weights[i] = (i % 2 == 0 ? 1.0 : -1.0) * ((i == 0 || i == kNodes - 1) ? 0.5 : 1.0);
    }
  }
};

const Chebyshev& cheb() {
  static const Chebyshev c;
  return c;
}

struct GaussLegendre {
  std::array<double, kGaussOrder> x{};  // on [0, 1]
  std::array<double, kGaussOrder> w{};
  GaussLegendre() {
    const int n = kGaussOrder;
    for (int i = 0; i < n; ++i) {
      double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0;
        double p1 = z;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (z * p1 - p0) / (z * z - 1.0);
        const double dz = p1 / dp;
        z -= dz;
        if (std::abs(dz) < 1e-16) break;
      }
      x[i] = 0.5 * (1.0 - z);
      w[i] = 1.0 / ((1.0 - z * z) * dp * dp);
    }
  }
};

const GaussLegendre& gauss() {
  static const GaussLegendre g;
  return g;
}

double barycentric(const double* values, double a, double h, double u) {
  const auto& c = cheb();
  const double t = (u - a) / h;
  double num = 0.0;
  double den = 0.0;
  for (int i = 0; i < kNodes; ++i) {
    const double d = t - c.unit[i];
    if (d == 0.0) return values[i];
    const double q = c.weights[i] / d;
    num += q * values[i];
    den += q;
  }
  return num / den;
}

}  // namespace

double DickmanTable::eval_panel(int unit, int panel, double u) const {
  const double h = 1.0 / panels_;
  const double a = unit + panel * h;
  const double* v = values_.data() + (static_cast<std::size_t>(unit) * panels_ + panel) * kNodes;
  return barycentric(v, a, h, u);
}

DickmanTable DickmanTable::build_fixed(double u_max, int panels) {
  DickmanTable t;
  t.u_max_ = u_max;
  t.units_ = std::max(1, static_cast<int>(std::ceil(u_max)));
  t.panels_ = panels;
  t.values_.assign(static_cast<std::size_t>(t.units_) * panels * kNodes, 1.0);

  const auto& c = cheb();
  const auto& g = gauss();
  const double h = 1.0 / panels;
  double carry = 1.0;  // rho at the left edge of the current panel
  for (int m = 1; m < t.units_; ++m) {
    for (int j = 0; j < panels; ++j) {
      const double a = m + j * h;
      double* v = t.values_.data() + (static_cast<std::size_t>(m) * panels + j) * kNodes;
      v[0] = carry;
      // rho(t - 1) for t in this panel lives in panel j of unit m - 1.
      auto delayed = [&](double tt) {
        return m == 1 ? 1.0 : t.eval_panel(m - 1, j, tt - 1.0);
      };
      for (int i = 1; i < kNodes; ++i) {
        const double lo = a + h * c.unit[i - 1];
        const double hi = a + h * c.unit[i];
        double acc = 0.0;
        for (int q = 0; q < kGaussOrder; ++q) {
          const double tt = lo + (hi - lo) * g.x[q];
          acc += g.w[q] * delayed(tt) / tt;
        }
        v[i] = v[i - 1] - acc * (hi - lo);
      }
      carry = v[kNodes - 1];
    }
  }
  return t;
}

DickmanTable DickmanTable::build(double u_max, double tol) {
  if (!(u_max >= 1.0)) throw DomainError("build_rho: u_max must be >= 1");
  if (!(tol > 0.0 && tol <= 1e-4)) throw DomainError("build_rho: tol must lie in (0, 1e-4]");

  DickmanTable coarse = build_fixed(u_max, 4);
  for (int panels = 8; panels <= kMaxPanels; panels *= 2) {
    DickmanTable fine = build_fixed(u_max, panels);
    // Compare at the coarse nodes and the midpoints between them.
    double diff = 0.0;
    const double hc = 1.0 / coarse.panels_;
    for (int m = 1; m < coarse.units_; ++m) {
      for (int j = 0; j < coarse.panels_; ++j) {
        for (int i = 0; i + 1 < 2 * kNodes; ++i) {
          const double u = m + j * hc + hc * i / (2.0 * kNodes - 2.0);
          diff = std::max(diff, std::abs(coarse(std::min(u, coarse.units_ * 1.0)) -
                                         fine(std::min(u, fine.units_ * 1.0))));
        }
      }
    }
    if (diff <= tol) {
      fine.accuracy_ = std::max(diff, 1e-16);
      return fine;
    }
    coarse = std::move(fine);
  }
  throw ToleranceUnachievable("build_rho: could not certify tol within the panel budget");
}

double DickmanTable::operator()(double u) const {
  if (u < 0.0) return 0.0;
  if (u <= 1.0) return 1.0;
  if (u > units_ + 1e-12) {
    throw DomainError("rho: u = " + std::to_string(u) + " beyond the table range " +
                      std::to_string(u_max_));
  }
  const int m = std::min(static_cast<int>(u), units_ - 1);
  const int j = std::min(static_cast<int>((u - m) * panels_), panels_ - 1);
  return eval_panel(m, j, u);
}

std::string DickmanTable::serialize() const {
  std::ostringstream out;
  out << "smoothsum-dickman v1\n";
  char buf[64];
  auto hex = [&](double x) {
    auto r = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::hex);
    return std::string(buf, r.ptr);
  };
  out << "u_max " << hex(u_max_) << "\nunits " << units_ << "\npanels " << panels_
      << "\nnodes " << kNodes << "\naccuracy " << hex(accuracy_) << "\n";
  for (double v : values_) out << hex(v) << "\n";
  return out.str();
}

DickmanTable DickmanTable::deserialize(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  auto parse_hex = [](const std::string& s) {
    double x = 0.0;
    auto r = std::from_chars(s.data(), s.data() + s.size(), x, std::chars_format::hex);
    if (r.ec != std::errc{}) throw DomainError("dickman cache: bad number '" + s + "'");
    return x;
  };
  if (!std::getline(in, line) || line != "smoothsum-dickman v1") {
    throw DomainError("dickman cache: unknown header");
  }
  DickmanTable t;
  std::string key;
  std::string val;
  int nodes = 0;
  in >> key >> val;
  t.u_max_ = parse_hex(val);
  in >> key >> t.units_ >> key >> t.panels_ >> key >> nodes >> key >> val;
  t.accuracy_ = parse_hex(val);
  if (!in || nodes != kNodes || t.units_ < 1 || t.panels_ < 1) {
    throw DomainError("dickman cache: malformed header");
  }
  t.values_.reserve(static_cast<std::size_t>(t.units_) * t.panels_ * kNodes);
  while (in >> val) t.values_.push_back(parse_hex(val));
  if (t.values_.size() != static_cast<std::size_t>(t.units_) * t.panels_ * kNodes) {
    throw DomainError("dickman cache: truncated table");
  }
  return t;
}

const DickmanTable& default_dickman_table() {
  static const DickmanTable table = [] {
    constexpr double kUMax = 40.0;
    constexpr double kTol = 1e-13;
    const std::string name = "dickman-u40-tol1e-13.txt";
    if (auto text = cache_load(name)) {
      try {
        return DickmanTable::deserialize(*text);
      } catch (const Error&) {
        // fall through and rebuild
      }
    }
    DickmanTable t = DickmanTable::build(kUMax, kTol);
    cache_store(name, t.serialize());
    return t;
  }();
  return table;
}

cplx expint_J(cplx s) {
  if (s.imag() == 0.0 && s.real() <= 0.0) {
    throw DomainError("expint_J: s lies on the branch cut (-inf, 0]");
  }
  const double r = std::abs(s);
  const bool near_cut = s.real() < 0.0 && std::abs(s.imag()) < 4.0;
  if (r <= 4.0 || near_cut) {
    if (r > 20.0) {
      throw PrecisionLoss("expint_J: series would lose too many digits near the cut");
    }
    // E1(s) = -gamma - Log s + sum_{m>=1} (-1)^{m+1} s^m / (m m!)
    CompensatedComplexSum series;
    cplx term = s;  // (-1)^{m+1} s^m / m!
    for (int m = 1; m < 400; ++m) {
      const cplx add = term / static_cast<double>(m);
      series.add(add);
      if (std::abs(add) < 1e-18 * std::max(1.0, std::abs(series.value()))) break;
      term *= -s / static_cast<double>(m + 1);
    }
    return -kEulerGamma - std::log(s) + series.value();
  }
  // J(s) = e^{-s} int_0^inf e^{-t} / (s + t) dt; the pole -s is at distance
  // >= 4 from the ray. e^{-48} bounds the dropped tail relative to 1/|s|.
  static constexpr double kBreaks[] = {0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 48.0};
  QuadOptions opts;
  opts.abs_tol = 1e-300;
  opts.rel_tol = 1e-15;
  opts.initial_panels = 1;
  const auto res = integrate([s](double t) { return std::exp(-t) / (s + t); },
                             std::span<const double>(kBreaks), opts);
  return std::exp(-s) * res.value;
}

cplx rho_hat_log(double x) {
  if (x == 0.0) return {kEulerGamma, 0.0};
  const cplx s{0.0, x};
  return -expint_J(s) - std::log(s);
}

RhoHatValue rho_hat(double x) {
  const cplx s{0.0, x};
  if (x == 0.0) return {s, {kExpEulerGamma, 0.0}, {kEulerGamma, 0.0}};
  const cplx l = rho_hat_log(x);
  const cplx v = std::exp(l);
  return {s, v, std::log(v)};
}

RhoHatPowPath rho_hat_pow(std::span<const double> xs, cplx alpha) {
  RhoHatPowPath out;
  out.alpha = alpha;
  out.path = BranchedPath::build([](double x) { return rho_hat(x).value; }, xs, 0.0,
                                 {kEulerGamma, 0.0});
  for (const auto& n : out.path.nodes()) {
    if (!n.requested) continue;
    out.xs.push_back(n.x);
    out.values.push_back(alpha == cplx{0.0, 0.0} ? cplx{1.0, 0.0}
                                                 : std::exp(alpha * n.log_value));
  }
  return out;
}

}  // namespace smoothsum
