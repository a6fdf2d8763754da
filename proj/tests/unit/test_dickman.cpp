#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "smoothsum/dickman.hpp"
#include "smoothsum/error.hpp"
#include "smoothsum/quadrature.hpp"

using namespace smoothsum;

namespace {

// rho on [2, 3] from rho(u) = 1 - log u + integral_2^u log(t - 1)/t dt.
double rho_on_2_3(double u) {
  QuadOptions o;
  o.abs_tol = 1e-15;
  const auto q = integrate([](double t) { return cplx{std::log(t - 1.0) / t, 0.0}; }, 2.0, u, o);
  return 1.0 - std::log(u) + q.value.real();
}

cplx laplace_of_rho(double x) {
  const auto& rho = default_dickman_table();
  std::vector<double> bp;
  for (int u = 0; u <= 40; ++u) bp.push_back(u);
  QuadOptions o;
  o.abs_tol = 1e-12;
  return integrate([&](double u) { return rho(u) * std::polar(1.0, -x * u); }, bp, o).value;
}

}  // namespace

TEST_CASE("rho golden values") {
  const auto& rho = default_dickman_table();
  CHECK(rho(0.5) == 1.0);
  CHECK(rho(1.0) == 1.0);
  CHECK(rho(0.0) == 1.0);
  CHECK(rho(-0.5) == 0.0);
  CHECK(std::abs(rho(2.0) - (1.0 - std::log(2.0))) < 1e-13);
  CHECK(std::abs(rho(3.0) - 0.0486083882911316) < 1e-13);
  CHECK(std::abs(rho(3.0) - rho_on_2_3(3.0)) < 1e-13);
  CHECK(std::abs(rho(2.5) - rho_on_2_3(2.5)) < 1e-13);
  CHECK(rho.accuracy() <= 1e-13);
}

TEST_CASE("rho matches 1 - log u on [1, 2]") {
  const auto& rho = default_dickman_table();
  for (int i = 0; i <= 100; ++i) {
    const double u = 1.0 + i / 100.0;
    CHECK(std::abs(rho(u) - (1.0 - std::log(u))) < 1e-13);
  }
}

TEST_CASE("rho is positive and strictly decreasing") {
  const auto& rho = default_dickman_table();
  double prev = rho(1.0);
  for (int i = 1; i <= 3900; ++i) {
    const double u = 1.0 + i * 0.01;
    const double v = rho(u);
    CHECK(v > 0.0);
    CHECK(v < prev);
    prev = v;
  }
  CHECK_THROWS_AS(rho(40.5), DomainError);
}

TEST_CASE("rho table build preconditions and serialization") {
  CHECK_THROWS_AS(DickmanTable::build(0.5, 1e-8), DomainError);
  CHECK_THROWS_AS(DickmanTable::build(5.0, 1e-3), DomainError);
  CHECK_THROWS_AS(DickmanTable::build(5.0, 0.0), DomainError);
  CHECK_THROWS_AS(DickmanTable::build(5.0, 1e-30), ToleranceUnachievable);
  const auto t = DickmanTable::build(6.0, 1e-10);
  CHECK(t.accuracy() <= 1e-10);
  const auto back = DickmanTable::deserialize(t.serialize());
  for (double u = 0.0; u <= 6.0; u += 0.37) CHECK(back(u) == t(u));
  CHECK_THROWS_AS(DickmanTable::deserialize("not a table"), DomainError);
}

TEST_CASE("expint_J golden values") {
  CHECK(std::abs(expint_J(1.0) - 0.21938393439552) < 1e-13);
  const cplx j10 = expint_J(10.0);
  CHECK(std::abs(j10.real() - 4.15696892968532e-6) < 1e-17);
  CHECK(j10.real() < std::exp(-10.0) / 10.0);
  const double s = 1e-8;
  CHECK(std::abs((expint_J(s) + std::log(s)).real() + kEulerGamma) < 1e-7);
}

TEST_CASE("expint_J rejects the branch cut") {
  CHECK_THROWS_AS(expint_J(0.0), DomainError);
  CHECK_THROWS_AS(expint_J(-2.0), DomainError);
  CHECK_NOTHROW(expint_J(cplx{-2.0, 0.1}));
}

TEST_CASE("expint_J equals the exponential integral along another contour") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> re(0.3, 12.0);
  std::uniform_real_distribution<double> im(-12.0, 12.0);
  for (int i = 0; i < 20; ++i) {
    const cplx s{re(rng), im(rng)};
    // u = s (1 + r), r >= 0
    const double R = 40.0 / s.real();
    std::vector<double> bp;
    for (int j = 0; j <= 32; ++j) bp.push_back(R * j / 32.0);
    QuadOptions o;
    o.abs_tol = 1e-13;
    o.max_panels = 200000;
    const cplx ray =
        integrate([s](double r) { return std::exp(-s * (1.0 + r)) / (1.0 + r); }, bp, o).value;
    CHECK(std::abs(expint_J(s) - ray) < 1e-10);
  }
}

TEST_CASE("expint_J is smooth across the series threshold") {
  // J'(s) = -e^{-s}/s, so the jump over a tiny step is first order in it
  for (double arg : {0.3, 1.2, 2.0, 2.9}) {
    const cplx in = std::polar(3.999999, arg);
    const cplx out = std::polar(4.000001, arg);
    const cplx mid = std::polar(4.0, arg);
    const cplx slope = -std::exp(-mid) / mid;
    CHECK(std::abs(expint_J(out) - expint_J(in) - slope * (out - in)) < 1e-9);
  }
}

TEST_CASE("rho_hat at zero is exp(gamma) by two routes") {
  const RhoHatValue r0 = rho_hat(0.0);
  CHECK(r0.value == cplx{kExpEulerGamma, 0.0});
  CHECK(std::abs(r0.value.real() - std::exp(kEulerGamma)) < 1e-15);
  CHECK(std::abs(laplace_of_rho(0.0) - std::exp(kEulerGamma)) < 1e-10);
}

TEST_CASE("s rho_hat(s) = exp(-J(s)) on the imaginary axis") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> pick(-30.0, 30.0);
  for (int i = 0; i < 50; ++i) {
    const double x = pick(rng);
    const cplx s{0.0, x};
    CHECK(std::abs(s * rho_hat(x).value - std::exp(-expint_J(s))) < 1e-8);
  }
}

TEST_CASE("rho_hat(i) agrees with direct Laplace quadrature") {
  for (double x : {1.0, -1.0, 2.5}) {
    CHECK(std::abs(rho_hat(x).value - laplace_of_rho(x)) < 1e-6);
  }
  CHECK(std::abs(rho_hat(-1.7).value - std::conj(rho_hat(1.7).value)) < 1e-15);
}

TEST_CASE("|rho_hat(ix)| sqrt(1 + x^2) stays within scanned constants") {
  double c1 = 1e300;
  double c2 = 0.0;
  for (int i = -1000; i <= 1000; ++i) {
    const double x = i / 100.0;
    const double v = std::abs(rho_hat(x).value) * std::sqrt(1.0 + x * x);
    c1 = std::min(c1, v);
    c2 = std::max(c2, v);
  }
  CHECK(c1 > 0.8);
  CHECK(c2 < 2.0);
  for (double x : {30.0, 100.0, -100.0, 1000.0}) {
    const double v = std::abs(rho_hat(x).value) * std::sqrt(1.0 + x * x);
    CHECK(v >= c1);
    CHECK(v <= c2);
  }
}

TEST_CASE("rho_hat_pow special cases") {
  const std::vector<double> xs{-3.0, -1.0, 0.0, 1.0, 2.0, 5.0};
  const auto p0 = rho_hat_pow(xs, 0.0);
  for (const auto& v : p0.values) CHECK(v == cplx{1.0, 0.0});
  const auto p1 = rho_hat_pow(xs, 1.0);
  CHECK(std::abs(p1.values[2] - std::exp(kEulerGamma)) < 1e-14);
  const auto p2 = rho_hat_pow(xs, 2.0);
  const cplx r1 = rho_hat(1.0).value;
  CHECK(std::abs(p2.values[3] - r1 * r1) < 1e-14);
}

TEST_CASE("integer powers along the path match repeated multiplication") {
  std::vector<double> xs;
  for (int i = -200; i <= 200; ++i) xs.push_back(i * 0.15);
  for (int n : {-2, 1, 3, 5}) {
    const auto p = rho_hat_pow(xs, static_cast<double>(n));
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const cplx r = rho_hat(xs[i]).value;
      cplx direct = 1.0;
      for (int j = 0; j < std::abs(n); ++j) direct *= r;
      if (n < 0) direct = 1.0 / direct;
      CHECK(std::abs(p.values[i] / direct - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("the unwrapped log of rho_hat is continuous and decays as a power") {
  std::vector<double> xs;
  for (int i = -400; i <= 400; ++i) xs.push_back(i * 0.25);
  const auto p = rho_hat_pow(xs, cplx{0.5, 0.5});
  const auto nodes = p.path.nodes();
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    CHECK(std::abs(nodes[i].log_value.imag() - nodes[i - 1].log_value.imag()) < kPi / 2);
  }
  double c = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    c = std::max(c, std::abs(p.values[i]) * std::pow(1.0 + xs[i] * xs[i], 0.25));
  }
  CHECK(c < 10.0);
  // imaginary part of the log is -Si(x), bounded by Si(pi)
  for (const auto& n : nodes) CHECK(std::abs(n.log_value.imag()) < 1.852);
}
