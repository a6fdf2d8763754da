#include <doctest.h>

#include <cmath>
#include <vector>

#include "smoothsum/error.hpp"
#include "smoothsum/zeta.hpp"

using namespace smoothsum;

TEST_CASE("zeta closed forms") {
  CHECK(std::abs(zeta(cplx{2.0, 0.0}).zeta - kPi * kPi / 6.0) < 1e-13);
  CHECK(std::abs(zeta(cplx{4.0, 0.0}).zeta - std::pow(kPi, 4) / 90.0) < 1e-13);
  CHECK(std::abs(zeta(cplx{3.0, 0.0}).zeta - 1.2020569031595942) < 1e-13);
  // first nontrivial zero
  CHECK(std::abs(zeta(cplx{0.5, 14.134725141734693}).zeta) < 1e-9);
}

TEST_CASE("regular factor tends to 1 at s = 1") {
  CHECK(regular_factor(cplx{1.0, 0.0}) == cplx{1.0, 0.0});
  const ZetaValue z1 = zeta(cplx{1.0, 0.0});
  CHECK(z1.regular == cplx{1.0, 0.0});
  CHECK(z1.method == ZetaMethod::laurent);
  for (double h : {1e-2, 1e-4, 1e-6}) {
    CHECK(std::abs(regular_factor(cplx{1.0 + h, 0.0}) - 1.0) < 1.0 * h);
    CHECK(std::abs(regular_factor(cplx{1.0, h}) - 1.0) < 1.0 * h);
  }
}

TEST_CASE("Euler-Maclaurin self consistency under doubling M") {
  for (cplx s : {cplx{1.0, 3.0}, cplx{1.0, -17.5}, cplx{1.5, 40.0}, cplx{0.75, 2.0}}) {
    const std::size_t M = static_cast<std::size_t>(std::max(20.0, 2.0 * std::abs(s.imag())));
    CHECK(std::abs(zeta_em(s, M) - zeta_em(s, 2 * M)) < 1e-10);
  }
}

TEST_CASE("conjugate symmetry") {
  for (cplx s : {cplx{1.0, 0.7}, cplx{1.0, 25.0}, cplx{2.5, 3.0}, cplx{1.0, 0.01}}) {
    const ZetaValue a = zeta(s);
    const ZetaValue b = zeta(std::conj(s));
    CHECK(std::abs(a.zeta - std::conj(b.zeta)) <= 1e-14 * std::abs(a.zeta));
    CHECK(std::abs(a.regular - std::conj(b.regular)) <= 1e-14 * std::abs(a.regular));
  }
}

TEST_CASE("Stieltjes constants") {
  const auto& g = stieltjes_constants();
  CHECK(std::abs(g[0] - 0.5772156649015329) < 1e-12);
  CHECK(std::abs(g[1] - -0.0728158454836767) < 1e-11);
  CHECK(std::abs(g[2] - -0.0096903631928723) < 1e-10);
  CHECK(std::abs(g[3] - 0.0020538344203034) < 1e-9);
}

TEST_CASE("Laurent and Euler-Maclaurin agree on the switch circle") {
  for (int i = 0; i < 16; ++i) {
    const cplx s = 1.0 + std::polar(kLaurentRadius, 2.0 * kPi * i / 16.0);
    const auto& g = stieltjes_constants();
    const cplx w = s - 1.0;
    cplx laurent = 1.0;
    double fact = 1.0;
    for (int n = 0; n < 4; ++n) {
      if (n > 0) fact *= n;
      laurent += (n % 2 ? -1.0 : 1.0) * g[n] * std::pow(w, n + 1) / fact;
    }
    CHECK(std::abs(laurent - regular_em(s, 64)) < 1e-9);
    CHECK(std::abs(regular_factor(s) - regular_em(s, 64)) < 1e-9);
  }
}

TEST_CASE("regular factor stays away from zero for |tau| <= 3") {
  for (int i = -300; i <= 300; ++i) {
    CHECK(std::abs(regular_factor(cplx{1.0, i / 100.0})) > 0.01);
  }
}

TEST_CASE("regular factor path") {
  const double logN = std::log(1e6);
  std::vector<double> xs;
  for (int i = -60; i <= 60; ++i) xs.push_back(i * 3.0 * logN / 60.0);
  const BranchedPath p = regular_factor_path(xs, logN);
  const auto req = p.requested();
  REQUIRE(req.size() == xs.size());
  CHECK(req[60].value == cplx{1.0, 0.0});
  CHECK(req[60].log_value == cplx{0.0, 0.0});
  const cplx direct = cplx{0.0, 3.0} * zeta(cplx{1.0, 3.0}).zeta;
  CHECK(std::abs(req.back().value - direct) < 1e-10);
  for (const auto& n : req) CHECK(std::abs(std::exp(n.log_value) - n.value) < 1e-12);
  CHECK_THROWS_AS(regular_factor_path(xs, 0.0), DomainError);
}

TEST_CASE("domain and precision errors") {
  CHECK_THROWS_AS(zeta(cplx{0.4, 1.0}), DomainError);
  CHECK_THROWS_AS(zeta(cplx{1.0, 2e7}), PrecisionLoss);
  CHECK_NOTHROW(zeta(cplx{1.0, 1e6}));
}

TEST_CASE("Vinogradov-Korobov bound") {
  for (double t : {3.0, -3.0, 10.0, 1e3, 1e6}) {
    const VkReport r = vk_check(t);
    CHECK(r.holds);
    CHECK(r.zeta_abs < r.bound);
  }
  const VkReport r3 = vk_check(1e3);
  CHECK(r3.zeta_abs < 0.1 * r3.bound);
  CHECK_THROWS_AS(vk_check(2.0), DomainError);
}
