#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "smoothsum/arith.hpp"
#include "smoothsum/error.hpp"
#include "smoothsum/euler_products.hpp"
#include "smoothsum/zeta.hpp"

using namespace smoothsum;

namespace {

PrimeView primes_to(std::uint64_t n) { return shared_primes(n)->view_up_to(n); }

}  // namespace

TEST_CASE("zeta_partial closed forms") {
  CHECK(std::abs(zeta_partial(10, 1.0).value - 4.375) < 1e-14);
  CHECK(std::abs(zeta_partial(2, 2.0).value - 4.0 / 3.0) < 1e-15);
  const auto v = zeta_partial(10, 1.0);
  CHECK(std::abs(std::exp(v.log_value) - v.value) <= 1e-12 * std::abs(v.value));
  CHECK(v.tail_bound == 0.0);
  CHECK_THROWS_AS(zeta_partial(10, cplx{0.5, 1.0}), DomainError);
}

TEST_CASE("Mertens product") {
  const double N = 1e6;
  const double ratio = zeta_partial(1000000, 1.0).value.real() / (std::exp(kEulerGamma) * std::log(N));
  CHECK(std::abs(ratio - 1.0) < 0.01);
}

TEST_CASE("g_product closed forms") {
  CHECK(std::abs(g_product({1.0, 2, 10}, 1.0).value - 576.0 / 210.0) < 1e-14);
  CHECK(std::abs(g_product({2.0, 2, 3}, 1.0).value - 10.0 / 3.0) < 1e-14);
  for (int k : {2, 3, 7}) {
    const auto g = g_product({0.0, k, 1000}, cplx{1.0, 2.0});
    CHECK(g.value == cplx{1.0, 0.0});
  }
}

TEST_CASE("g_product direct and ratio forms agree") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-2.5, 2.5);
  for (int i = 0; i < 20; ++i) {
    const cplx a{u(rng), u(rng)};
    const cplx s{1.0 + 0.2 * std::abs(u(rng)), u(rng)};
    for (int k : {2, 3, 5}) {
      const auto d = g_product(primes_to(1000), a, k, s);
      const auto r = g_product_ratio(primes_to(1000), a, k, s);
      CHECK(std::abs(d.value - r.value) <= 1e-11 * std::abs(d.value));
    }
  }
}

TEST_CASE("ratio form reports the singular factor; the direct form does not") {
  CHECK_THROWS_AS(g_product_ratio(primes_to(10), 2.0, 2, 1.0), SingularFactor);
  CHECK(std::abs(g_product(primes_to(2), 2.0, 2, 1.0).value - 2.0) < 1e-15);
  CHECK_THROWS_AS(h_finite(primes_to(10), 2.0, 2, 1.0), SingularFactor);
}

TEST_CASE("h_finite closed forms") {
  const double expected = (3.0 / 4) * (8.0 / 9) * (24.0 / 25) * (48.0 / 49);
  CHECK(std::abs(h_finite({1.0, 2, 10}, 1.0).value - expected) < 1e-14);
  CHECK(std::abs(expected - 0.62693878) < 1e-8);
  CHECK(h_finite({0.0, 2, 500}, cplx{1.0, 1.0}).value == cplx{1.0, 0.0});
  double cube = 1.0;
  for (double p : {2.0, 3.0, 5.0, 7.0}) cube *= 1.0 - std::pow(p, -3.0);
  CHECK(std::abs(h_finite({1.0, 3, 10}, 1.0).value - cube) < 1e-14);
}

TEST_CASE("g = zeta_N^alpha h_N factor by factor") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::uint64_t Ns[3] = {100, 1000, 10000};
  for (int i = 0; i < 100; ++i) {
    const cplx a = std::polar(3.0 * std::sqrt(unit(rng)), 2.0 * kPi * unit(rng));
    const int k = 2 + static_cast<int>(3.0 * unit(rng));
    const std::uint64_t N = Ns[static_cast<int>(3.0 * unit(rng))];
    const cplx s{1.0, -3.0 + 6.0 * unit(rng)};
    const auto view = primes_to(N);
    const auto g = g_product(view, a, k, s);
    const auto z = zeta_partial(view, s);
    const auto h = h_finite(view, a, k, s);
    cplx d = g.log_value - a * z.log_value - h.log_value;
    d.imag(std::remainder(d.imag(), 2.0 * kPi));
    CHECK(std::abs(d) < 1e-10);
    const auto zp = zeta_partial_pow(view, s, a);
    CHECK(std::abs(g.value - zp.value * h.value) <= 1e-10 * std::abs(g.value));
  }
}

TEST_CASE("h_infinite at alpha = 1 is 1/zeta(ks)") {
  CHECK(std::abs(h_infinite(1.0, 2, 1.0).value - 6.0 / (kPi * kPi)) < 1e-13);
  CHECK(std::abs(h_infinite(1.0, 3, 1.0).value - 0.83190737258070746) < 1e-13);
  for (int k : {2, 3, 4}) {
    const HInfinite h(1.0, k);
    for (double tau : {0.0, 1.0, 3.0, -2.0}) {
      const cplx s{1.0, tau};
      const cplx expected = 1.0 / zeta(static_cast<double>(k) * s).zeta;
      CHECK(std::abs(h(s).value - expected) < 1e-12);
    }
  }
  CHECK(h_infinite(0.0, 3, cplx{1.0, 2.0}).value == cplx{1.0, 0.0});
}

TEST_CASE("h_infinite tail bound is honest") {
  for (cplx a : {cplx{0.5, 0.5}, cplx{-1.0, 0.0}, cplx{2.5, -1.0}}) {
    for (double tau : {0.0, 2.0}) {
      const cplx s{1.0, tau};
      const auto coarse = h_truncated(a, 2, s, 2000);
      const auto fine = h_truncated(a, 2, s, 8000);
      CHECK(std::abs(fine.value - coarse.value) <= coarse.tail_bound);
      const auto inf = HInfinite(a, 2, 1e-13)(s);
      CHECK(std::abs(inf.value - coarse.value) <= coarse.tail_bound);
      const auto other = HInfinite(a, 2, 1e-13, 40000)(s);
      CHECK(std::abs(inf.value - other.value) <= inf.tail_bound + other.tail_bound);
      CHECK(inf.tail_bound < 1e-12 * std::abs(inf.value) + 1e-15);
    }
  }
}

TEST_CASE("h_infinite preconditions") {
  CHECK_THROWS_AS(h_infinite(1.0, 2, cplx{0.9, 0.0}), DomainError);
  CHECK_THROWS_AS(h_infinite(1.0, 1, 1.0), DomainError);
  CHECK_THROWS_AS(HInfinite(2e7, 2), ToleranceUnachievable);
  CHECK_THROWS_AS(HInfinite(1.0, 2, 1e-13, 8), ToleranceUnachievable);
}

TEST_CASE("h_N is uniformly bounded in N") {
  const cplx a{1.5, 0.7};
  std::vector<double> maxima;
  for (std::uint64_t N : {10, 100, 1000, 10000, 100000, 1000000}) {
    double m = 0.0;
    for (int i = -30; i <= 30; ++i) {
      m = std::max(m, std::abs(h_finite(primes_to(N), a, 2, cplx{1.0, i / 10.0}).value));
    }
    maxima.push_back(m);
  }
  for (std::size_t i = 4; i < maxima.size(); ++i) {
    CHECK(std::abs(maxima[i] / maxima[3] - 1.0) < 0.01);
  }
}

TEST_CASE("h_N / h - 1 measurements") {
  std::vector<double> taus;
  for (int i = -30; i <= 30; ++i) taus.push_back(i / 10.0);

  const std::vector<std::uint64_t> doubling{1000, 2000};
  const auto rep = lemma1_check(1.0, 2, doubling, taus);
  CHECK(rep.rows[1].decay_ratio >= 1.8);

  const auto zero = lemma1_check(0.0, 2, doubling, taus);
  for (const auto& row : zero.rows) CHECK(row.max_error == 0.0);

  // alpha = 1, k = 2, tau = 0: h_N / h = prod_{p > N} (1 - p^{-2})^{-1}
  const std::uint64_t N = 1000;
  const std::vector<std::uint64_t> one{N};
  const std::vector<double> zero_tau{0.0};
  const double measured = lemma1_check(1.0, 2, one, zero_tau).rows[0].max_error;
  const auto big = shared_primes(10000000);
  double tail = 0.0;
  for (std::size_t i = big->count_up_to(N); i < big->size(); ++i) {
    const double p = big->primes()[i];
    tail += 1.0 / (p * p);
  }
  CHECK(measured / tail > 0.5);
  CHECK(measured / tail < 2.0);

  const std::vector<std::uint64_t> small{50};
  CHECK_THROWS_AS(lemma1_check(1.0, 2, small, taus), DomainError);
}

TEST_CASE("g_envelope bounds g on the 1-line") {
  const cplx a{-1.2, 0.8};
  const double env = g_envelope(primes_to(300), a, 3);
  for (int i = -20; i <= 20; ++i) {
    CHECK(std::abs(g_product(primes_to(300), a, 3, cplx{1.0, i * 0.7}).value) <= env);
  }
}
