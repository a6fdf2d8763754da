#include <doctest.h>

#include <cmath>

#include "smoothsum/arith.hpp"
#include "smoothsum/error.hpp"
#include "smoothsum/euler_products.hpp"
#include "smoothsum/oracle.hpp"
#include "smoothsum/parallel.hpp"
#include "smoothsum/test_function.hpp"

using namespace smoothsum;

TEST_CASE("alpha = 0 leaves only n = 1") {
  const auto g = TestFunction::gaussian(1.0, 0.4);
  const auto r = brute_S({0.0, 3, 1000}, g, default_u_cutoff(g));
  CHECK(r.value == g.f(0.0));
  CHECK(r.terms_used == 1);
}

TEST_CASE("constant weight gives the Euler product") {
  const auto one = TestFunction::constant_one();
  const auto a = brute_S({1.0, 2, 10}, one, kUnbounded);
  CHECK(std::abs(a.value - 576.0 / 210.0) < 1e-14);
  CHECK(a.terms_used == 16);
  CHECK(a.tail_certificate == 0.0);
  const auto b = brute_S({2.0, 2, 3}, one, kUnbounded);
  CHECK(std::abs(b.value - 10.0 / 3.0) < 1e-15);
  CHECK(b.terms_used == 4);
  for (cplx alpha : {cplx{-0.7, 0.3}, cplx{1.5, -1.0}}) {
    for (int k : {2, 3}) {
      const SumParams p{alpha, k, k == 2 ? 50ull : 30ull};
      const auto r = brute_S(p, one, kUnbounded);
      const auto g = g_product(p, 1.0);
      CHECK(std::abs(r.value - g.value) <= 1e-12 * std::abs(g.value));
    }
  }
}

TEST_CASE("conjugation symmetry") {
  const auto g = TestFunction::gaussian(1.0, 0.4);
  const cplx a{0.4, 0.9};
  const auto r = brute_S({a, 3, 40}, g, default_u_cutoff(g));
  const auto c = brute_S({std::conj(a), 3, 40}, g, default_u_cutoff(g));
  CHECK(std::abs(c.value - std::conj(r.value)) <= 1e-15 * std::abs(r.value));
}

TEST_CASE("refinement stays within the certificate") {
  const auto g = TestFunction::gaussian(1.0, 0.4);
  const SumParams p{{0.5, 0.5}, 2, 30};
  double prev_cert = 0.0;
  cplx prev{};
  for (double u : {1.5, 2.0, 2.5, 3.0, default_u_cutoff(g)}) {
    const auto r = brute_S(p, g, u);
    CHECK(r.tail_certificate >= 0.0);
    if (u > 1.5) CHECK(std::abs(r.value - prev) <= prev_cert);
    prev = r.value;
    prev_cert = r.tail_certificate;
  }
  CHECK(prev_cert < 1e-12);
}

TEST_CASE("default cutoff and Rankin tail") {
  const auto g = TestFunction::gaussian(1.0, 0.4);
  CHECK(default_u_cutoff(g) == doctest::Approx(1.0 + 0.4 * std::sqrt(60.0)));
  CHECK(std::isinf(default_u_cutoff(TestFunction::constant_one())));
  const SumParams p{1.0, 2, 10};
  const double trivial = g_envelope(shared_primes(10)->view_up_to(10), 1.0, 2);
  const double rankin = rankin_tail(p, 1.0, 3.0);
  CHECK(rankin < trivial);
  CHECK(rankin > 0.0);
  CHECK(rankin_tail(p, 1.0, 0.0) <= trivial);
  CHECK(rankin_tail(p, 1.0, kUnbounded) == 0.0);
}

TEST_CASE("count cap") {
  const auto one = TestFunction::constant_one();
  EnumerationOptions opts;
  opts.count_cap = 100;
  CHECK_THROWS_AS(brute_S({1.0, 2, 100}, one, kUnbounded, opts), CountCapExceeded);
  CHECK_NOTHROW(brute_S({1.0, 2, 10}, one, kUnbounded, opts));
}

TEST_CASE("thread count does not change the result") {
  const auto g = TestFunction::gaussian(1.0, 0.4);
  const SumParams p{{0.3, -1.1}, 3, 200};
  set_max_threads(1);
  const auto a = brute_S(p, g, 3.0);
  set_max_threads(4);
  const auto b = brute_S(p, g, 3.0);
  set_max_threads(1);
  CHECK(a.value == b.value);
  CHECK(a.terms_used == b.terms_used);
}
