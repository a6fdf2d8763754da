#include <doctest.h>

#include <cmath>
#include <vector>

#include "smoothsum/asymptotic.hpp"
#include "smoothsum/dickman.hpp"
#include "smoothsum/error.hpp"
#include "smoothsum/euler_products.hpp"
#include "smoothsum/oracle.hpp"
#include "smoothsum/quadrature.hpp"
#include "smoothsum/test_function.hpp"

using namespace smoothsum;

TEST_CASE("gaussian test function values") {
  const auto g = TestFunction::gaussian(0.0, 1.0);
  CHECK(std::abs(g.f(0.0) - 1.0) < 1e-15);
  const auto total = integrate([&](double x) { return g.fhat(x); }, -g.x_max(), g.x_max());
  CHECK(std::abs(total.value - 1.0) < 1e-12);
  const auto at2 = integrate([&](double x) { return g.fhat(x) * std::exp(cplx{0.0, -2.0 * x}); },
                             -g.x_max(), g.x_max());
  CHECK(std::abs(at2.value - std::exp(-2.0)) < 1e-12);
  CHECK(std::abs(at2.value.real() - 0.13533528) < 1e-8);
  CHECK(g.fhat_tail(g.x_max()) <= 1e-14);

  const auto h = TestFunction::gaussian(1.0, 0.5);
  CHECK(std::abs(h.f(1.0) - 1.0) < 1e-15);
  CHECK(h.f_sup_beyond(0.5) == doctest::Approx(1.0));
  CHECK(h.f_sup_beyond(2.0) == doctest::Approx(std::exp(-2.0)));
  CHECK_THROWS_AS(TestFunction::gaussian(0.0, 0.0), DomainError);
}

TEST_CASE("cutoff_for honours the tail") {
  const auto g = TestFunction::gaussian(0.0, 0.4);
  for (double tol : {1e-3, 1e-8, 1e-13}) {
    const double X = g.cutoff_for(tol);
    CHECK(g.fhat_tail(X) <= tol);
    CHECK(std::abs(g.fhat_tail(X) - std::erfc(0.4 * X / std::sqrt(2.0))) < 1e-15);
  }
  CHECK_THROWS_AS(g.cutoff_for(1e-20), ToleranceUnachievable);
}

TEST_CASE("constant test function is brute-force only") {
  const auto one = TestFunction::constant_one();
  CHECK(one.is_test_mode());
  CHECK(one.f(123.0) == cplx{1.0, 0.0});
  CHECK_THROWS_AS(one.fhat(0.0), DomainError);
  CHECK_THROWS_AS(exact_integral({1.0, 2, 30}, one), DomainError);
}

TEST_CASE("tabulated test functions check the transform convention") {
  // f(t) = e^{-|t|}, fhat(x) = 1 / (pi (1 + x^2))
  auto f = [](double t) { return cplx{std::exp(-std::abs(t)), 0.0}; };
  auto fhat = [](double x) { return cplx{1.0 / (kPi * (1.0 + x * x)), 0.0}; };
  const auto t = TestFunction::tabulated(f, fhat, 2.0, 1.0 / kPi, 1e3);
  CHECK(t.family() == TestFamily::tabulated);
  CHECK(t.fhat_tail(10.0) > 0.0);

  const auto g = TestFunction::gaussian(1.0, 0.4);
  auto gf = [g](double u) { return g.f(u); };
  auto wrong_sign = [g](double x) { return std::conj(g.fhat(x)); };
  CHECK_THROWS_AS(TestFunction::tabulated(gf, wrong_sign, 4.0, 1.0, 40.0), DomainError);
  auto with_2pi = [g](double x) { return g.fhat(x) * (2.0 * kPi); };
  CHECK_THROWS_AS(TestFunction::tabulated(gf, with_2pi, 4.0, 10.0, 40.0), DomainError);
  CHECK_THROWS_AS(TestFunction::tabulated(gf, wrong_sign, 1.0, 1.0, 40.0), DomainError);
}

TEST_CASE("exact integral: alpha = 0 gives f(0)") {
  const auto g = TestFunction::gaussian(1.0, 0.4);
  for (int k : {2, 3}) {
    const auto r = exact_integral({0.0, k, 30}, g);
    CHECK(std::abs(r.value - g.f(0.0)) <= 1e-9);
  }
}

TEST_CASE("exact integral agrees with brute force") {
  const auto g = TestFunction::gaussian(1.0, 0.4);
  for (cplx a : {cplx{1.0, 0.0}, cplx{-1.0, 0.0}, cplx{0.5, 0.5}}) {
    for (int k : {2, 3}) {
      for (std::uint64_t N : {10, 30}) {
        const SumParams p{a, k, N};
        const auto ex = exact_integral(p, g, {1e-10});
        const auto br = brute_S(p, g, default_u_cutoff(g));
        const double budget = ex.total_error() + br.tail_certificate + 1e-12;
        CHECK(std::abs(ex.value - br.value) <= budget);
      }
    }
  }
}

TEST_CASE("main term: alpha = 0 and preconditions") {
  const auto g = TestFunction::gaussian(1.0, 0.4);
  const SumParams p{0.0, 2, 1000};
  const auto m = main_term(p, g);
  const double X = 3.0 * p.logN();
  CHECK(std::abs(m.value - g.f(0.0)) <= m.total_error() + g.fhat_tail(X) + 1e-12);

  const auto weak = TestFunction::gaussian(1.0, 0.4, 1.5);
  CHECK_THROWS_AS(main_term({-1.0, 2, 1000}, weak), EtaTooSmall);
  CHECK_NOTHROW(require_eta(weak, 0.0));
  CHECK_THROWS_AS(require_eta(TestFunction::gaussian(0.0, 1.0, 1.0), 1.0), EtaTooSmall);
  CHECK_THROWS_AS(main_term({1.0, 2, 10}, g), DomainError);
  MainTermOptions lower;
  lower.N_floor = 5;
  CHECK_NOTHROW(main_term({1.0, 2, 10}, g, lower));
  CHECK_THROWS_AS(main_term({1.0, 2, 1000}, TestFunction::constant_one()), DomainError);
}

TEST_CASE("main term: branch route equals integer powers") {
  const auto g = TestFunction::gaussian(1.0, 0.4);
  for (double a : {1.0, 2.0}) {
    const SumParams p{a, 2, 10000};
    MainTermOptions branch;
    MainTermOptions integer;
    integer.integer_powers = true;
    const auto b = main_term(p, g, branch);
    const auto i = main_term(p, g, integer);
    CHECK(std::abs(b.value - i.value) <= 1e-9);
  }
}

TEST_CASE("main term is stable under refinement") {
  const auto g = TestFunction::gaussian(1.0, 0.4);
  const SumParams p{{0.5, 0.5}, 2, 1000};
  MainTermOptions refined;
  refined.refine_all = true;
  const auto base = main_term(p, g);
  const auto fine = main_term(p, g, refined);
  CHECK(std::abs(base.value - fine.value) <= base.quad_error + 1e-14);
}

TEST_CASE("log_power uses the real-positive branch") {
  for (cplx a : {cplx{1.0, 0.0}, cplx{0.5, 2.0}, cplx{-1.5, -3.0}}) {
    for (std::uint64_t N : {100, 100000}) {
      const double L = std::log(static_cast<double>(N));
      CHECK(std::abs(std::abs(log_power(N, a)) - std::pow(L, a.real())) <=
            1e-14 * std::pow(L, a.real()));
    }
  }
  CHECK(std::abs(log_power(1000, 2.0) - std::pow(std::log(1000.0), 2.0)) < 1e-12);
}

TEST_CASE("theorem 2 report rows") {
  const auto g = TestFunction::gaussian(1.0, 0.4);
  const std::vector<SumParams> ps{{0.0, 2, 1000}, {1.0, 2, 1000}, {1.0, 2, 10000}};
  const auto rows = theorem2_report(ps, g);
  REQUIRE(rows.size() == 3);
  CHECK(std::abs(rows[0].E) <= 1e-6);
  for (const auto& r : rows) {
    CHECK(std::abs(std::abs(r.log_pow) - std::pow(r.params.logN(), r.params.alpha.real())) <=
          1e-13 * std::abs(r.log_pow));
    CHECK(std::abs(r.model - r.main.value * r.log_pow) <= 1e-15 * std::abs(r.model));
    CHECK(r.E_bound >= 0.0);
  }
  CHECK(std::abs(rows[2].E) < std::abs(rows[1].E));

  const double L = std::log(1000.0);
  CHECK(theorem2_envelope(-1.0, 4.0, 1000) == doctest::Approx(std::pow(L, -3.0)));
  CHECK(theorem2_envelope(1.0, 4.0, 1000) ==
        doctest::Approx(std::pow(L, -3.0) * std::pow(std::log(L), 2.0 / 3.0)));
}

TEST_CASE("partial zeta against the Dickman transform") {
  std::vector<double> taus;
  for (int i = -20; i <= 20; ++i) taus.push_back(i * 0.15);
  const std::vector<std::uint64_t> Ns{1000, 10000, 100000};
  const auto rep = tenenbaum_check(Ns, taus, 0.05);
  REQUIRE(rep.rows.size() == 3);
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const auto& row = rep.rows[i];
    const double mertens = zeta_partial(row.N, 1.0).value.real() /
                           (std::log(static_cast<double>(row.N)) * kExpEulerGamma);
    CHECK(std::abs(row.error_at_zero - std::abs(mertens - 1.0)) < 1e-9);
    for (std::size_t j = 0; j < taus.size(); ++j) {
      CHECK(std::abs(row.errors[j] - row.errors[taus.size() - 1 - j]) <=
            1e-9 * (1.0 + row.errors[j]));
    }
    if (i > 0) CHECK(row.max_error < rep.rows[i - 1].max_error);
    const double L = std::log(static_cast<double>(row.N));
    CHECK(row.L_eps == doctest::Approx(std::exp(std::pow(L, 0.55))));
  }
  const std::vector<std::uint64_t> small{500};
  CHECK_THROWS_AS(tenenbaum_check(small, taus), DomainError);
  const std::vector<double> wide{4.0};
  CHECK_THROWS_AS(tenenbaum_check(Ns, wide), DomainError);
}

TEST_CASE("error decomposition") {
  const auto g = TestFunction::gaussian(1.0, 0.4);
  const auto d = error_decomposition({1.0, 2, 1000}, g);
  CHECK(std::abs(d.outer.value) < 1e-10);
  CHECK(std::abs(d.full.value - d.restricted.value - d.outer.value) <=
        d.full.total_error() + d.restricted.total_error() + d.outer.total_error() + 1e-13);

  // alpha = 0: the outer piece is the transform tail itself
  const auto c = TestFunction::gaussian(0.0, 0.4);
  const auto z = error_decomposition({0.0, 2, 30}, c);
  const double X = 3.0 * std::log(30.0);
  const double expected = std::erfc(0.4 * X / std::sqrt(2.0));
  CHECK(expected > 1e-6);
  CHECK(std::abs(z.outer.value - expected) <= 1e-10 * expected + z.outer.total_error());

  const auto e3 = error_decomposition({1.0, 2, 1000}, g);
  const auto e4 = error_decomposition({1.0, 2, 10000}, g);
  CHECK(e3.E2 / e4.E2 >= 8.0);
  CHECK(e4.E2_bound >= 0.0);
  CHECK(e3.E2_predicted == doctest::Approx(1.0 / 1000.0));
}

TEST_CASE("F_weight") {
  const auto g = TestFunction::gaussian(1.0, 0.4);
  const auto path = rho_hat_path(20.0);
  for (double x : {-7.3, -1.0, 0.0, 0.4, 12.5}) {
    CHECK(std::abs(F_weight(g, 0.0, path, x) - g.fhat(x)) < 1e-15);
    const cplx direct = g.fhat(x) * rho_hat(x).value;
    CHECK(std::abs(F_weight(g, 1.0, path, x) - direct) <= 1e-10 * std::abs(direct));
    CHECK(std::abs(F_weight(g, cplx{0.3, -0.2}, x) - F_weight(g, cplx{0.3, -0.2}, path, x)) <=
          1e-12 * std::abs(g.fhat(x)));
  }
  const cplx a{0.7, 1.1};
  CHECK(std::abs(F_weight(g, a, 0.0) - g.fhat(0.0) * std::exp(kEulerGamma * a)) < 1e-12);
}
