#include "smoothsum/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "smoothsum/error.hpp"
#include "smoothsum/euler_products.hpp"
#include "smoothsum/parallel.hpp"

namespace smoothsum {
namespace {

// log of prod_p sum_{e<k} a^e p^{e(delta-1)}
double log_shifted_product(PrimeView primes, double a, int k, double delta) {
  CompensatedSum acc;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const double r = a * std::exp((delta - 1.0) * primes.logs[i]);
    double inner = 1.0;
    for (int j = 1; j < k - 1; ++j) inner = 1.0 + r * inner;
    acc.add(std::log1p(r * inner));
  }
  return acc.value();
}

}  // namespace

double default_u_cutoff(const TestFunction& f) {
  if (f.family() == TestFamily::gaussian) return f.mu() + f.sigma() * std::sqrt(60.0);
  return kUnbounded;
}

BruteResult brute_S(const SumParams& params, const TestFunction& f, double u_cutoff,
                    const EnumerationOptions& opts) {
  params.validate();
  if (!(u_cutoff >= 0.0)) throw DomainError("brute_S: u_cutoff must be >= 0");
  BruteResult out;
  out.u_cutoff = u_cutoff;
  if (params.alpha == cplx{0.0, 0.0}) {
    out.value = f.f(0.0);
    out.terms_used = 1;
    return out;
  }

  const auto shared = shared_primes(params.N);
  const PrimeSet primes = shared->restricted(params.N);
  const double L = params.logN();
  const double log_cap = std::isinf(u_cutoff) ? kUnbounded : u_cutoff * L;

  const int k = params.k;
  const std::size_t max_omega = static_cast<std::size_t>(k - 1) * primes.size();
  std::vector<cplx> alpha_pow(max_omega + 1);
  alpha_pow[0] = 1.0;
  for (std::size_t i = 1; i <= max_omega; ++i) alpha_pow[i] = alpha_pow[i - 1] * params.alpha;

  std::vector<CompensatedComplexSum> partial(static_cast<std::size_t>(k));
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(k), 0);
  parallel_for(static_cast<std::size_t>(k), [&](std::size_t e) {
    auto& acc = partial[e];
    counts[e] = enumerate_kfree_smooth_subtree(
        primes, k, log_cap, static_cast<int>(e),
        [&](const SmoothElement& el) {
          acc.add(f.f(el.log_n / L) * alpha_pow[static_cast<std::size_t>(el.omega)] *
                  std::exp(-el.log_n));
        },
        opts);
  });
  CompensatedComplexSum total;
  for (std::size_t e = 0; e < partial.size(); ++e) {
    total.add(partial[e].value());
    out.terms_used += counts[e];
  }
  if (out.terms_used > opts.count_cap) {
    throw CountCapExceeded("brute_S: enumeration exceeded the count cap");
  }
  out.value = total.value();

  double full_log = 0.0;
  for (double lp : primes.logs()) full_log += (k - 1) * lp;
  if (!std::isinf(log_cap) && log_cap < full_log) {
    out.tail_certificate =
        f.f_sup_beyond(u_cutoff) * g_envelope(primes.view(), params.alpha, k);
  }
  return out;
}

double rankin_tail(const SumParams& params, double f_envelope, double u_cutoff) {
  params.validate();
  if (std::isinf(u_cutoff)) return 0.0;
  const PrimeView primes = shared_primes(params.N)->view_up_to(params.N);
  const double a = std::abs(params.alpha);
  const double trivial = f_envelope * g_envelope(primes, params.alpha, params.k);
  const double log_x = u_cutoff * params.logN();
  double best = trivial;
  for (int i = 1; i <= 50; ++i) {
    const double delta = 0.01 * i;
    const double bound =
        f_envelope * std::exp(-delta * log_x + log_shifted_product(primes, a, params.k, delta));
    best = std::min(best, bound);
  }
  return best;
}

}  // namespace smoothsum
