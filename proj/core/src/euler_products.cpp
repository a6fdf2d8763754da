#include "smoothsum/euler_products.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "smoothsum/error.hpp"
#include "smoothsum/parallel.hpp"
#include "smoothsum/zeta.hpp"

namespace smoothsum {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// p^{-s} from log p.
cplx prime_power(double log_p, cplx s) {
  return std::polar(std::exp(-s.real() * log_p), -s.imag() * log_p);
}

void require_half_plane(cplx s, const char* who) {
  if (!(s.real() > 0.5)) {
    throw DomainError(std::string(who) + ": requires Re(s) > 1/2");
  }
}

ProductValue from_log(cplx log_value, double tail_bound = 0.0) {
  return {std::exp(log_value), log_value, tail_bound};
}

// Factor log of h at one prime: -Log(1 - w) + alpha Log(1 - z) + Log(1 - w^k), w = alpha z.
cplx h_factor_log(cplx alpha, int k, cplx z, std::uint32_t p) {
  const cplx w = alpha * z;
  if (std::abs(1.0 - w) < 1e-14) {
    throw SingularFactor("h factor is singular: alpha p^{-s} = 1 at p = " + std::to_string(p));
  }
  return -log1p_c(-w) + alpha * log1p_c(-z) + log1p_c(-integer_power(w, k));
}

// sum_{n > Q} n^{-x} <= Q^{1-x} / (x - 1), x > 1.
double integer_tail(double log_q, double x) {
  return std::exp((1.0 - x) * log_q) / (x - 1.0);
}

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

// Principal log of zeta(w) for Re w >= 2, where |zeta(w) - 1| < 0.65.
cplx log_zeta_far(cplx w) {
  std::size_t M = static_cast<std::size_t>(std::max(20.0, std::ceil(2.0 * std::abs(w.imag()))));
  for (;;) {
    double err = 0.0;
    const cplx z = zeta_em(w, M, &err);
    if (err <= 1e-18 || M > (std::size_t{1} << 26)) return std::log(z);
    M *= 2;
  }
}

// Series remainder weight: bound on sum_{m | j, m >= 2} |a_m| m / j.
double beta(double abs_alpha, int k, int j) {
  return (1.0 + k) * std::pow(std::max(1.0, abs_alpha), j) + abs_alpha;
}

double series_remainder(double log_q, double sigma, double abs_alpha, int k, int j_max) {
  double total = 0.0;
  for (int j = j_max + 1; j < j_max + 400; ++j) {
    const double term = 2.0 * integer_tail(log_q, j * sigma) * beta(abs_alpha, k, j);
    total += term;
    if (term < 1e-40 * std::max(total, 1e-300)) break;
  }
  return total;
}

}  // namespace

void SumParams::validate() const {
  if (k < 2) throw DomainError("SumParams: k must be >= 2");
  if (N < 2) throw DomainError("SumParams: N must be >= 2");
  if (N > kSieveCap) throw DomainError("SumParams: N exceeds the sieve cap");
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
    throw DomainError("SumParams: alpha must be finite");
  }
}

std::string SumParams::describe() const {
  return "alpha=(" + std::to_string(alpha.real()) + "," + std::to_string(alpha.imag()) +
         ") k=" + std::to_string(k) + " N=" + std::to_string(N);
}

ProductValue zeta_partial(PrimeView primes, cplx s) {
  require_half_plane(s, "zeta_partial");
  CompensatedComplexSum acc;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    acc.add(-log1p_c(-prime_power(primes.logs[i], s)));
  }
  return from_log(acc.value());
}

ProductValue zeta_partial(std::uint64_t N, cplx s) {
  return zeta_partial(shared_primes(N)->view_up_to(N), s);
}

ProductValue zeta_partial_pow(PrimeView primes, cplx s, cplx alpha) {
  const ProductValue z = zeta_partial(primes, s);
  return from_log(alpha * z.log_value);
}

ProductValue g_product(PrimeView primes, cplx alpha, int k, cplx s) {
  require_half_plane(s, "g_product");
  if (k < 2) throw DomainError("g_product: k must be >= 2");
  CompensatedComplexSum acc;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const cplx w = alpha * prime_power(primes.logs[i], s);
    // factor - 1 = w (1 + w (1 + ... )) with k - 1 powers of w
    cplx inner{1.0, 0.0};
    for (int j = 1; j < k - 1; ++j) inner = 1.0 + w * inner;
    const cplx minus_one = w * inner;
    if (std::abs(1.0 + minus_one) == 0.0) {
      throw SingularFactor("g factor vanishes at p = " + std::to_string(primes.primes[i]));
    }
    acc.add(log1p_c(minus_one));
  }
  return from_log(acc.value());
}

ProductValue g_product(const SumParams& params, cplx s) {
  params.validate();
  return g_product(shared_primes(params.N)->view_up_to(params.N), params.alpha, params.k, s);
}

ProductValue g_product_ratio(PrimeView primes, cplx alpha, int k, cplx s) {
  require_half_plane(s, "g_product_ratio");
  if (k < 2) throw DomainError("g_product_ratio: k must be >= 2");
  CompensatedComplexSum acc;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const cplx w = alpha * prime_power(primes.logs[i], s);
    if (std::abs(1.0 - w) < 1e-14) {
      throw SingularFactor("ratio form undefined: alpha p^{-s} = 1 at p = " +
                           std::to_string(primes.primes[i]));
    }
    acc.add(std::log((1.0 - integer_power(w, k)) / (1.0 - w)));
  }
  return from_log(acc.value());
}

ProductValue h_finite(PrimeView primes, cplx alpha, int k, cplx s) {
  require_half_plane(s, "h_finite");
  if (k < 2) throw DomainError("h_finite: k must be >= 2");
  CompensatedComplexSum acc;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    acc.add(h_factor_log(alpha, k, prime_power(primes.logs[i], s), primes.primes[i]));
  }
  return from_log(acc.value());
}

ProductValue h_finite(const SumParams& params, cplx s) {
  params.validate();
  return h_finite(shared_primes(params.N)->view_up_to(params.N), params.alpha, params.k, s);
}

double g_envelope(PrimeView primes, cplx alpha, int k) {
  const double a = std::abs(alpha);
  CompensatedSum acc;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const double r = a / primes.primes[i];
    double inner = 1.0;
    for (int j = 1; j < k - 1; ++j) inner = 1.0 + r * inner;
    acc.add(std::log1p(r * inner));
  }
  return std::exp(acc.value());
}

HInfinite::HInfinite(cplx alpha, int k, double tol, std::uint64_t cutoff)
    : alpha_(alpha), k_(k), tol_(tol) {
  if (k < 2) throw DomainError("h_infinite: k must be >= 2");
  if (!(tol > 0.0)) throw DomainError("h_infinite: tol must be positive");
  const double abs_alpha = std::abs(alpha);
  const double auto_cutoff = std::max(1e4, 64.0 * std::ceil(abs_alpha));
  const double q = cutoff != 0 ? static_cast<double>(cutoff) : auto_cutoff;
  if (q > static_cast<double>(kSieveCap)) {
    throw ToleranceUnachievable("h_infinite: prime cutoff would exceed the sieve cap");
  }
  cutoff_ = static_cast<std::uint64_t>(q);
  if (static_cast<double>(cutoff_) <= 4.0 * abs_alpha || cutoff_ < 16) {
    throw ToleranceUnachievable("h_infinite: cutoff too small for |alpha|");
  }
  primes_ = shared_primes(cutoff_);
  head_ = primes_->view_up_to(cutoff_);

  const double log_q = std::log(static_cast<double>(cutoff_));
  int j_max = 2;
  while (series_remainder(log_q, 1.0, abs_alpha, k, j_max) > 0.25 * tol) {
    if (++j_max > 200) {
      throw ToleranceUnachievable("h_infinite: tail series cannot reach the tolerance");
    }
  }
  // a_m = (alpha^m - alpha)/m - [k | m] k alpha^m / m
  std::vector<cplx> a(static_cast<std::size_t>(j_max) + 1, 0.0);
  for (int m = 2; m <= j_max; ++m) {
    const cplx am = integer_power(alpha, m);
    a[m] = (am - alpha) / static_cast<double>(m);
    if (m % k == 0) a[m] -= static_cast<double>(k) * am / static_cast<double>(m);
  }
  // b_j = sum_{m | j, m >= 2} a_m mu(j/m) m / j
  b_.assign(static_cast<std::size_t>(j_max) + 1, 0.0);
  for (int j = 2; j <= j_max; ++j) {
    for (int m = 2; m <= j; ++m) {
      if (j % m != 0) continue;
      const int mu = mobius(j / m);
      if (mu == 0) continue;
      b_[j] += a[m] * (mu * static_cast<double>(m) / j);
    }
  }
}

LogTail HInfinite::series_tail(cplx s) const {
  const double sigma = s.real();
  const double log_q = std::log(static_cast<double>(cutoff_));
  const int j_max = static_cast<int>(b_.size()) - 1;
  CompensatedComplexSum acc;
  double bound = series_remainder(log_q, sigma, std::abs(alpha_), k_, j_max);
  for (int j = 2; j <= j_max; ++j) {
    if (b_[j] == cplx{0.0, 0.0}) continue;
    const double envelope = 2.0 * integer_tail(log_q, j * sigma) * std::abs(b_[j]);
    if (envelope < 1e-30) {
      bound += envelope;
      continue;
    }
    const cplx w = static_cast<double>(j) * s;
    const cplx log_zeta = log_zeta_far(w);
    CompensatedComplexSum lam;
    lam.add(log_zeta);
    for (std::size_t i = 0; i < head_.size(); ++i) {
      lam.add(log1p_c(-prime_power(head_.logs[i], w)));
    }
    acc.add(b_[j] * lam.value());
    bound += std::abs(b_[j]) * 8.0 * kEps * (std::abs(log_zeta) + 1e-3);
  }
  return {acc.value(), bound};
}

ProductValue HInfinite::operator()(cplx s) const {
  if (!(s.real() >= 1.0)) throw DomainError("h_infinite: requires Re(s) >= 1");
  CompensatedComplexSum head;
  double abs_sum = 0.0;
  for (std::size_t i = 0; i < head_.size(); ++i) {
    const cplx l = h_factor_log(alpha_, k_, prime_power(head_.logs[i], s), head_.primes[i]);
    head.add(l);
    abs_sum += std::abs(l);
  }
  const LogTail tail = series_tail(s);
  const cplx log_value = head.value() + tail.log_value;
  const double log_bound = tail.bound + 8.0 * kEps * (abs_sum + 1.0);
  const cplx value = std::exp(log_value);
  return {value, log_value, std::abs(value) * std::expm1(log_bound)};
}

LogTail HInfinite::log_tail_beyond(cplx s, std::uint64_t N) const {
  if (!(s.real() >= 1.0)) throw DomainError("h_infinite: requires Re(s) >= 1");
  if (N < 2 || N > cutoff_) {
    throw DomainError("log_tail_beyond: N must lie in [2, cutoff]");
  }
  const std::size_t first = primes_->count_up_to(N);
  CompensatedComplexSum acc;
  double abs_sum = 0.0;
  for (std::size_t i = first; i < head_.size(); ++i) {
    const cplx l = h_factor_log(alpha_, k_, prime_power(head_.logs[i], s), head_.primes[i]);
    acc.add(l);
    abs_sum += std::abs(l);
  }
  const LogTail tail = series_tail(s);
  acc.add(tail.log_value);
  return {acc.value(), tail.bound + 8.0 * kEps * abs_sum};
}

ProductValue h_infinite(cplx alpha, int k, cplx s, double tol) {
  return HInfinite(alpha, k, tol)(s);
}

ProductValue h_truncated(cplx alpha, int k, cplx s, std::uint64_t P) {
  if (!(s.real() >= 1.0)) throw DomainError("h_truncated: requires Re(s) >= 1");
  const double abs_alpha = std::abs(alpha);
  if (static_cast<double>(P) <= 4.0 * abs_alpha) {
    throw DomainError("h_truncated: P too small for |alpha|");
  }
  ProductValue v = h_finite(shared_primes(P)->view_up_to(P), alpha, k, s);
  // Each dropped factor log is at most 2((1+k) max(1,|alpha|)^2 + |alpha|) p^{-2 sigma}.
  const double c = 2.0 * ((1.0 + k) * std::pow(std::max(1.0, abs_alpha), 2) + abs_alpha);
  const double log_bound = c * integer_tail(std::log(static_cast<double>(P)), 2.0 * s.real());
  v.tail_bound = std::abs(v.value) * std::expm1(log_bound);
  return v;
}

Lemma1Report lemma1_check(cplx alpha, int k, std::span<const std::uint64_t> N_values,
                          std::span<const double> tau_grid) {
  if (N_values.empty() || tau_grid.empty()) {
    throw DomainError("lemma1_check: empty N or tau grid");
  }
  std::uint64_t max_n = 0;
  for (auto n : N_values) {
    if (n < 100) throw DomainError("lemma1_check: every N must be >= 100");
    max_n = std::max(max_n, n);
  }
  const std::uint64_t auto_cutoff =
      static_cast<std::uint64_t>(std::max(1e4, 64.0 * std::ceil(std::abs(alpha))));
  const HInfinite h(alpha, k, 1e-15, std::max(auto_cutoff, max_n));

  Lemma1Report report;
  report.alpha = alpha;
  report.k = k;
  for (auto n : N_values) {
    std::vector<double> errs(tau_grid.size());
    parallel_for(tau_grid.size(), [&](std::size_t i) {
      const LogTail t = h.log_tail_beyond(cplx{1.0, tau_grid[i]}, n);
      errs[i] = std::abs(expm1_c(-t.log_value));
    });
    Lemma1Row row;
    row.N = n;
    for (std::size_t i = 0; i < errs.size(); ++i) {
      if (errs[i] > row.max_error) {
        row.max_error = errs[i];
        row.tau_at_max = tau_grid[i];
      }
    }
    if (!report.rows.empty() && row.max_error > 0.0) {
      row.decay_ratio = report.rows.back().max_error / row.max_error;
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace smoothsum
