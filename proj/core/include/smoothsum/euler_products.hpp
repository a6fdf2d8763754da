#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "smoothsum/arith.hpp"
#include "smoothsum/numeric.hpp"
#include "smoothsum/params.hpp"

namespace smoothsum {

/// A product over primes carried through the sum of its factor logs.
struct ProductValue {
  cplx value;
  cplx log_value;          // sum of principal-branch factor logs
  double tail_bound = 0.0;  // bound on |true value - value|; 0 for finite products
};

/// zeta_N(s) = prod_{p <= N} (1 - p^{-s})^{-1}. Requires Re s > 1/2.
ProductValue zeta_partial(PrimeView primes, cplx s);
ProductValue zeta_partial(std::uint64_t N, cplx s);

/// zeta_N(s)^alpha := exp(alpha * sum_p -Log(1 - p^{-s})).
ProductValue zeta_partial_pow(PrimeView primes, cplx s, cplx alpha);

/// g_{alpha,k,N}(s) = prod_{p <= N} (1 + alpha p^{-s} + ... + alpha^{k-1} p^{-(k-1)s}),
/// each factor summed directly. Throws SingularFactor if a factor vanishes.
ProductValue g_product(PrimeView primes, cplx alpha, int k, cplx s);
ProductValue g_product(const SumParams& params, cplx s);

/// Same product with each factor in the closed ratio form
/// (1 - alpha^k p^{-ks}) / (1 - alpha p^{-s}). Throws SingularFactor when
/// alpha p^{-s} = 1.
ProductValue g_product_ratio(PrimeView primes, cplx alpha, int k, cplx s);

/// h_{alpha,k,N}(s) = prod_{p <= N} (1 - alpha/p^s)^{-1} (1 - 1/p^s)^alpha (1 - alpha^k/p^{ks})
/// with (1 - 1/p^s)^alpha = exp(alpha Log(1 - p^{-s})).
ProductValue h_finite(PrimeView primes, cplx alpha, int k, cplx s);
ProductValue h_finite(const SumParams& params, cplx s);

/// prod_{p <= N} (1 + |alpha|/p + ... + |alpha|^{k-1}/p^{k-1}): the bound on
/// |g_{alpha,k,N}(1 + it)| and on the full sum of |alpha|^Omega(n)/n.
double g_envelope(PrimeView primes, cplx alpha, int k);

/// Log of the tail of h beyond some N, with its certified error.
struct LogTail {
  cplx log_value;
  double bound = 0.0;
};

/// Evaluator for the infinite product h_{alpha,k}(s) on Re s >= 1.
///
/// Primes up to a cutoff Q are multiplied in directly. Beyond Q each factor
/// log is expanded as sum_{m>=2} a_m p^{-ms}, so the remaining product is
/// sum_m a_m P_Q(ms) with P_Q(z) = sum_{p > Q} p^{-z}; P_Q in turn is
/// sum_n mu(n)/n log zeta_Q(nz), and log zeta_Q(w) = log zeta(w) +
/// sum_{p <= Q} log(1 - p^{-w}). All dropped terms are bounded through
/// sum_{p > Q} p^{-x} <= Q^{1-x} / (x - 1).
///
/// Construction sieves once; evaluation is pure and thread-safe.
class HInfinite {
 public:
  /// cutoff = 0 selects max(10^4, 64 |alpha|). Throws ToleranceUnachievable
  /// if the cutoff would exceed the sieve cap or the series cannot reach tol.
  HInfinite(cplx alpha, int k, double tol = 1e-13, std::uint64_t cutoff = 0);

  ProductValue operator()(cplx s) const;

  /// log h_{alpha,k}(s) - log h_{alpha,k,N}(s) = sum_{p > N} of factor logs.
  /// Requires 2 <= N <= cutoff().
  LogTail log_tail_beyond(cplx s, std::uint64_t N) const;

  std::uint64_t cutoff() const noexcept { return cutoff_; }
  cplx alpha() const noexcept { return alpha_; }
  int k() const noexcept { return k_; }

 private:
  cplx alpha_;
  int k_;
  double tol_;
  std::uint64_t cutoff_;
  std::shared_ptr<const PrimeSet> primes_;
  PrimeView head_;
  std::vector<cplx> b_;  // b_j for j = 0..j_max; b_0 = b_1 = 0

  LogTail series_tail(cplx s) const;
};

/// One-shot h_{alpha,k}(s). tail_bound certifies the value.
ProductValue h_infinite(cplx alpha, int k, cplx s, double tol = 1e-13);

/// Plain truncation prod_{p <= P} of the h factors, for cross-checks.
ProductValue h_truncated(cplx alpha, int k, cplx s, std::uint64_t P);

struct Lemma1Row {
  std::uint64_t N = 0;
  double max_error = 0.0;  // max over tau of |h_N / h - 1|
  double tau_at_max = 0.0;
  double decay_ratio = 0.0;  // previous row's max_error / this row's; 0 on the first row
};

struct Lemma1Report {
  cplx alpha;
  int k = 2;
  std::vector<Lemma1Row> rows;
};

/// max over tau in tau_grid of |h_{alpha,k,N}(1 + i tau) / h_{alpha,k}(1 + i tau) - 1|
/// for each N (every N >= 100).
Lemma1Report lemma1_check(cplx alpha, int k, std::span<const std::uint64_t> N_values,
                          std::span<const double> tau_grid);

}  // namespace smoothsum
