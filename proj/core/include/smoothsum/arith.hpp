#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "smoothsum/error.hpp"

namespace smoothsum {

inline constexpr std::uint64_t kSieveCap = 100'000'000;
inline constexpr std::uint64_t kDefaultCountCap = 200'000'000;

/// Non-owning view of an ascending run of primes and their logs.
struct PrimeView {
  std::span<const std::uint32_t> primes;
  std::span<const double> logs;
  std::uint64_t bound = 0;

  std::size_t size() const noexcept { return primes.size(); }
};

/// The primes <= bound, ascending, with their natural logarithms.
class PrimeSet {
 public:
  PrimeSet() = default;
  explicit PrimeSet(std::uint64_t bound);

  std::uint64_t bound() const noexcept { return bound_; }
  std::size_t size() const noexcept { return primes_.size(); }
  bool empty() const noexcept { return primes_.empty(); }

  std::span<const std::uint32_t> primes() const noexcept { return primes_; }
  std::span<const double> logs() const noexcept { return logs_; }

  /// Number of primes <= n (n may not exceed bound()).
  std::size_t count_up_to(std::uint64_t n) const;

  /// The subset of primes <= n as a new set.
  PrimeSet restricted(std::uint64_t n) const;

  PrimeView view() const noexcept { return {primes_, logs_, bound_}; }
  PrimeView view_up_to(std::uint64_t n) const;
  operator PrimeView() const noexcept { return view(); }

 private:
  std::uint64_t bound_ = 0;
  std::vector<std::uint32_t> primes_;
  std::vector<double> logs_;
};

/// Sieve of Eratosthenes. bound < 2 yields the empty set. Throws DomainError
/// above kSieveCap.
PrimeSet sieve_primes(std::uint64_t bound);

/// Shared, lazily grown sieve. Returns a set whose bound is at least n;
/// callers restrict by prime value themselves (see count_up_to).
std::shared_ptr<const PrimeSet> shared_primes(std::uint64_t n);

struct PrimePower {
  std::uint32_t prime;
  int exponent;
};

/// One enumerated integer n, carried as (log n, Omega(n)) plus its
/// factorization for audit. `factors` is only valid during the callback.
struct SmoothElement {
  double log_n = 0.0;
  int omega = 0;
  std::span<const PrimePower> factors;
};

struct EnumerationOptions {
  std::uint64_t count_cap = kDefaultCountCap;
};

inline constexpr double kUnbounded = std::numeric_limits<double>::infinity();

namespace detail {

struct DfsState {
  std::span<const std::uint32_t> primes;
  std::span<const double> logs;
  int k;
  double log_cap;
  std::uint64_t count_cap;
  std::uint64_t count = 0;
  std::vector<PrimePower> stack;
};

inline double cap_slack(double log_cap) { return 1e-12 * (1.0 + std::abs(log_cap)); }

void check_unbounded_count(std::size_t n_primes, int k, std::uint64_t count_cap);

template <class Visitor>
void dfs(DfsState& st, std::size_t start, double log_n, int omega, Visitor& visit) {
  if (++st.count > st.count_cap) {
    throw CountCapExceeded("enumeration exceeded the count cap of " +
                           std::to_string(st.count_cap) + " elements");
  }
  visit(SmoothElement{log_n, omega, std::span<const PrimePower>(st.stack)});
  const double limit = st.log_cap + cap_slack(st.log_cap);
  for (std::size_t j = start; j < st.primes.size(); ++j) {
    const double lp = st.logs[j];
    if (log_n + lp > limit) break;
    double child = log_n;
    st.stack.push_back({st.primes[j], 0});
    for (int e = 1; e < st.k; ++e) {
      child += lp;
      if (child > limit) break;
      st.stack.back().exponent = e;
      dfs(st, j + 1, child, omega + e, visit);
    }
    st.stack.pop_back();
  }
}

}  // namespace detail

/// Visits every k-free integer n whose prime factors lie in `primes` and
/// with log n <= log_cap, including n = 1, exactly once. Order: depth-first,
/// primes ascending, exponents ascending. Returns the number of elements.
///
/// log_cap may be kUnbounded only when k^|primes| <= count_cap.
template <class Visitor>
std::uint64_t enumerate_kfree_smooth(const PrimeSet& primes, int k, double log_cap,
                                     Visitor&& visit, const EnumerationOptions& opts = {}) {
  if (k < 2) throw DomainError("enumerate_kfree_smooth: k must be >= 2");
  if (!(log_cap >= 0.0)) throw DomainError("enumerate_kfree_smooth: log_cap must be >= 0");
  if (std::isinf(log_cap)) detail::check_unbounded_count(primes.size(), k, opts.count_cap);
  detail::DfsState st{primes.primes(), primes.logs(), k, log_cap, opts.count_cap, 0, {}};
  detail::dfs(st, 0, 0.0, 0, visit);
  return st.count;
}

/// Subtree of the enumeration in which the largest prime of `primes` appears
/// with exactly `top_exponent` (0 <= top_exponent < k). The k subtrees
/// partition the full enumeration; workers may process them independently.
/// Elements are reported with the full factorization.
template <class Visitor>
std::uint64_t enumerate_kfree_smooth_subtree(const PrimeSet& primes, int k, double log_cap,
                                             int top_exponent, Visitor&& visit,
                                             const EnumerationOptions& opts = {}) {
  if (k < 2) throw DomainError("enumerate_kfree_smooth: k must be >= 2");
  if (top_exponent < 0 || top_exponent >= k) {
    throw DomainError("enumerate_kfree_smooth_subtree: exponent out of range");
  }
  if (!(log_cap >= 0.0)) throw DomainError("enumerate_kfree_smooth: log_cap must be >= 0");
  if (std::isinf(log_cap)) detail::check_unbounded_count(primes.size(), k, opts.count_cap);
  if (primes.empty()) {
    if (top_exponent != 0) return 0;
    visit(SmoothElement{});
    return 1;
  }
  const std::size_t last = primes.size() - 1;
  const double base_log = top_exponent * primes.logs()[last];
  if (base_log > log_cap + detail::cap_slack(log_cap)) return 0;

  detail::DfsState st{primes.primes().first(last), primes.logs().first(last), k, log_cap,
                      opts.count_cap, 0, {}};
  if (top_exponent == 0) {
    detail::dfs(st, 0, 0.0, 0, visit);
    return st.count;
  }
  // Report the fixed top prime power after the free part, keeping factors
  // sorted by prime.
  const PrimePower top{primes.primes()[last], top_exponent};
  std::vector<PrimePower> scratch;
  auto wrapped = [&](const SmoothElement& e) {
    scratch.assign(e.factors.begin(), e.factors.end());
    scratch.push_back(top);
    visit(SmoothElement{e.log_n, e.omega, std::span<const PrimePower>(scratch)});
  };
  detail::dfs(st, 0, base_log, top_exponent, wrapped);
  return st.count;
}

/// Psi(x, y): number of n <= x with every prime factor <= y (no k-free
/// restriction). Exact integer arithmetic. Throws CountCapExceeded.
std::uint64_t count_smooth(double x, double y, const EnumerationOptions& opts = {});

}  // namespace smoothsum
