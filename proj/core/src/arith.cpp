#include "smoothsum/arith.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>

namespace smoothsum {

PrimeSet::PrimeSet(std::uint64_t bound) : bound_(bound) {
  if (bound > kSieveCap) {
    throw DomainError("sieve_primes: bound " + std::to_string(bound) +
                      " exceeds the sieve cap " + std::to_string(kSieveCap));
  }
  if (bound < 2) return;
  // Odd-only sieve: index i stands for 2i + 1.
  const std::uint64_t half = (bound - 1) / 2 + 1;
  std::vector<bool> composite(half, false);
  for (std::uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= bound; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    for (std::uint64_t m = p * p; m <= bound; m += 2 * p) composite[m / 2] = true;
  }
  primes_.push_back(2);
  for (std::uint64_t i = 1; i < half; ++i) {
    if (!composite[i]) primes_.push_back(static_cast<std::uint32_t>(2 * i + 1));
  }
  logs_.resize(primes_.size());
  std::transform(primes_.begin(), primes_.end(), logs_.begin(),
                 [](std::uint32_t p) { return std::log(static_cast<double>(p)); });
}

std::size_t PrimeSet::count_up_to(std::uint64_t n) const {
  if (n > bound_) {
    throw DomainError("PrimeSet::count_up_to: " + std::to_string(n) + " exceeds bound " +
                      std::to_string(bound_));
  }
  return static_cast<std::size_t>(
      std::upper_bound(primes_.begin(), primes_.end(), n) - primes_.begin());
}

PrimeSet PrimeSet::restricted(std::uint64_t n) const {
  const std::size_t m = count_up_to(n);
  PrimeSet out;
  out.bound_ = n;
  out.primes_.assign(primes_.begin(), primes_.begin() + static_cast<std::ptrdiff_t>(m));
  out.logs_.assign(logs_.begin(), logs_.begin() + static_cast<std::ptrdiff_t>(m));
  return out;
}

PrimeView PrimeSet::view_up_to(std::uint64_t n) const {
  const std::size_t m = count_up_to(n);
  return {std::span<const std::uint32_t>(primes_).first(m),
          std::span<const double>(logs_).first(m), n};
}

PrimeSet sieve_primes(std::uint64_t bound) { return PrimeSet(bound); }

std::shared_ptr<const PrimeSet> shared_primes(std::uint64_t n) {
  static std::mutex mu;
  static std::shared_ptr<const PrimeSet> cached;
  std::lock_guard lock(mu);
  if (!cached || cached->bound() < n) {
    // Grow geometrically so a ladder of N values sieves only a few times.
    std::uint64_t bound = std::max<std::uint64_t>(n, 1000);
    if (cached) bound = std::max(bound, std::min(kSieveCap, 2 * cached->bound()));
    cached = std::make_shared<const PrimeSet>(bound);
  }
  return cached;
}

namespace detail {

void check_unbounded_count(std::size_t n_primes, int k, std::uint64_t count_cap) {
  const double total = static_cast<double>(n_primes) * std::log(static_cast<double>(k));
  if (total > std::log(static_cast<double>(count_cap)) + 1e-9) {
    throw CountCapExceeded("unbounded enumeration would produce " + std::to_string(k) + "^" +
                           std::to_string(n_primes) + " elements, above the count cap " +
                           std::to_string(count_cap));
  }
}

}  // namespace detail

namespace {

struct PsiState {
  std::span<const std::uint32_t> primes;
  std::uint64_t x;
  std::uint64_t cap;
  std::uint64_t count = 0;
};

void psi_dfs(PsiState& st, std::size_t start, std::uint64_t n) {
  if (++st.count > st.cap) {
    throw CountCapExceeded("count_smooth exceeded the count cap of " + std::to_string(st.cap));
  }
  for (std::size_t j = start; j < st.primes.size(); ++j) {
    const std::uint64_t p = st.primes[j];
    if (n > st.x / p) break;
    for (std::uint64_t m = n * p;; m *= p) {
      psi_dfs(st, j + 1, m);
      if (m > st.x / p) break;
    }
  }
}

}  // namespace

std::uint64_t count_smooth(double x, double y, const EnumerationOptions& opts) {
  if (!(x >= 1.0)) throw DomainError("count_smooth: x must be >= 1");
  if (!(y >= 2.0)) throw DomainError("count_smooth: y must be >= 2");
  if (x >= 9.0e18) throw DomainError("count_smooth: x too large for 64-bit counting");
  const auto xi = static_cast<std::uint64_t>(std::floor(x));
  const auto yi = static_cast<std::uint64_t>(std::floor(std::min(y, x)));
  const PrimeSet primes = yi >= 2 ? sieve_primes(yi) : PrimeSet{};
  PsiState st{primes.primes(), xi, opts.count_cap};
  psi_dfs(st, 0, 1);
  return st.count;
}

}  // namespace smoothsum
