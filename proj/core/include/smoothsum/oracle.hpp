#pragma once

#include <cstdint>

#include "smoothsum/arith.hpp"
#include "smoothsum/numeric.hpp"
#include "smoothsum/params.hpp"
#include "smoothsum/test_function.hpp"

namespace smoothsum {

struct BruteResult {
  cplx value;
  std::uint64_t terms_used = 0;
  double u_cutoff = 0.0;
  double tail_certificate = 0.0;  // bound on the omitted terms with log n > u_cutoff log N
};

/// Direct sum of f(log n / log N) alpha^{Omega(n)} / n over k-free N-smooth n
/// with log n <= u_cutoff log N. u_cutoff may be kUnbounded. The k top-prime
/// subtrees are summed independently and combined in ascending exponent order.
BruteResult brute_S(const SumParams& params, const TestFunction& f, double u_cutoff,
                    const EnumerationOptions& opts = {});

/// u_cutoff at which the weight has fallen below 1e-13 (mu + sigma sqrt(60) for
/// a gaussian); kUnbounded for weights without decay information.
double default_u_cutoff(const TestFunction& f);

/// Rankin-type bound on the sum of |alpha|^{Omega(n)}/n over smooth k-free
/// n > N^{u_cutoff}, times f_envelope, minimized over shifts in (0, 1/2].
/// Never exceeds the trivial envelope f_envelope * prod_p (1 + ... ).
double rankin_tail(const SumParams& params, double f_envelope, double u_cutoff);

}  // namespace smoothsum
