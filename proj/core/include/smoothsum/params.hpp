#pragma once

#include <cstdint>
#include <string>

#include "smoothsum/numeric.hpp"

namespace smoothsum {

/// (alpha, k, N): the parameters of every weighted smooth k-free sum.
struct SumParams {
  cplx alpha{1.0, 0.0};
  int k = 2;
  std::uint64_t N = 2;

  /// Throws DomainError unless k >= 2, 2 <= N <= kSieveCap and alpha is
  /// finite.
  void validate() const;

  double logN() const { return std::log(static_cast<double>(N)); }

  std::string describe() const;
};

}  // namespace smoothsum
