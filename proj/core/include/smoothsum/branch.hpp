#pragma once

#include <functional>
#include <span>
#include <vector>

#include "smoothsum/numeric.hpp"

namespace smoothsum {

struct BranchNode {
  double x = 0.0;
  cplx value;
  cplx log_value;       // continuous along the path
  bool requested = false;  // false for anchor/refinement nodes
};

struct BranchOptions {
  double max_phase_step = kPi / 2;  // adjacent-node bound on |d arg|
  int max_depth = 40;               // bisection depth per requested segment
};

/// Samples of a nonvanishing function along the real line together with a
/// logarithm that is continuous along the sampled path. The log is anchored
/// at `anchor_x` and unwrapped outward in both directions; segments whose
/// phase step exceeds max_phase_step are bisected until it does not.
class BranchedPath {
 public:
  using Function = std::function<cplx(double)>;

  /// Throws UnwrapError when the function vanishes on the path or a phase
  /// jump survives max_depth bisections.
  static BranchedPath build(const Function& fn, std::span<const double> xs, double anchor_x,
                            cplx anchor_log, const BranchOptions& options = {});

  /// All nodes (requested, anchor and refinement), ascending in x.
  std::span<const BranchNode> nodes() const noexcept { return nodes_; }

  /// Nodes the caller asked for, in the caller's (ascending) order.
  std::vector<BranchNode> requested() const;

  /// Continuous log at an arbitrary x inside the sampled range, given the
  /// function value there: the branch of log(value) nearest to the bracketing
  /// nodes. Throws UnwrapError if that branch is ambiguous.
  cplx lift(double x, cplx value) const;

  double lo() const noexcept { return nodes_.front().x; }
  double hi() const noexcept { return nodes_.back().x; }

  double max_phase_step() const noexcept { return options_.max_phase_step; }

 private:
  std::vector<BranchNode> nodes_;
  BranchOptions options_;
};

/// exp(alpha * log) over the requested nodes of a path.
std::vector<cplx> power_along(const BranchedPath& path, cplx alpha);

}  // namespace smoothsum
