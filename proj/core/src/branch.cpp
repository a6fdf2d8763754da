#include "smoothsum/branch.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "smoothsum/error.hpp"

namespace smoothsum {
namespace {

struct Walker {
  const BranchedPath::Function& fn;
  const BranchOptions& options;
  std::vector<BranchNode>& out;

  cplx log_of(double x, cplx v) const {
    if (v == cplx{0.0, 0.0} || !std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw UnwrapError("branch path: function vanishes or is not finite at x = " +
                        std::to_string(x));
    }
    return std::log(v);
  }

  // Walks from (x0, log0) to x1, appending refinement nodes and the node at
  // x1. Returns the continuous log at x1.
  cplx step(double x0, cplx log0, double x1, cplx v1, bool requested, int depth) {
    const cplx l1 = log_near(v1, log0.imag());
    if (std::abs(l1.imag() - log0.imag()) <= options.max_phase_step) {
      out.push_back({x1, v1, {l1.real(), l1.imag()}, requested});
      return l1;
    }
    if (depth >= options.max_depth) {
      throw UnwrapError("branch path: phase step " +
                        std::to_string(std::abs(l1.imag() - log0.imag())) + " between x = " +
                        std::to_string(x0) + " and x = " + std::to_string(x1) +
                        " persists after maximum refinement");
    }
    const double xm = 0.5 * (x0 + x1);
    const cplx vm = fn(xm);
    log_of(xm, vm);
    const cplx lm = step(x0, log0, xm, vm, false, depth + 1);
    return step(xm, lm, x1, v1, requested, depth + 1);
  }
};

}  // namespace

BranchedPath BranchedPath::build(const Function& fn, std::span<const double> xs,
                                 double anchor_x, cplx anchor_log,
                                 const BranchOptions& options) {
  std::vector<double> grid(xs.begin(), xs.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  BranchedPath path;
  path.options_ = options;

  const cplx anchor_value = std::exp(anchor_log);
  const bool anchor_requested = std::binary_search(grid.begin(), grid.end(), anchor_x);

  // Right of the anchor.
  std::vector<BranchNode> right;
  {
    Walker w{fn, options, right};
    double x0 = anchor_x;
    cplx l0 = anchor_log;
    for (double x : grid) {
      if (x <= anchor_x) continue;
      const cplx v = fn(x);
      w.log_of(x, v);
      l0 = w.step(x0, l0, x, v, true, 0);
      x0 = x;
    }
  }
  // Left of the anchor, walking downward.
  std::vector<BranchNode> left;
  {
    Walker w{fn, options, left};
    double x0 = anchor_x;
    cplx l0 = anchor_log;
    for (auto it = grid.rbegin(); it != grid.rend(); ++it) {
      const double x = *it;
      if (x >= anchor_x) continue;
      const cplx v = fn(x);
      w.log_of(x, v);
      l0 = w.step(x0, l0, x, v, true, 0);
      x0 = x;
    }
  }
  // step() appends in walking order, so the left walk is descending.
  std::reverse(left.begin(), left.end());
  path.nodes_ = std::move(left);
  path.nodes_.push_back({anchor_x, anchor_value, anchor_log, anchor_requested});
  path.nodes_.insert(path.nodes_.end(), right.begin(), right.end());
  return path;
}

std::vector<BranchNode> BranchedPath::requested() const {
  std::vector<BranchNode> out;
  for (const auto& n : nodes_) {
    if (n.requested) out.push_back(n);
  }
  return out;
}

cplx BranchedPath::lift(double x, cplx value) const {
  if (nodes_.empty()) throw UnwrapError("branch path: empty path");
  const double tol = 1e-12 * (1.0 + std::max(std::abs(lo()), std::abs(hi())));
  if (x < lo() - tol || x > hi() + tol) {
    throw UnwrapError("branch path: x = " + std::to_string(x) + " outside the sampled range");
  }
  if (value == cplx{0.0, 0.0}) throw UnwrapError("branch path: zero value at lift");
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), x,
                             [](const BranchNode& n, double v) { return n.x < v; });
  const BranchNode* hi_node = it == nodes_.end() ? &nodes_.back() : &*it;
  const BranchNode* lo_node = it == nodes_.begin() ? hi_node : &*(it - 1);
  const BranchNode* nearest =
      std::abs(x - lo_node->x) <= std::abs(hi_node->x - x) ? lo_node : hi_node;
  const cplx l = log_near(value, nearest->log_value.imag());
  // The bracketing nodes differ by at most max_phase_step; a point between
  // them must stay within that band of both.
  const double band = options_.max_phase_step;
  if (std::abs(l.imag() - lo_node->log_value.imag()) > band + 1e-9 ||
      std::abs(l.imag() - hi_node->log_value.imag()) > band + 1e-9) {
    throw UnwrapError("branch path: ambiguous branch at x = " + std::to_string(x) +
                      "; refine the path grid");
  }
  return l;
}

std::vector<cplx> power_along(const BranchedPath& path, cplx alpha) {
  std::vector<cplx> out;
  for (const auto& n : path.nodes()) {
    if (n.requested) out.push_back(std::exp(alpha * n.log_value));
  }
  return out;
}

}  // namespace smoothsum
