#include "smoothsum/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "smoothsum/error.hpp"
#include "smoothsum/parallel.hpp"

namespace smoothsum {
namespace {

// Kronrod abscissae on [-1, 1]; odd indices are the Gauss-7 nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr std::size_t kNodesPerPanel = 15;

struct Panel {
  double a;
  double b;
  cplx kronrod{};
  double error = 0.0;
  double abs_value = 0.0;
};

double node_position(const Panel& p, std::size_t j) {
  const double center = 0.5 * (p.a + p.b);
  const double half = 0.5 * (p.b - p.a);
  if (j < 7) return center - half * kXgk[j];
  if (j == 7) return center;
  return center + half * kXgk[14 - j];
}

void finish_panel(Panel& p, const cplx* fv) {
  const double half = 0.5 * (p.b - p.a);
  cplx kron = fv[7] * kWgk[7];
  cplx gauss = fv[7] * kWg[3];
  double abs_k = std::abs(fv[7]) * kWgk[7];
  for (std::size_t j = 0; j < 7; ++j) {
    const cplx pair = fv[j] + fv[14 - j];
    kron += pair * kWgk[j];
    abs_k += (std::abs(fv[j]) + std::abs(fv[14 - j])) * kWgk[j];
    if (j % 2 == 1) gauss += pair * kWg[j / 2];
  }
  p.kronrod = kron * half;
  p.error = std::abs((kron - gauss) * half);
  p.abs_value = abs_k * std::abs(half);
}

void evaluate_panels(const Integrand& f, std::vector<Panel>& panels,
                     const std::vector<std::size_t>& which) {
  std::vector<cplx> values(which.size() * kNodesPerPanel);
  parallel_for(values.size(), [&](std::size_t idx) {
    const Panel& p = panels[which[idx / kNodesPerPanel]];
    values[idx] = f(node_position(p, idx % kNodesPerPanel));
  });
  for (std::size_t i = 0; i < which.size(); ++i) {
    finish_panel(panels[which[i]], values.data() + i * kNodesPerPanel);
  }
}

bool splittable(const Panel& p, double span) {
  const double eps = std::numeric_limits<double>::epsilon();
  if (p.b - p.a <= 1e-13 * span) return false;
  // Below this the K15/G7 difference is rounding noise; splitting cannot help.
  return p.error > 50.0 * eps * p.abs_value;
}

}  // namespace

QuadResult integrate(const Integrand& f, std::span<const double> breakpoints,
                     const QuadOptions& options) {
  if (breakpoints.size() < 2) {
    throw DomainError("integrate: need at least two breakpoints");
  }
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i] >= breakpoints[i - 1])) {
      throw DomainError("integrate: breakpoints must be ascending");
    }
  }
  const double lo = breakpoints.front();
  const double hi = breakpoints.back();
  const double span = hi - lo;
  QuadResult result;
  if (span == 0.0) return result;

  const std::size_t per = std::max<std::size_t>(1, options.initial_panels);
  std::vector<Panel> panels;
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    const double a = breakpoints[i - 1];
    const double b = breakpoints[i];
    if (b == a) continue;
    for (std::size_t j = 0; j < per; ++j) {
      const double pa = a + (b - a) * static_cast<double>(j) / per;
      const double pb = j + 1 == per ? b : a + (b - a) * static_cast<double>(j + 1) / per;
      panels.push_back({pa, pb});
    }
  }

  std::size_t evaluated = 0;
  std::vector<std::size_t> pending(panels.size());
  for (std::size_t i = 0; i < panels.size(); ++i) pending[i] = i;
  evaluate_panels(f, panels, pending);
  evaluated += pending.size();

  auto totals = [&](cplx& value, double& error, double& absval) {
    CompensatedComplexSum v;
    CompensatedSum e;
    CompensatedSum a;
    for (const auto& p : panels) {
      v.add(p.kronrod);
      e.add(p.error);
      a.add(p.abs_value);
    }
    value = v.value();
    error = e.value();
    absval = a.value();
  };

  auto bisect = [&](const std::vector<bool>& split) {
    std::vector<Panel> next;
    next.reserve(panels.size() * 2);
    std::vector<std::size_t> fresh;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      if (!split[i]) {
        next.push_back(panels[i]);
        continue;
      }
      const double mid = 0.5 * (panels[i].a + panels[i].b);
      fresh.push_back(next.size());
      next.push_back({panels[i].a, mid});
      fresh.push_back(next.size());
      next.push_back({mid, panels[i].b});
    }
    panels = std::move(next);
    evaluate_panels(f, panels, fresh);
    evaluated += fresh.size();
  };

  cplx value;
  double error = 0.0;
  double absval = 0.0;
  for (;;) {
    totals(value, error, absval);
    const double tol = std::max(options.abs_tol, options.rel_tol * std::abs(value));
    if (error <= tol) break;

    std::vector<bool> split(panels.size(), false);
    bool any = false;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      const double share = tol * (panels[i].b - panels[i].a) / span;
      if (panels[i].error > share && splittable(panels[i], span)) {
        split[i] = true;
        any = true;
      }
    }
    if (!any) break;  // remaining error is at the rounding floor
    const auto n_split = static_cast<std::size_t>(std::count(split.begin(), split.end(), true));
    if (panels.size() + n_split > options.max_panels) {
      throw ToleranceUnachievable("integrate: panel budget " +
                                  std::to_string(options.max_panels) +
                                  " exhausted with error estimate " + std::to_string(error));
    }
    bisect(split);
  }

  if (options.refine_all) {
    bisect(std::vector<bool>(panels.size(), true));
    totals(value, error, absval);
  }

  result.value = value;
  result.quad_error = error;
  result.abs_integral = absval;
  result.node_count = evaluated * kNodesPerPanel;
  result.panel_count = panels.size();
  return result;
}

}  // namespace smoothsum
