// SPDX-License-Identifier: Apache-2.0
//
// Tanh-sinh (double-exponential) quadrature on (0,1), tolerant of integrable
// endpoint singularities such as (1-t)^{-1/p}.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace gelliptic {

struct QuadratureResult {
  double value = 0.0;
  /// Absolute difference of the last two refinement levels. Reported as-is.
  double est_error = 0.0;
  std::size_t evaluations = 0;
};

namespace detail {

/// One abscissa of the tanh-sinh rule on the u > 0 side. The mirrored node
/// at -u has abscissa omt and distance-to-endpoint t.
struct TsNode {
  double t;    // abscissa in (0,1), close to 1 for large u
  double omt;  // 1 - t, formed without cancellation
  double w;    // dt/du at the node
};

inline constexpr int ts_max_level = 12;

struct TsTable {
  double center_w = 0.0;                    // weight of the node u = 0, t = 1/2
  std::vector<std::vector<TsNode>> levels;  // levels[l]: nodes new at level l
};

const TsTable& ts_table();

// 1 - t^q from (t, 1-t). Near t = 1 the log1p/expm1 route avoids the
// catastrophic cancellation of computing pow(t,q) first.
inline double one_minus_pow(double t, double omt, double q) {
  if (omt >= 1.0) return 1.0;  // t == 0
  (void)t;
  return -std::expm1(q * std::log1p(-omt));
}

template <typename F>
double ts_level_sum(F&& f, const std::vector<TsNode>& nodes, double prev_value,
                    double h, double partial_scale, std::size_t& evaluations) {
  double sum = 0.0;
  int tiny_run = 0;
  for (const TsNode& nd : nodes) {
    const double f_right = f(nd.t, nd.omt);
    const double f_left = f(nd.omt, nd.t);
    if (!std::isfinite(f_right) || !std::isfinite(f_left))
      throw std::runtime_error("integrate_01: integrand returned a non-finite value");
    evaluations += 2;
    sum += (f_right + f_left) * nd.w;
    const double mag = (std::abs(f_right) + std::abs(f_left)) * nd.w;
    const double scale =
        std::max({std::abs(prev_value), h * std::abs(sum), partial_scale});
    if (mag <= 1e-17 * scale + 1e-300) {
      if (++tiny_run >= 2) break;
    } else {
      tiny_run = 0;
    }
  }
  return sum;
}

}  // namespace detail

/// Integrate f over the open interval (0,1).
///
/// The integrand is called as f(t, one_minus_t); both arguments are supplied
/// by the rule so that factors like (1-t^q)^{-1/p} can be evaluated stably
/// near t = 1 (see detail::one_minus_pow). Levels are doubled until the
/// difference of consecutive levels drops below tol*max(1,|value|) or the
/// level cap is reached; in the latter case est_error simply stays above tol
/// and the caller decides what to do.
template <typename F>
QuadratureResult integrate_01(F&& f, double tol = 1e-12) {
  const detail::TsTable& table = detail::ts_table();
  QuadratureResult res;

  const double f_center = f(0.5, 0.5);
  if (!std::isfinite(f_center))
    throw std::runtime_error("integrate_01: integrand returned a non-finite value");
  res.evaluations = 1;

  double h = 1.0;
  double value = h * (table.center_w * f_center +
                      detail::ts_level_sum(f, table.levels[0], 0.0, h,
                                           std::abs(f_center) * table.center_w,
                                           res.evaluations));
  double prev = value;
  for (int level = 1; level <= detail::ts_max_level; ++level) {
    h *= 0.5;
    const double sum =
        detail::ts_level_sum(f, table.levels[level], value, h, 0.0, res.evaluations);
    value = 0.5 * prev + h * sum;
    res.est_error = std::abs(value - prev);
    prev = value;
    if (level >= 2 && res.est_error <= tol * std::max(1.0, std::abs(value))) break;
  }
  res.value = value;
  return res;
}

/// Integrate f over (0,x) for x in (0,1] by affine rescaling. The integrand
/// still receives the original-variable pair (t, 1-t).
template <typename F>
QuadratureResult integrate_0x(F&& f, double x, double tol = 1e-12) {
  if (!(x > 0.0 && x <= 1.0))
    throw std::domain_error("integrate_0x: x must lie in (0,1]");
  if (x == 1.0) return integrate_01(f, tol);
  const double omx = 1.0 - x;
  auto g = [&](double s, double oms) {
    return f(x * s, omx + x * oms);  // 1 - x s, both terms nonnegative
  };
  QuadratureResult res = integrate_01(g, tol);
  res.value *= x;
  res.est_error *= x;
  return res;
}

}  // namespace gelliptic
