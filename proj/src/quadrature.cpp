// SPDX-License-Identifier: Apache-2.0

#include "gelliptic/quadrature.hpp"

#include <cmath>

namespace gelliptic::detail {

namespace {

// Abscissas u beyond this are useless in double precision: 1-t underflows
// and the weights are far below any representable contribution.
constexpr double kUMax = 6.0;

TsNode make_node(long double u) {
  const long double half_pi = 1.57079632679489661923L;
  const long double z = half_pi * std::sinh(u);
  const long double e2 = std::exp(-2.0L * z);
  const long double denom = 1.0L + e2;
  TsNode nd;
  nd.t = static_cast<double>(1.0L / denom);
  nd.omt = static_cast<double>(e2 / denom);
  nd.w = static_cast<double>(2.0L * half_pi * std::cosh(u) * e2 / (denom * denom));
  return nd;
}

TsTable build_table() {
  TsTable table;
  table.center_w = static_cast<double>(0.78539816339744830962L);  // pi/4
  table.levels.resize(ts_max_level + 1);
  // level 0: integer abscissas; level l >= 1: odd multiples of 2^-l
  for (int j = 1; j <= static_cast<int>(kUMax); ++j)
    table.levels[0].push_back(make_node(static_cast<long double>(j)));
  for (int level = 1; level <= ts_max_level; ++level) {
    const long double h = std::ldexp(1.0L, -level);
    for (long double u = h; u < kUMax; u += 2.0L * h)
      table.levels[level].push_back(make_node(u));
  }
  return table;
}

}  // namespace

const TsTable& ts_table() {
  static const TsTable table = build_table();
  return table;
}

}  // namespace gelliptic::detail
