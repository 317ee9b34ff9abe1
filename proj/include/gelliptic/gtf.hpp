// SPDX-License-Identifier: Apache-2.0
//
// Generalized trigonometric functions with two parameters: the quarter
// period pi_{p,q}, the incomplete integral that defines them, and sin/cos
// obtained by inversion and extended to the whole real line.

#pragma once

#include <algorithm>
#include <cmath>

namespace gelliptic {

/// Exponent pair p, q > 1 together with the conjugates s* = s/(s-1).
struct ParamPair {
  double p;
  double q;
  double p_star;
  double q_star;

  ParamPair(double p_value, double q_value);
};

/// pi_{p,q} = (2/q) B(1/p*, 1/q), twice the value of the defining integral
/// at its right endpoint.
double pi_pq(const ParamPair& pp);

/// pi_{p,q} extended to the boundary cases: q = 1 gives 2p*, p = infinity
/// gives 2, interior pairs defer to pi_pq.
double pi_extended(double p, double q);

/// The increasing integral F_{p,q}(x) = int_0^x (1-t^q)^{-1/p} dt on [0,1].
double F_pq(const ParamPair& pp, double x, double tol = 1e-12);

/// sin_{p,q}, the inverse of F_pq on [0, pi_{p,q}/2], extended to an odd
/// periodic function on the real line.
double sin_pq(const ParamPair& pp, double x);

/// cos_{p,q} = (1 - sin_{p,q}^q)^{1/p} on the principal interval, extended
/// even and periodic.
double cos_pq(const ParamPair& pp, double x);

namespace detail {

/// Argument folded into the principal quarter period together with the signs
/// the periodic extension assigns to the sine- and cosine-like functions.
/// All reductions are exact: fmod is exact and the two subtractions satisfy
/// the Sterbenz condition.
struct FoldedArg {
  double x;         // representative in [0, quarter]
  double sign_sn;   // +1 or -1
  double sign_cn;
};

inline FoldedArg fold_to_quarter(double x, double quarter) {
  FoldedArg fa{std::abs(x), x < 0.0 ? -1.0 : 1.0, 1.0};
  const double half = 2.0 * quarter;
  fa.x = std::fmod(fa.x, 2.0 * half);
  if (fa.x >= half) {
    fa.x -= half;
    fa.sign_sn = -fa.sign_sn;
    fa.sign_cn = -fa.sign_cn;
  }
  if (fa.x > quarter) {
    fa.x = half - fa.x;
    fa.sign_cn = -fa.sign_cn;
  }
  return fa;
}

/// Safeguarded Newton iteration for F(s) = target with F increasing on
/// [0,1]. Any Newton step leaving the current bracket is replaced by a
/// bisection step; stops at |delta s| <= 1e-15 or 200 iterations.
template <typename Fn, typename Dn>
double invert_increasing(Fn&& func, Dn&& deriv, double target, double s_init) {
  double lo = 0.0, hi = 1.0;
  double s = std::clamp(s_init, 1e-12, 1.0 - 1e-12);
  for (int it = 0; it < 200; ++it) {
    const double g = func(s) - target;
    if (g > 0.0)
      hi = s;
    else
      lo = s;
    double next = s - g / deriv(s);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double delta = std::abs(next - s);
    s = next;
    if (delta <= 1e-15) break;
  }
  return s;
}

/// Principal-branch inverse of F_pq, for targets in [0, quarter].
double invert_F_pq(const ParamPair& pp, double target, double quarter);

}  // namespace detail

}  // namespace gelliptic
