// SPDX-License-Identifier: Apache-2.0

#include "gelliptic/gtf.hpp"

#include <cmath>
#include <stdexcept>

#include "gelliptic/quadrature.hpp"
#include "gelliptic/specfun.hpp"

namespace gelliptic {

ParamPair::ParamPair(double p_value, double q_value) : p(p_value), q(q_value) {
  if (!(p > 1.0) || !(q > 1.0))
    throw std::domain_error("ParamPair: exponents must exceed 1");
  p_star = p / (p - 1.0);
  q_star = q / (q - 1.0);
}

double pi_pq(const ParamPair& pp) {
  return (2.0 / pp.q) * beta(1.0 / pp.p_star, 1.0 / pp.q);
}

double pi_extended(double p, double q) {
  if (q == 1.0) {
    if (std::isinf(p)) return 2.0;
    if (!(p > 1.0)) throw std::domain_error("pi_extended: p must exceed 1");
    return 2.0 * p / (p - 1.0);
  }
  if (std::isinf(p)) {
    if (!(q > 1.0)) throw std::domain_error("pi_extended: q must exceed 1");
    return 2.0;
  }
  return pi_pq(ParamPair(p, q));
}

double F_pq(const ParamPair& pp, double x, double tol) {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error("F_pq: x must lie in [0,1]");
  if (x == 0.0) return 0.0;
  auto integrand = [&](double t, double omt) {
    return std::pow(detail::one_minus_pow(t, omt, pp.q), -1.0 / pp.p);
  };
  return integrate_0x(integrand, x, tol).value;
}

namespace detail {

double invert_F_pq(const ParamPair& pp, double target, double quarter) {
  if (target <= 0.0) return 0.0;
  // The inverse has infinite slope in s at the right endpoint while the
  // sine is flat there in x, so clamping is accurate to O(gap^{p*}).
  if (quarter - target < 1e-8) return 1.0;
  auto func = [&](double s) { return F_pq(pp, s, 1e-13); };
  auto deriv = [&](double s) {
    return std::pow(one_minus_pow(s, 1.0 - s, pp.q), -1.0 / pp.p);
  };
  return invert_increasing(func, deriv, target, target / quarter);
}

}  // namespace detail

double sin_pq(const ParamPair& pp, double x) {
  const double quarter = pi_pq(pp) / 2.0;
  const detail::FoldedArg fa = detail::fold_to_quarter(x, quarter);
  return fa.sign_sn * detail::invert_F_pq(pp, fa.x, quarter);
}

double cos_pq(const ParamPair& pp, double x) {
  const double quarter = pi_pq(pp) / 2.0;
  const detail::FoldedArg fa = detail::fold_to_quarter(x, quarter);
  const double s = detail::invert_F_pq(pp, fa.x, quarter);
  const double c = std::pow(detail::one_minus_pow(s, 1.0 - s, pp.q), 1.0 / pp.p);
  return fa.sign_cn * c;
}

}  // namespace gelliptic
