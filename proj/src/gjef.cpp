// SPDX-License-Identifier: Apache-2.0

#include "gelliptic/gjef.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "gelliptic/quadrature.hpp"

namespace gelliptic {

namespace {

constexpr double kSeriesKPowCap = 0.99;

// Integrand of H and K: (1-t^q)^{-1/p} (1-k^q t^q)^{1/r-1}.
struct FirstKindIntegrand {
  const ParamTriple& pt;
  const Modulus& mod;
  double operator()(double t, double omt) const {
    const double omtq = detail::one_minus_pow(t, omt, pt.q);
    const double dn_arg = mod.comp_pow_r + mod.k_pow_q * omtq;  // 1 - k^q t^q
    return std::pow(omtq, -1.0 / pt.p) * std::pow(dn_arg, 1.0 / pt.r - 1.0);
  }
};

struct SecondKindIntegrand {
  const ParamTriple& pt;
  const Modulus& mod;
  double operator()(double t, double omt) const {
    const double omtq = detail::one_minus_pow(t, omt, pt.q);
    const double dn_arg = mod.comp_pow_r + mod.k_pow_q * omtq;
    return std::pow(omtq, -1.0 / pt.p) * std::pow(dn_arg, 1.0 / pt.r);
  }
};

}  // namespace

ParamTriple::ParamTriple(double p_value, double q_value, double r_value)
    : p(p_value), q(q_value), r(r_value) {
  if (!(p > 1.0) || !(q > 1.0) || !(r > 1.0))
    throw std::domain_error("ParamTriple: exponents must exceed 1");
  p_star = p / (p - 1.0);
  q_star = q / (q - 1.0);
  r_star = r / (r - 1.0);
  alpha = 1.0 / q + 1.0 / r - 1.0 / p;
}

Modulus Modulus::make(const ParamTriple& pt, double k) {
  if (!(k >= 0.0 && k < 1.0))
    throw std::domain_error("Modulus: k must lie in [0,1)");
  Modulus m;
  m.k = k;
  if (k == 0.0) return m;
  m.k_pow_q = std::pow(k, pt.q);
  m.comp_pow_r = -std::expm1(pt.q * std::log(k));  // 1 - k^q
  m.comp_rq = std::pow(m.comp_pow_r, 1.0 / pt.r);
  return m;
}

Modulus Modulus::from_powers(const ParamTriple& pt, double k_pow_q,
                             double comp_pow_r) {
  Modulus m;
  m.k_pow_q = k_pow_q;
  m.comp_pow_r = comp_pow_r;
  m.k = std::pow(k_pow_q, 1.0 / pt.q);
  m.comp_rq = std::pow(comp_pow_r, 1.0 / pt.r);
  return m;
}

double Modulus::comp_qr(const ParamTriple& pt) const {
  if (k == 0.0) return 1.0;
  return std::pow(-std::expm1(pt.r * std::log(k)), 1.0 / pt.q);
}

double H_pqr(const ParamTriple& pt, const Modulus& mod, double x, double tol) {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error("H_pqr: x must lie in [0,1]");
  if (x == 0.0) return 0.0;
  return integrate_0x(FirstKindIntegrand{pt, mod}, x, tol).value;
}

double K_pqr_quad(const ParamTriple& pt, const Modulus& mod, double tol) {
  return integrate_01(FirstKindIntegrand{pt, mod}, tol).value;
}

SeriesResult K_pqr_series(const ParamTriple& pt, const Modulus& mod, double tol) {
  SeriesResult s = gauss_2f1(1.0 / pt.q, 1.0 / pt.r_star,
                             1.0 / pt.p_star + 1.0 / pt.q, mod.k_pow_q, tol);
  s.value *= pi_pq(pt.pq()) / 2.0;
  return s;
}

double E_pqr_quad(const ParamTriple& pt, const Modulus& mod, double tol) {
  return integrate_01(SecondKindIntegrand{pt, mod}, tol).value;
}

SeriesResult E_pqr_series(const ParamTriple& pt, const Modulus& mod, double tol) {
  SeriesResult s = gauss_2f1(1.0 / pt.q, -1.0 / pt.r,
                             1.0 / pt.p_star + 1.0 / pt.q, mod.k_pow_q, tol);
  s.value *= pi_pq(pt.pq()) / 2.0;
  return s;
}

namespace {

double complete_dispatch(const ParamTriple& pt, const Modulus& mod, bool first_kind) {
  if (mod.k_pow_q <= kSeriesKPowCap) {
    // The stopping rule bounds the last term, but the geometric tail is a
    // factor 1/(1-k^q) larger; tighten the term tolerance accordingly.
    const double tol = 1e-13 * std::max(mod.comp_pow_r, 0.01);
    const SeriesResult s =
        first_kind ? K_pqr_series(pt, mod, tol) : E_pqr_series(pt, mod, tol);
    if (s.converged) return s.value;
  }
  return first_kind ? K_pqr_quad(pt, mod, 1e-13) : E_pqr_quad(pt, mod, 1e-13);
}

using CompleteKey = std::array<double, 4>;

double cached_K(const ParamTriple& pt, const Modulus& mod) {
  static std::map<CompleteKey, double> cache;
  static std::mutex lock;
  const CompleteKey key{pt.p, pt.q, pt.r, mod.k};
  {
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const double value = complete_dispatch(pt, mod, /*first_kind=*/true);
  std::lock_guard<std::mutex> guard(lock);
  return cache.emplace(key, value).first->second;
}

}  // namespace

double K_pqr(const ParamTriple& pt, const Modulus& mod) { return cached_K(pt, mod); }

double E_pqr(const ParamTriple& pt, const Modulus& mod) {
  return complete_dispatch(pt, mod, /*first_kind=*/false);
}

double K_q1(double p, double r, double k, double tol) {
  if (!(p > 1.0) || !(r > 1.0))
    throw std::domain_error("K_q1: p and r must exceed 1");
  if (!(k >= 0.0 && k < 1.0)) throw std::domain_error("K_q1: k must lie in [0,1)");
  const double omk = 1.0 - k;
  auto f = [&](double, double omt) {
    return std::pow(omt, -1.0 / p) * std::pow(omk + k * omt, 1.0 / r - 1.0);
  };
  return integrate_01(f, tol).value;
}

double E_q1(double p, double r, double k, double tol) {
  if (!(p > 1.0) || !(r > 1.0))
    throw std::domain_error("E_q1: p and r must exceed 1");
  if (!(k >= 0.0 && k < 1.0)) throw std::domain_error("E_q1: k must lie in [0,1)");
  const double omk = 1.0 - k;
  auto f = [&](double, double omt) {
    return std::pow(omk + k * omt, 1.0 / r) * std::pow(omt, -1.0 / p);
  };
  return integrate_01(f, tol).value;
}

namespace {

// Principal-branch sn for targets in [0, K].
double invert_H(const ParamTriple& pt, const Modulus& mod, double target,
                double complete) {
  if (target <= 0.0) return 0.0;
  if (complete - target < 1e-8 * complete) return 1.0;
  const FirstKindIntegrand weight{pt, mod};
  auto func = [&](double s) { return H_pqr(pt, mod, s, 1e-13); };
  auto deriv = [&](double s) { return weight(s, 1.0 - s); };
  return detail::invert_increasing(func, deriv, target, target / complete);
}

}  // namespace

JacobiValues sncndn_pqr(const ParamTriple& pt, const Modulus& mod, double x) {
  if (mod.k == 0.0) {
    // GTF reduction; dn is exactly 1.
    const ParamPair pp = pt.pq();
    const double quarter = pi_pq(pp) / 2.0;
    const detail::FoldedArg fa = detail::fold_to_quarter(x, quarter);
    const double s = detail::invert_F_pq(pp, fa.x, quarter);
    const double c =
        std::pow(detail::one_minus_pow(s, 1.0 - s, pt.q), 1.0 / pt.p);
    return {fa.sign_sn * s, fa.sign_cn * c, 1.0};
  }
  const double complete = K_pqr(pt, mod);
  const detail::FoldedArg fa = detail::fold_to_quarter(x, complete);
  const double s = invert_H(pt, mod, fa.x, complete);
  const double omsq = detail::one_minus_pow(s, 1.0 - s, pt.q);
  const double cn = std::pow(omsq, 1.0 / pt.p);
  const double dn_arg = mod.comp_pow_r + mod.k_pow_q * omsq;
  const double dn = std::pow(dn_arg, 1.0 - 1.0 / pt.r);
  return {fa.sign_sn * s, fa.sign_cn * cn, dn};
}

double sn_pqr(const ParamTriple& pt, const Modulus& mod, double x) {
  return sncndn_pqr(pt, mod, x).sn;
}

double cn_pqr(const ParamTriple& pt, const Modulus& mod, double x) {
  return sncndn_pqr(pt, mod, x).cn;
}

double dn_pqr(const ParamTriple& pt, const Modulus& mod, double x) {
  return sncndn_pqr(pt, mod, x).dn;
}

double am_pqr(const ParamTriple& pt, const Modulus& mod, double x) {
  const double complete = mod.k == 0.0 ? pi_pq(pt.pq()) / 2.0 : K_pqr(pt, mod);
  if (!(x >= 0.0 && x <= complete))
    throw std::domain_error("am_pqr: x must lie in [0, K]");
  const double s = sncndn_pqr(pt, mod, x).sn;
  return F_pq(pt.pq(), s);
}

double phi(double alpha_exp, double t) {
  if (!(alpha_exp > 1.0)) throw std::domain_error("phi: alpha must exceed 1");
  if (t == 0.0) return 0.0;
  return std::pow(std::abs(t), alpha_exp - 2.0) * t;
}

namespace detail {

double hyp2f1_with_fallback(double a, double b, double c, double z, double omz,
                            double tol) {
  if (z <= 0.99) {
    // Compensate the geometric-tail factor 1/(1-z) the stopping rule ignores.
    const SeriesResult s =
        gauss_2f1(a, b, c, z, tol * std::clamp(1.0 - std::abs(z), 0.01, 1.0));
    if (s.converged) return s.value;
  }
  double outer = a, slot = b;
  if (!(c > slot && slot > 0.0)) std::swap(outer, slot);
  if (!(c > slot && slot > 0.0))
    throw std::domain_error("hyp2f1_with_fallback: no admissible Euler slot");
  auto f = [&](double t, double omt) {
    return std::pow(t, slot - 1.0) * std::pow(omt, c - slot - 1.0) *
           std::pow(omz + z * omt, -outer);  // 1 - z t
  };
  return integrate_01(f, tol).value / beta(slot, c - slot);
}

}  // namespace detail

}  // namespace gelliptic
