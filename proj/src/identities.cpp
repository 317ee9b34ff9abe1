// SPDX-License-Identifier: Apache-2.0

#include "gelliptic/identities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>

#include "gelliptic/quadrature.hpp"
#include "gelliptic/specfun.hpp"

namespace gelliptic {

std::string_view to_string(IdentityId id) {
  switch (id) {
    case IdentityId::legendre_L_const: return "legendre_L_const";
    case IdentityId::legendre_wronskian: return "legendre_wronskian";
    case IdentityId::legendre_wronskian_const: return "legendre_wronskian_const";
    case IdentityId::legendre_hyper_ode_y1: return "legendre_hyper_ode_y1";
    case IdentityId::legendre_hyper_ode_y2: return "legendre_hyper_ode_y2";
    case IdentityId::wallis1_sn: return "wallis1_sn";
    case IdentityId::wallis1_cn: return "wallis1_cn";
    case IdentityId::wallis1_dn: return "wallis1_dn";
    case IdentityId::wallis2_sn: return "wallis2_sn";
    case IdentityId::recurrence_sn_power: return "recurrence_sn_power";
    case IdentityId::ode_snode: return "ode_snode";
    case IdentityId::ode_allencahn: return "ode_allencahn";
    case IdentityId::ode_cnode: return "ode_cnode";
    case IdentityId::ode_cnallencahn: return "ode_cnallencahn";
    case IdentityId::ode_dnode: return "ode_dnode";
    case IdentityId::ode_dnallencahn: return "ode_dnallencahn";
    case IdentityId::ineq_sn_cn_p: return "ineq_sn_cn_p";
    case IdentityId::ineq_sn_cn_q: return "ineq_sn_cn_q";
    case IdentityId::ineq_carlen: return "ineq_carlen";
    case IdentityId::pythagorean_cn_sn: return "pythagorean_cn_sn";
    case IdentityId::pythagorean_dn_sn: return "pythagorean_dn_sn";
    case IdentityId::roundtrip_sn: return "roundtrip_sn";
    case IdentityId::deriv_dK: return "deriv_dK";
    case IdentityId::deriv_dE: return "deriv_dE";
    case IdentityId::deriv_dK_prime: return "deriv_dK_prime";
    case IdentityId::deriv_dE_prime: return "deriv_dE_prime";
  }
  return "unknown";
}

VerificationReport make_report(IdentityId id, const ParamTriple& pt, double k,
                               double point, double lhs, double rhs, double tol) {
  VerificationReport rep;
  rep.id = id;
  rep.p = pt.p;
  rep.q = pt.q;
  rep.r = pt.r;
  rep.k = k;
  rep.point = point;
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.abs_err = std::abs(lhs - rhs);
  const double den = std::max(std::abs(lhs), std::abs(rhs));
  rep.rel_err = den > 0.0 ? rep.abs_err / den : 0.0;
  rep.tol = tol;
  rep.pass = rep.abs_err <= tol || rep.rel_err <= tol;
  return rep;
}

// --- power integrals --------------------------------------------------------

namespace {

// Integrand of int sn^a cn^b dn^c dt after substituting s = sn t:
// s^a (1-s^q)^{(b-1)/p} (1-k^q s^q)^{(c-1)(1-1/r)}.
double power_quadrature(const ParamTriple& pt, const Modulus& mod, double a,
                        double b, double c, double upper, double tol) {
  auto f = [&](double s, double oms) {
    const double omsq = detail::one_minus_pow(s, oms, pt.q);
    const double dn_arg = mod.comp_pow_r + mod.k_pow_q * omsq;
    return std::pow(s, a) * std::pow(omsq, (b - 1.0) / pt.p) *
           std::pow(dn_arg, (c - 1.0) * (1.0 - 1.0 / pt.r));
  };
  if (upper == 1.0) return integrate_01(f, tol).value;
  return integrate_0x(f, upper, tol).value;
}

double quarter_length(const ParamTriple& pt, const Modulus& mod) {
  return mod.k == 0.0 ? pi_pq(pt.pq()) / 2.0 : K_pqr(pt, mod);
}

}  // namespace

double power_integral_incomplete(const ParamTriple& pt, const Modulus& mod,
                                 double a, double b, double c, double x,
                                 double tol) {
  if (!(a > -1.0)) throw std::domain_error("power_integral_incomplete: need a > -1");
  const double complete = quarter_length(pt, mod);
  if (!(x >= 0.0 && x < complete))
    throw std::domain_error("power_integral_incomplete: x must lie in [0, K)");
  if (x == 0.0) return 0.0;
  const double snx = sncndn_pqr(pt, mod, x).sn;
  const double snq = std::pow(snx, pt.q);
  if (snq <= 0.999) {
    const double aa = (a + 1.0) / pt.q;
    const SeriesResult f1 = appell_f1(aa, (1.0 - b) / pt.p, (1.0 - c) / pt.r_star,
                                      aa + 1.0, snq, mod.k_pow_q * snq, tol);
    if (f1.converged)
      return std::pow(snx, a + 1.0) / (a + 1.0) * f1.value;
  }
  return power_quadrature(pt, mod, a, b, c, snx, tol);
}

double power_integral_incomplete_quad(const ParamTriple& pt, const Modulus& mod,
                                      double a, double b, double c, double x,
                                      double tol) {
  if (!(a > -1.0)) throw std::domain_error("power_integral_incomplete_quad: need a > -1");
  if (x == 0.0) return 0.0;
  const double snx = sncndn_pqr(pt, mod, x).sn;
  return power_quadrature(pt, mod, a, b, c, snx, tol);
}

double power_integral_complete(const ParamTriple& pt, const Modulus& mod,
                               double a, double b, double c, double tol) {
  if (!(a > -1.0)) throw std::domain_error("power_integral_complete: need a > -1");
  if (!(b > 1.0 - pt.p))
    throw std::domain_error("power_integral_complete: need b > 1 - p");
  const double aa = (a + 1.0) / pt.q;
  const double bb = (b - 1.0) / pt.p + 1.0;
  const double hyp = detail::hyp2f1_with_fallback(
      (1.0 - c) / pt.r_star, aa, aa + bb, mod.k_pow_q, mod.comp_pow_r, tol);
  return beta(aa, bb) / pt.q * hyp;
}

double power_integral_complete_quad(const ParamTriple& pt, const Modulus& mod,
                                    double a, double b, double c, double tol) {
  if (!(a > -1.0)) throw std::domain_error("power_integral_complete_quad: need a > -1");
  if (!(b > 1.0 - pt.p))
    throw std::domain_error("power_integral_complete_quad: need b > 1 - p");
  return power_quadrature(pt, mod, a, b, c, 1.0, tol);
}

// --- Wallis-type formulas ---------------------------------------------------

double wallis_closed_form(const ParamTriple& pt, const Modulus& mod,
                          WallisKind kind, unsigned n, double R_or_c) {
  const double kq = mod.k_pow_q;
  const double tol = 1e-13;
  switch (kind) {
    case WallisKind::sn: {
      const double R = R_or_c;
      if (!(R > -1.0 && R <= pt.q - 1.0 + 1e-12))
        throw std::domain_error("wallis_closed_form: sn needs R in (-1, q-1]");
      const double u_inv = std::min((R + 1.0) / pt.q, 1.0);
      // pi_{p,u}/2 = u_inv B(1/p*, u_inv); at u = 1 this is p*, the value
      // pi_extended assigns to pi_{p,1}/2.
      const double pi_half = u_inv == 1.0
                                 ? pi_extended(pt.p, 1.0) / 2.0
                                 : u_inv * beta(1.0 / pt.p_star, u_inv);
      const double ratio = pochhammer(u_inv, n) /
                           pochhammer(1.0 / pt.p_star + u_inv, n);
      const double hyp = detail::hyp2f1_with_fallback(
          1.0 / pt.r_star, u_inv + n, 1.0 / pt.p_star + u_inv + n, kq,
          mod.comp_pow_r, tol);
      return ratio / (R + 1.0) * pi_half * hyp;
    }
    case WallisKind::cn: {
      const double R = R_or_c;
      if (!(R > 1.0 - pt.p && R <= 1.0 + 1e-12))
        throw std::domain_error("wallis_closed_form: cn needs R in (1-p, 1]");
      const double v_inv = std::min((R + pt.p - 1.0) / pt.p, 1.0);
      // pi_{v*,q}/2 = (1/q) B(v_inv, 1/q); at v = 1 this is 1 = pi_{inf,q}/2.
      const double pi_half = v_inv == 1.0 ? pi_extended(
                                                std::numeric_limits<double>::infinity(),
                                                pt.q) / 2.0
                                          : beta(v_inv, 1.0 / pt.q) / pt.q;
      const double ratio =
          pochhammer(v_inv, n) / pochhammer(1.0 / pt.q + v_inv, n);
      const double hyp = detail::hyp2f1_with_fallback(
          1.0 / pt.r_star, 1.0 / pt.q, 1.0 / pt.q + v_inv + n, kq,
          mod.comp_pow_r, tol);
      return ratio * pi_half * hyp;
    }
    case WallisKind::dn: {
      const double c = R_or_c;
      const double hyp = detail::hyp2f1_with_fallback(
          (1.0 - c) / pt.r_star, 1.0 / pt.q, 1.0 / pt.p_star + 1.0 / pt.q, kq,
          mod.comp_pow_r, tol);
      return pi_pq(pt.pq()) / 2.0 * hyp;
    }
  }
  throw std::logic_error("wallis_closed_form: unreachable");
}

void wallis_matrix_advance(WallisMatrixState& state, const ParamTriple& pt,
                           const Modulus& mod, double u_inv) {
  const double j = static_cast<double>(state.n);
  const double kq = mod.k_pow_q;
  const double divisor = (j + u_inv + 1.0 / pt.p_star + 1.0 / pt.r) * kq;
  const double a11 =
      (j + u_inv + 1.0 / pt.p_star + (j + u_inv + 1.0 / pt.r) * kq) / divisor;
  const double a12 = -(u_inv + j) / divisor;
  // bottom row of A_j is (divisor, 0), i.e. (1, 0) after scaling
  const auto& w = state.w;
  const std::array<std::array<double, 2>, 2> next{
      {{a11 * w[0][0] + a12 * w[1][0], a11 * w[0][1] + a12 * w[1][1]},
       {w[0][0], w[0][1]}}};
  state.w = next;
  state.scale *= divisor;
  ++state.n;
}

double wallis_matrix_form(const ParamTriple& pt, const Modulus& mod, unsigned n,
                          double R) {
  if (!(mod.k > 0.0))
    throw std::domain_error("wallis_matrix_form: needs k > 0 (use the closed form at k = 0)");
  if (!(R > -1.0 && R <= pt.q - 1.0 + 1e-12))
    throw std::domain_error("wallis_matrix_form: R must lie in (-1, q-1]");
  const double u_inv = std::min((R + 1.0) / pt.q, 1.0);
  const double kq = mod.k_pow_q;

  // Seeds: I_R = K_{p,u,r}(k^{R+1})/(R+1) and
  // I_{q+R} = (K - E)/((R+1) k^q), with the q = 1 integrals at the boundary.
  double complete_first, complete_second;
  if (u_inv >= 1.0 - 1e-9) {
    const double kappa = std::pow(mod.k, R + 1.0);
    complete_first = K_q1(pt.p, pt.r, kappa);
    complete_second = E_q1(pt.p, pt.r, kappa);
  } else {
    const ParamTriple pt_u(pt.p, 1.0 / u_inv, pt.r);
    const Modulus mod_u = Modulus::from_powers(pt_u, kq, mod.comp_pow_r);
    complete_first = K_pqr(pt_u, mod_u);
    complete_second = E_pqr(pt_u, mod_u);
  }
  const double seed_low = complete_first / (R + 1.0);
  const double seed_high = (complete_first - complete_second) / ((R + 1.0) * kq);

  WallisMatrixState state;
  for (unsigned j = 0; j < n; ++j) wallis_matrix_advance(state, pt, mod, u_inv);
  return state.w[1][0] * seed_high + state.w[1][1] * seed_low;
}

// --- recurrence -------------------------------------------------------------

RecurrenceCheck sn_power_recurrence(const ParamTriple& pt, const Modulus& mod,
                                    double a) {
  const double kq = mod.k_pow_q;
  const double aq = (a + 1.0) / pt.q;
  const double i0 = power_integral_complete(pt, mod, a, 0.0, 0.0);
  const double i1 = power_integral_complete(pt, mod, a + pt.q, 0.0, 0.0);
  const double i2 = power_integral_complete(pt, mod, a + 2.0 * pt.q, 0.0, 0.0);
  const double t2 = (1.0 / pt.p_star + aq + 1.0 / pt.r) * kq * i2;
  const double t1 = (1.0 / pt.p_star + aq + (aq + 1.0 / pt.r) * kq) * i1;
  const double t0 = aq * i0;
  RecurrenceCheck chk;
  chk.residual = std::abs(t2 - t1 + t0);
  chk.term_scale = std::max({std::abs(t2), std::abs(t1), std::abs(t0)});
  return chk;
}

double sn_power_recurrence_residual(const ParamTriple& pt, const Modulus& mod,
                                    double a) {
  return sn_power_recurrence(pt, mod, a).residual;
}

// --- Legendre-type relation --------------------------------------------------

namespace {

struct Primed {
  ParamTriple pt;
  Modulus mod;
};

// The primed complete integrals have q and r swapped and are evaluated at
// k' = (1-k^q)^{1/r}; both complementary powers are already known.
Primed primed_of(const ParamTriple& pt, const Modulus& mod) {
  ParamTriple swapped(pt.p, pt.r, pt.q);
  Modulus m = Modulus::from_powers(swapped, mod.comp_pow_r, mod.k_pow_q);
  return {swapped, m};
}

double y2_value(const ParamTriple& pt, double k) {
  const Modulus mod = Modulus::make(pt, k);
  const Primed pr = primed_of(pt, mod);
  return std::pow(k, pt.q / pt.p - 1.0) *
         std::pow(mod.comp_pow_r, (1.0 - pt.r / pt.p) / pt.r) *
         K_pqr(pr.pt, pr.mod);
}

}  // namespace

double legendre_L(const ParamTriple& pt, double k) {
  if (!(k > 0.0 && k < 1.0))
    throw std::domain_error("legendre_L: k must lie in (0,1)");
  const Modulus mod = Modulus::make(pt, k);
  const Primed pr = primed_of(pt, mod);
  const double complete_k = K_pqr(pt, mod);
  const double complete_e = E_pqr(pt, mod);
  const double primed_k = K_pqr(pr.pt, pr.mod);
  const double primed_e = E_pqr(pr.pt, pr.mod);
  return complete_e * primed_k + complete_k * primed_e - complete_k * primed_k;
}

double legendre_constant(const ParamTriple& pt) {
  return pi_pq(pt.pq()) / (2.0 * pt.r) *
         beta(1.0 / pt.p_star + 1.0 / pt.q, 1.0 / pt.r);
}

DerivativeCheck derivative_check(const ParamTriple& pt, double k, DerivKind kind) {
  constexpr double kEdge = 1e-3;
  if (!(k > kEdge && k < 1.0 - kEdge))
    throw std::domain_error("derivative_check: k too close to an endpoint");
  const double h = 1e-5;
  const Modulus mod = Modulus::make(pt, k);
  const double kq = mod.k_pow_q;
  const double kpr = mod.comp_pow_r;  // (k')^r
  const double aq = pt.alpha * pt.q;

  auto k_of = [&](double t) { return K_pqr(pt, Modulus::make(pt, t)); };
  auto e_of = [&](double t) { return E_pqr(pt, Modulus::make(pt, t)); };
  auto kp_of = [&](double t) {
    const Primed pr = primed_of(pt, Modulus::make(pt, t));
    return K_pqr(pr.pt, pr.mod);
  };
  auto ep_of = [&](double t) {
    const Primed pr = primed_of(pt, Modulus::make(pt, t));
    return E_pqr(pr.pt, pr.mod);
  };

  double fd = 0.0, closed = 0.0;
  switch (kind) {
    case DerivKind::dK: {
      fd = (k_of(k + h) - k_of(k - h)) / (2.0 * h);
      closed = (-(aq - kq) * k_of(k) + aq * e_of(k)) / (k * kpr);
      break;
    }
    case DerivKind::dE: {
      fd = (e_of(k + h) - e_of(k - h)) / (2.0 * h);
      closed = pt.q * (e_of(k) - k_of(k)) / (pt.r * k);
      break;
    }
    case DerivKind::dK_prime: {
      fd = (kp_of(k + h) - kp_of(k - h)) / (2.0 * h);
      const double ar = pt.alpha * pt.r;
      closed = pt.q * ((ar - kpr) * kp_of(k) - ar * ep_of(k)) / (pt.r * k * kpr);
      break;
    }
    case DerivKind::dE_prime: {
      fd = (ep_of(k + h) - ep_of(k - h)) / (2.0 * h);
      closed = std::pow(k, pt.q - 1.0) * (kp_of(k) - ep_of(k)) / kpr;
      break;
    }
  }
  return {fd, closed};
}

double derivative_residual(const ParamTriple& pt, double k, DerivKind kind) {
  const DerivativeCheck chk = derivative_check(pt, k, kind);
  return std::abs(chk.finite_difference - chk.closed_form);
}

double wronskian_scaled(const ParamTriple& pt, double k) {
  const double h = 1e-5;
  auto y1 = [&](double t) { return K_pqr(pt, Modulus::make(pt, t)); };
  auto y2 = [&](double t) { return y2_value(pt, t); };
  const double dy1 = (y1(k + h) - y1(k - h)) / (2.0 * h);
  const double dy2 = (y2(k + h) - y2(k - h)) / (2.0 * h);
  const double wron = y1(k) * dy2 - dy1 * y2(k);
  const Modulus mod = Modulus::make(pt, k);
  return std::pow(k, 2.0 - pt.q / pt.p) *
         std::pow(mod.comp_pow_r, (pt.r / pt.p + pt.r - 1.0) / pt.r) * wron;
}

double hyper_ode_residual(const ParamTriple& pt, double k, bool second_solution) {
  auto y = [&](double t) {
    return second_solution ? y2_value(pt, t)
                           : K_pqr(pt, Modulus::make(pt, t));
  };
  const double h1 = 1e-5, h2 = 1e-4;
  const double y_k = y(k);
  const double dy = (y(k + h1) - y(k - h1)) / (2.0 * h1);
  const double d2y = (y(k + h2) - 2.0 * y_k + y(k - h2)) / (h2 * h2);
  const Modulus mod = Modulus::make(pt, k);
  const double kq = mod.k_pow_q;
  return std::abs(k * mod.comp_pow_r * d2y +
                  (2.0 - pt.q / pt.p - (2.0 + pt.q / pt.r_star) * kq) * dy -
                  pt.q / pt.r_star * std::pow(k, pt.q - 1.0) * y_k);
}

// --- defining ODEs ----------------------------------------------------------

namespace {

constexpr double kConstraintTol = 1e-12;

enum class OdeFamily { sn, cn, dn };

OdeFamily ode_family(OdeKind kind) {
  switch (kind) {
    case OdeKind::snode:
    case OdeKind::allencahn: return OdeFamily::sn;
    case OdeKind::cnode:
    case OdeKind::cnallencahn: return OdeFamily::cn;
    default: return OdeFamily::dn;
  }
}

}  // namespace

double ode_residual(const ParamTriple& pt, const Modulus& mod, OdeKind kind,
                    double x) {
  if (kind == OdeKind::allencahn && std::abs(pt.r - pt.p_star) > kConstraintTol)
    throw std::domain_error("ode_residual: allencahn requires r = p*");
  if (kind == OdeKind::cnallencahn && std::abs(pt.r - pt.q) > kConstraintTol)
    throw std::domain_error("ode_residual: cnallencahn requires r = q");
  if (kind == OdeKind::dnallencahn && std::abs(pt.q - pt.p_star) > kConstraintTol)
    throw std::domain_error("ode_residual: dnallencahn requires q = p*");
  const OdeFamily family = ode_family(kind);
  if (family == OdeFamily::dn && !(mod.k > 0.0))
    throw std::domain_error("ode_residual: dn equations require k > 0");

  const double h = 1e-5;
  const double kq = mod.k_pow_q;
  const double qs = pt.q_star;

  // Analytic first derivative of the transformed unknown, per family.
  auto y_prime = [&](double t) {
    const JacobiValues jv = sncndn_pqr(pt, mod, t);
    switch (family) {
      case OdeFamily::sn: return jv.cn * jv.dn;
      case OdeFamily::cn:
        return -pt.q / pt.p_star * phi(pt.q, jv.sn) * jv.dn;
      default:
        return -pt.q / pt.r * kq * phi(pt.q, jv.sn) * jv.cn;
    }
  };
  const double outer_exp = family == OdeFamily::sn ? pt.p : qs;
  const double outer =
      (phi(outer_exp, y_prime(x + h)) - phi(outer_exp, y_prime(x - h))) / (2.0 * h);

  const JacobiValues jv = sncndn_pqr(pt, mod, x);
  double nonlinear = 0.0;
  switch (kind) {
    case OdeKind::snode: {
      const double y = jv.sn;
      const double yq = std::pow(std::abs(y), pt.q);
      const double prs = pt.p / pt.r_star;
      nonlinear = pt.q / pt.p_star * phi(pt.q, y) *
                  std::pow(1.0 - kq * yq, prs - 1.0) *
                  (1.0 + prs * kq - (1.0 + prs) * kq * yq);
      break;
    }
    case OdeKind::allencahn: {
      const double y = jv.sn;
      const double yq = std::pow(std::abs(y), pt.q);
      nonlinear = pt.q / pt.p_star * phi(pt.q, y) * (1.0 + kq - 2.0 * kq * yq);
      break;
    }
    case OdeKind::cnode: {
      const double y = phi(pt.p, jv.cn);
      const double yps = std::pow(std::abs(y), pt.p_star);
      const double c1 = 1.0 + qs / pt.r_star;
      nonlinear = std::pow(pt.q / pt.p_star, qs - 1.0) * phi(pt.p_star, y) *
                  std::pow(1.0 - kq + kq * yps, qs / pt.r_star - 1.0) *
                  (1.0 - c1 * kq + c1 * kq * yps);
      break;
    }
    case OdeKind::cnallencahn: {
      const double y = phi(pt.p, jv.cn);
      const double yps = std::pow(std::abs(y), pt.p_star);
      nonlinear = std::pow(pt.q / pt.p_star, qs - 1.0) * phi(pt.p_star, y) *
                  (1.0 - 2.0 * kq + 2.0 * kq * yps);
      break;
    }
    case OdeKind::dnode: {
      const double y = std::pow(jv.dn, pt.r_star - 1.0);
      const double yr = std::pow(y, pt.r);
      const double c1 = 1.0 + qs / pt.p;
      nonlinear = std::pow(pt.q / pt.r, qs - 1.0) * std::pow(mod.k, qs) *
                  std::pow(y, pt.r - 1.0) *
                  std::pow(1.0 - 1.0 / kq + yr / kq, qs / pt.p - 1.0) *
                  (1.0 - c1 / kq + c1 * yr / kq);
      break;
    }
    case OdeKind::dnallencahn: {
      // q = p*, so k^{q*} = k^p and the phi exponent q* equals p.
      const double y = std::pow(jv.dn, pt.r_star - 1.0);
      const double yr = std::pow(y, pt.r);
      nonlinear = std::pow(pt.p_star / pt.r, pt.p - 1.0) * std::pow(mod.k, pt.p) *
                  std::pow(y, pt.r - 1.0) * (1.0 - 2.0 / kq + 2.0 * yr / kq);
      break;
    }
  }
  return std::abs(outer + nonlinear);
}

// --- inequalities -----------------------------------------------------------

double inequality_margin(const ParamTriple& pt, const Modulus& mod,
                         InequalityKind kind, double x_or_alpha) {
  switch (kind) {
    case InequalityKind::sn_cn_p: {
      const JacobiValues jv = sncndn_pqr(pt, mod, x_or_alpha);
      const double s = std::pow(jv.sn, pt.q / pt.p);
      const double lhs = std::pow(s + jv.cn, pt.p_star);
      const double rhs = 1.0 + std::pow(2.0, 2.0 / pt.p) * s * jv.cn;
      return rhs - lhs;
    }
    case InequalityKind::sn_cn_q: {
      const JacobiValues jv = sncndn_pqr(pt, mod, x_or_alpha);
      const double c = std::pow(jv.cn, pt.p / pt.q);
      const double lhs = std::pow(jv.sn + c, pt.q_star);
      const double rhs = 1.0 + std::pow(2.0, 2.0 / pt.q) * jv.sn * c;
      return rhs - lhs;
    }
    case InequalityKind::carlen: {
      const double alpha = x_or_alpha;
      if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::domain_error("inequality_margin: carlen needs alpha in [0,1]");
      const double e = pt.p;
      const double s = std::pow(alpha, e) + std::pow(1.0 - alpha, e);
      double inner = 0.0;
      if (alpha > 0.0 && alpha < 1.0)
        inner = std::pow(2.0 * std::pow(alpha * (1.0 - alpha), e / 2.0) / s, 2.0 / e);
      return std::pow(1.0 + inner, e - 1.0) * s - 1.0;
    }
  }
  throw std::logic_error("inequality_margin: unreachable");
}

// --- suites -----------------------------------------------------------------

std::optional<Suite> suite_from_name(std::string_view name) {
  if (name == "legendre") return Suite::legendre;
  if (name == "wallis1") return Suite::wallis1;
  if (name == "wallis2") return Suite::wallis2;
  if (name == "recurrence") return Suite::recurrence;
  if (name == "ode") return Suite::ode;
  if (name == "inequalities") return Suite::inequalities;
  if (name == "pythagorean") return Suite::pythagorean;
  if (name == "roundtrip") return Suite::roundtrip;
  if (name == "derivative") return Suite::derivative;
  if (name == "all") return Suite::all;
  return std::nullopt;
}

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::legendre: return "legendre";
    case Suite::wallis1: return "wallis1";
    case Suite::wallis2: return "wallis2";
    case Suite::recurrence: return "recurrence";
    case Suite::ode: return "ode";
    case Suite::inequalities: return "inequalities";
    case Suite::pythagorean: return "pythagorean";
    case Suite::roundtrip: return "roundtrip";
    case Suite::derivative: return "derivative";
    case Suite::all: return "all";
  }
  return "unknown";
}

namespace {

using Triple = std::array<double, 3>;

constexpr std::array<double, 3> kCube = {1.5, 2.0, 3.0};

std::vector<Triple> cube_triples() {
  std::vector<Triple> v;
  for (double p : kCube)
    for (double q : kCube)
      for (double r : kCube) v.push_back({p, q, r});
  return v;
}

// 27 triples: 21 from the cube, 3 with alpha = 0, 3 with alpha < 0.
std::vector<Triple> legendre_triples() {
  std::vector<Triple> v;
  for (double p : {2.0, 3.0})
    for (double q : kCube)
      for (double r : kCube) v.push_back({p, q, r});
  v.push_back({1.5, 1.5, 1.5});
  v.push_back({1.5, 2.0, 2.0});
  v.push_back({1.5, 2.0, 3.0});
  v.push_back({1.5, 3.0, 3.0});  // alpha = 0
  v.push_back({2.0, 4.0, 4.0});  // alpha = 0
  v.push_back({2.0, 3.0, 6.0});  // alpha = 0
  v.push_back({1.2, 4.0, 4.0});   // alpha < 0
  v.push_back({1.25, 3.0, 6.0});  // alpha < 0
  v.push_back({1.2, 5.0, 2.5});   // alpha < 0
  return v;
}

std::vector<Triple> pythagorean_triples() {
  std::vector<Triple> v = cube_triples();
  v.resize(24);  // drop the three (3,3,*) entries
  v.push_back({2.5, 2.0, 2.0});
  v.push_back({2.0, 2.5, 2.0});
  v.push_back({2.0, 2.0, 2.5});
  return v;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i)
    v[i] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
  return v;
}

const std::vector<double> kLegendreK = linspace(0.05, 0.95, 19);
const std::vector<double> kWronskianK = linspace(0.1, 0.9, 9);
const std::vector<double> kHyperOdeK = {0.2, 0.5, 0.8};
const std::vector<double> kWallisK = {0.0, 0.5, 0.9};
const std::vector<double> kWallis2K = {0.5, 0.9};
const std::vector<unsigned> kWallisN = {0, 1, 2, 3};
const std::vector<unsigned> kWallis2N = {0, 1, 2, 3, 5, 8};
const std::vector<double> kRecurrenceA = {-0.5, 0.0, 1.0, 2.3};
const std::vector<double> kDerivK = {0.2, 0.5, 0.8};
const std::vector<double> kIneqExponents = {1.2, 1.5, 2.0, 3.0, 5.0};
const std::vector<double> kIneqK = {0.0, 0.5};
const std::vector<double> kPythagoreanK = {0.0, 0.3, 0.7, 0.95};
const std::vector<double> kRoundtripK = {0.0, 0.5, 0.9};

struct OdeCase {
  OdeKind kind;
  IdentityId id;
  Triple triple;
  double k;
};

const std::vector<OdeCase> kOdeCases = {
    {OdeKind::snode, IdentityId::ode_snode, {3.0, 2.0, 2.0}, 0.4},
    {OdeKind::snode, IdentityId::ode_snode, {2.0, 3.0, 2.5}, 0.6},
    {OdeKind::snode, IdentityId::ode_snode, {1.8, 2.2, 3.0}, 0.3},
    {OdeKind::allencahn, IdentityId::ode_allencahn, {2.0, 2.0, 2.0}, 0.6},
    {OdeKind::allencahn, IdentityId::ode_allencahn, {3.0, 2.0, 1.5}, 0.5},
    {OdeKind::allencahn, IdentityId::ode_allencahn, {1.5, 2.5, 3.0}, 0.4},
    {OdeKind::cnode, IdentityId::ode_cnode, {2.0, 2.0, 2.0}, 0.5},
    {OdeKind::cnode, IdentityId::ode_cnode, {2.5, 3.0, 2.0}, 0.6},
    {OdeKind::cnode, IdentityId::ode_cnode, {2.0, 1.8, 2.6}, 0.35},
    {OdeKind::cnallencahn, IdentityId::ode_cnallencahn, {2.0, 2.0, 2.0}, 0.5},
    {OdeKind::cnallencahn, IdentityId::ode_cnallencahn, {2.5, 2.0, 2.0}, 0.55},
    {OdeKind::cnallencahn, IdentityId::ode_cnallencahn, {3.0, 2.5, 2.5}, 0.3},
    {OdeKind::dnode, IdentityId::ode_dnode, {2.0, 2.0, 2.0}, 0.5},
    {OdeKind::dnode, IdentityId::ode_dnode, {2.2, 2.0, 3.0}, 0.7},
    {OdeKind::dnode, IdentityId::ode_dnode, {3.0, 2.0, 2.5}, 0.6},
    {OdeKind::dnallencahn, IdentityId::ode_dnallencahn, {2.0, 2.0, 2.0}, 0.6},
    {OdeKind::dnallencahn, IdentityId::ode_dnallencahn, {3.0, 1.5, 2.0}, 0.5},
    {OdeKind::dnallencahn, IdentityId::ode_dnallencahn, {1.5, 3.0, 2.5}, 0.45},
};

std::vector<Triple> restrict_triples(std::vector<Triple> defaults,
                                     const SuiteOptions& opt) {
  if (opt.triple) return {*opt.triple};
  return defaults;
}

double pick_tol(const SuiteOptions& opt, double fallback) {
  return opt.tol_override.value_or(fallback);
}

void run_legendre(const SuiteOptions& opt, std::vector<VerificationReport>& out) {
  const double tol_l = pick_tol(opt, 1e-9);
  const double tol_w = pick_tol(opt, 1e-5);
  const double tol_h = pick_tol(opt, 1e-4);
  for (const Triple& tr : restrict_triples(legendre_triples(), opt)) {
    const ParamTriple pt(tr[0], tr[1], tr[2]);
    const double constant = legendre_constant(pt);
    for (double k : kLegendreK)
      out.push_back(make_report(IdentityId::legendre_L_const, pt, k, k,
                                legendre_L(pt, k), constant, tol_l));
    const double w_mid = wronskian_scaled(pt, 0.5);
    for (double k : kWronskianK) {
      const double w_k = wronskian_scaled(pt, k);
      out.push_back(make_report(IdentityId::legendre_wronskian, pt, k, k, w_k,
                                -pt.alpha * pt.q * legendre_L(pt, k), tol_w));
      out.push_back(make_report(IdentityId::legendre_wronskian_const, pt, k, k,
                                w_k, w_mid, tol_w));
    }
    for (double k : kHyperOdeK) {
      out.push_back(make_report(IdentityId::legendre_hyper_ode_y1, pt, k, k,
                                hyper_ode_residual(pt, k, false), 0.0, tol_h));
      out.push_back(make_report(IdentityId::legendre_hyper_ode_y2, pt, k, k,
                                hyper_ode_residual(pt, k, true), 0.0, tol_h));
    }
  }
}

void run_wallis1(const SuiteOptions& opt, std::vector<VerificationReport>& out) {
  const double tol = pick_tol(opt, 1e-7);
  for (const Triple& tr : restrict_triples(cube_triples(), opt)) {
    const ParamTriple pt(tr[0], tr[1], tr[2]);
    for (double k : kWallisK) {
      const Modulus mod = Modulus::make(pt, k);
      for (unsigned n : kWallisN) {
        for (double R : {(pt.q - 2.0) / 2.0, pt.q - 1.0}) {
          const double a = pt.q * n + R;
          out.push_back(make_report(
              IdentityId::wallis1_sn, pt, k, a,
              wallis_closed_form(pt, mod, WallisKind::sn, n, R),
              power_integral_complete_quad(pt, mod, a, 0.0, 0.0, 1e-10), tol));
        }
        for (double R : {1.0 - pt.p / 2.0, 1.0}) {
          const double b = pt.p * n + R;
          out.push_back(make_report(
              IdentityId::wallis1_cn, pt, k, b,
              wallis_closed_form(pt, mod, WallisKind::cn, n, R),
              power_integral_complete_quad(pt, mod, 0.0, b, 0.0, 1e-10), tol));
        }
      }
      for (double c : {0.5, pt.r_star}) {
        out.push_back(make_report(
            IdentityId::wallis1_dn, pt, k, c,
            wallis_closed_form(pt, mod, WallisKind::dn, 0, c),
            power_integral_complete_quad(pt, mod, 0.0, 0.0, c, 1e-10), tol));
      }
    }
  }
}

void run_wallis2(const SuiteOptions& opt, std::vector<VerificationReport>& out) {
  const double tol = pick_tol(opt, 1e-7);
  for (const Triple& tr : restrict_triples(cube_triples(), opt)) {
    const ParamTriple pt(tr[0], tr[1], tr[2]);
    for (double k : kWallis2K) {
      const Modulus mod = Modulus::make(pt, k);
      for (unsigned n : kWallis2N) {
        for (double R : {(pt.q - 2.0) / 2.0, pt.q - 1.0}) {
          const double a = pt.q * n + R;
          out.push_back(make_report(
              IdentityId::wallis2_sn, pt, k, a,
              wallis_matrix_form(pt, mod, n, R),
              wallis_closed_form(pt, mod, WallisKind::sn, n, R), tol));
        }
      }
    }
  }
}

void run_recurrence(const SuiteOptions& opt, std::vector<VerificationReport>& out) {
  for (const Triple& tr : restrict_triples(cube_triples(), opt)) {
    const ParamTriple pt(tr[0], tr[1], tr[2]);
    for (double k : kWallisK) {
      const Modulus mod = Modulus::make(pt, k);
      for (double a : kRecurrenceA) {
        const RecurrenceCheck chk = sn_power_recurrence(pt, mod, a);
        const double tol = pick_tol(opt, 1e-9 * std::max(1.0, chk.term_scale));
        out.push_back(make_report(IdentityId::recurrence_sn_power, pt, k, a,
                                  chk.residual, 0.0, tol));
      }
    }
  }
}

void run_ode(const SuiteOptions& opt, std::vector<VerificationReport>& out) {
  const double tol = pick_tol(opt, 1e-5);
  std::vector<OdeCase> cases;
  if (opt.triple) {
    // One case per equation, skipping specialized forms whose exponent
    // constraint the requested triple does not satisfy.
    const Triple tr = *opt.triple;
    const ParamTriple probe(tr[0], tr[1], tr[2]);
    for (const OdeCase& oc : kOdeCases) {
      if (!cases.empty() && cases.back().kind == oc.kind) continue;
      if (oc.kind == OdeKind::allencahn &&
          std::abs(probe.r - probe.p_star) > kConstraintTol)
        continue;
      if (oc.kind == OdeKind::cnallencahn && std::abs(probe.r - probe.q) > kConstraintTol)
        continue;
      if (oc.kind == OdeKind::dnallencahn &&
          std::abs(probe.q - probe.p_star) > kConstraintTol)
        continue;
      cases.push_back({oc.kind, oc.id, tr, oc.k});
    }
  } else {
    cases = kOdeCases;
  }
  for (const OdeCase& oc : cases) {
    const ParamTriple pt(oc.triple[0], oc.triple[1], oc.triple[2]);
    const Modulus mod = Modulus::make(pt, oc.k);
    const double complete = K_pqr(pt, mod);
    for (int i = 0; i < 20; ++i) {
      const double x = complete * (0.04 + 0.92 * static_cast<double>(i) / 19.0);
      out.push_back(make_report(oc.id, pt, oc.k, x,
                                ode_residual(pt, mod, oc.kind, x), 0.0, tol));
    }
  }
}

void sign_report(std::vector<VerificationReport>& out, IdentityId id,
                 const ParamTriple& pt, double k, double point, double margin,
                 double exponent, double tol) {
  // The theorems mandate margin >= 0 for exponent >= 2 and margin <= 0 for
  // exponent <= 2 (both at exponent exactly 2). rhs is the margin clamped to
  // the admissible side, so abs_err is exactly the violation.
  double rhs;
  if (exponent == 2.0)
    rhs = 0.0;
  else if (exponent > 2.0)
    rhs = std::max(margin, 0.0);
  else
    rhs = std::min(margin, 0.0);
  out.push_back(make_report(id, pt, k, point, margin, rhs, tol));
}

void run_inequalities(const SuiteOptions& opt, std::vector<VerificationReport>& out) {
  const double tol = pick_tol(opt, 1e-12);
  const std::vector<double> exps =
      opt.triple ? std::vector<double>{(*opt.triple)[0]} : kIneqExponents;
  for (double e : exps) {
    {
      const ParamTriple pt = opt.triple
                                 ? ParamTriple((*opt.triple)[0], (*opt.triple)[1],
                                               (*opt.triple)[2])
                                 : ParamTriple(e, 2.5, 2.0);
      for (double k : kIneqK) {
        const Modulus mod = Modulus::make(pt, k);
        const double complete = quarter_length(pt, mod);
        for (int i = 0; i < 50; ++i) {
          const double x = complete * static_cast<double>(i) / 49.0;
          sign_report(out, IdentityId::ineq_sn_cn_p, pt, k, x,
                      inequality_margin(pt, mod, InequalityKind::sn_cn_p, x),
                      pt.p, tol);
        }
      }
    }
    {
      const ParamTriple pt = opt.triple
                                 ? ParamTriple((*opt.triple)[0], (*opt.triple)[1],
                                               (*opt.triple)[2])
                                 : ParamTriple(2.5, e, 2.0);
      for (double k : kIneqK) {
        const Modulus mod = Modulus::make(pt, k);
        const double complete = quarter_length(pt, mod);
        for (int i = 0; i < 50; ++i) {
          const double x = complete * static_cast<double>(i) / 49.0;
          sign_report(out, IdentityId::ineq_sn_cn_q, pt, k, x,
                      inequality_margin(pt, mod, InequalityKind::sn_cn_q, x),
                      pt.q, tol);
        }
      }
    }
    {
      const ParamTriple pt(e, 2.0, 2.0);
      const Modulus mod = Modulus::make(pt, 0.0);
      for (int i = 0; i < 50; ++i) {
        const double alpha = static_cast<double>(i) / 49.0;
        sign_report(out, IdentityId::ineq_carlen, pt, 0.0, alpha,
                    inequality_margin(pt, mod, InequalityKind::carlen, alpha),
                    pt.p, tol);
      }
    }
  }
}

void run_pythagorean(const SuiteOptions& opt, std::vector<VerificationReport>& out) {
  const double tol = pick_tol(opt, 1e-12);
  for (const Triple& tr : restrict_triples(pythagorean_triples(), opt)) {
    const ParamTriple pt(tr[0], tr[1], tr[2]);
    for (double k : kPythagoreanK) {
      const Modulus mod = Modulus::make(pt, k);
      const double period = 4.0 * quarter_length(pt, mod);
      for (int i = 0; i < 200; ++i) {
        const double x = period * (static_cast<double>(i) + 0.5) / 200.0;
        const JacobiValues jv = sncndn_pqr(pt, mod, x);
        const double snq = std::pow(std::abs(jv.sn), pt.q);
        out.push_back(make_report(
            IdentityId::pythagorean_cn_sn, pt, k, x,
            std::pow(std::abs(jv.cn), pt.p) + snq, 1.0, tol));
        out.push_back(make_report(
            IdentityId::pythagorean_dn_sn, pt, k, x,
            std::pow(jv.dn, pt.r_star) + mod.k_pow_q * snq, 1.0, tol));
      }
    }
  }
}

void run_roundtrip(const SuiteOptions& opt, std::vector<VerificationReport>& out) {
  const double tol = pick_tol(opt, 1e-9);
  for (const Triple& tr : restrict_triples(cube_triples(), opt)) {
    const ParamTriple pt(tr[0], tr[1], tr[2]);
    // Grid end at the binary64 representability limit: near s = 1 the
    // achievable H values are spaced (q eps)^{-1/p} ulp apart, so the
    // round-trippable region shrinks like (eps/tol)^{p-1} as p decreases.
    const double relgap =
        std::clamp(20.0 * std::pow(2.2e-7, pt.p - 1.0), 1e-6, 0.05);
    for (double k : kRoundtripK) {
      const Modulus mod = Modulus::make(pt, k);
      const double complete = quarter_length(pt, mod);
      for (int i = 0; i < 20; ++i) {
        const double x =
            complete * (1.0 - relgap) * static_cast<double>(i) / 19.0;
        const double s = sncndn_pqr(pt, mod, x).sn;
        const double back = mod.k == 0.0 ? F_pq(pt.pq(), s) : H_pqr(pt, mod, s);
        out.push_back(
            make_report(IdentityId::roundtrip_sn, pt, k, x, back, x, tol));
      }
    }
  }
}

void run_derivative(const SuiteOptions& opt, std::vector<VerificationReport>& out) {
  const double tol = pick_tol(opt, 1e-6);
  constexpr std::array<std::pair<DerivKind, IdentityId>, 4> kinds{
      {{DerivKind::dK, IdentityId::deriv_dK},
       {DerivKind::dE, IdentityId::deriv_dE},
       {DerivKind::dK_prime, IdentityId::deriv_dK_prime},
       {DerivKind::dE_prime, IdentityId::deriv_dE_prime}}};
  for (const Triple& tr : restrict_triples(cube_triples(), opt)) {
    const ParamTriple pt(tr[0], tr[1], tr[2]);
    for (double k : kDerivK)
      for (const auto& [kind, id] : kinds) {
        const DerivativeCheck chk = derivative_check(pt, k, kind);
        out.push_back(make_report(id, pt, k, k, chk.finite_difference,
                                  chk.closed_form, tol));
      }
  }
}

}  // namespace

std::vector<VerificationReport> run_suite(Suite suite, const SuiteOptions& opt) {
  std::vector<VerificationReport> out;
  switch (suite) {
    case Suite::legendre: run_legendre(opt, out); break;
    case Suite::wallis1: run_wallis1(opt, out); break;
    case Suite::wallis2: run_wallis2(opt, out); break;
    case Suite::recurrence: run_recurrence(opt, out); break;
    case Suite::ode: run_ode(opt, out); break;
    case Suite::inequalities: run_inequalities(opt, out); break;
    case Suite::pythagorean: run_pythagorean(opt, out); break;
    case Suite::roundtrip: run_roundtrip(opt, out); break;
    case Suite::derivative: run_derivative(opt, out); break;
    case Suite::all: {
      for (Suite s : {Suite::legendre, Suite::wallis1, Suite::wallis2,
                      Suite::recurrence, Suite::ode, Suite::inequalities,
                      Suite::pythagorean, Suite::roundtrip, Suite::derivative}) {
        auto part = run_suite(s, opt);
        out.insert(out.end(), part.begin(), part.end());
      }
      return out;  // each part is already in canonical order
    }
  }
  // Canonical report order, independent of how the points were evaluated.
  std::stable_sort(out.begin(), out.end(),
                   [](const VerificationReport& a, const VerificationReport& b) {
                     return std::tie(a.id, a.p, a.q, a.r, a.k, a.point) <
                            std::tie(b.id, b.p, b.q, b.r, b.k, b.point);
                   });
  return out;
}

}  // namespace gelliptic
