// SPDX-License-Identifier: Apache-2.0
//
// Numerical verification of the identities satisfied by the generalized
// trigonometric and Jacobi elliptic functions: power-integral formulas,
// Wallis-type closed forms, the power recurrence, the Legendre-type relation
// and its Wronskian structure, derivative formulas for the complete
// integrals, the defining ODEs, and the binomial-expansion inequalities.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gelliptic/gjef.hpp"

namespace gelliptic {

enum class IdentityId {
  legendre_L_const,
  legendre_wronskian,
  legendre_wronskian_const,
  legendre_hyper_ode_y1,
  legendre_hyper_ode_y2,
  wallis1_sn,
  wallis1_cn,
  wallis1_dn,
  wallis2_sn,
  recurrence_sn_power,
  ode_snode,
  ode_allencahn,
  ode_cnode,
  ode_cnallencahn,
  ode_dnode,
  ode_dnallencahn,
  ineq_sn_cn_p,
  ineq_sn_cn_q,
  ineq_carlen,
  pythagorean_cn_sn,
  pythagorean_dn_sn,
  roundtrip_sn,
  deriv_dK,
  deriv_dE,
  deriv_dK_prime,
  deriv_dE_prime,
};

std::string_view to_string(IdentityId id);

/// One verified grid point. pass holds iff abs_err <= tol or rel_err <= tol.
struct VerificationReport {
  IdentityId id;
  double p;
  double q;
  double r;
  double k;
  double point;  // grid abscissa or exponent, whichever varies
  double lhs;
  double rhs;
  double abs_err;
  double rel_err;
  double tol;
  bool pass;
};

VerificationReport make_report(IdentityId id, const ParamTriple& pt, double k,
                               double point, double lhs, double rhs, double tol);

// --- power integrals --------------------------------------------------------

/// int_0^x sn^a cn^b dn^c dt via the Appell F1 representation, with a
/// quadrature fallback when the double series is refused or too slow.
double power_integral_incomplete(const ParamTriple& pt, const Modulus& mod,
                                 double a, double b, double c, double x,
                                 double tol = 1e-12);

/// Same integral by direct quadrature (the independent route).
double power_integral_incomplete_quad(const ParamTriple& pt, const Modulus& mod,
                                      double a, double b, double c, double x,
                                      double tol = 1e-12);

/// int_0^K sn^a cn^b dn^c dt via the Beta * 2F1 closed form.
double power_integral_complete(const ParamTriple& pt, const Modulus& mod,
                               double a, double b, double c, double tol = 1e-12);

/// Same integral by direct quadrature.
double power_integral_complete_quad(const ParamTriple& pt, const Modulus& mod,
                                    double a, double b, double c,
                                    double tol = 1e-12);

// --- Wallis-type formulas ---------------------------------------------------

enum class WallisKind { sn, cn, dn };

/// Wallis-type closed form (formula I) for int_0^K fn^{power} dt. For sn the
/// power is qn+R with R in (-1, q-1]; for cn it is pn+R with R in (1-p, 1];
/// for dn the exponent R_or_c is unrestricted and n is ignored.
double wallis_closed_form(const ParamTriple& pt, const Modulus& mod,
                          WallisKind kind, unsigned n, double R_or_c);

/// Scaled 2x2 matrix product driving the Wallis formula II. Each factor is
/// divided by its (j + 1/u + 1/p* + 1/r) k^q divisor as it is accumulated so
/// the entries stay O(1); scale records the accumulated divisor.
struct WallisMatrixState {
  unsigned n = 0;
  std::array<std::array<double, 2>, 2> w{{{1.0, 0.0}, {0.0, 1.0}}};
  double scale = 1.0;
};

void wallis_matrix_advance(WallisMatrixState& state, const ParamTriple& pt,
                           const Modulus& mod, double u_inv);

/// Wallis-type formula II: int_0^K sn^{qn+R} dt from the matrix recurrence
/// seeded with the complete integrals at modulus k^{R+1} (the q = 1 ones when
/// R = q-1). Requires k > 0.
double wallis_matrix_form(const ParamTriple& pt, const Modulus& mod, unsigned n,
                          double R);

// --- recurrence -------------------------------------------------------------

struct RecurrenceCheck {
  double residual;    // |c2 I_{a+2q} - c1 I_{a+q} + c0 I_a|
  double term_scale;  // largest |term|, the natural scale for the residual
};

RecurrenceCheck sn_power_recurrence(const ParamTriple& pt, const Modulus& mod,
                                    double a);
double sn_power_recurrence_residual(const ParamTriple& pt, const Modulus& mod,
                                    double a);

// --- Legendre-type relation and section-5 structure --------------------------

/// L(k) = E K' + K E' - K K' with the primed integrals taken with q and r
/// swapped at the complementary modulus k' = (1-k^q)^{1/r}.
double legendre_L(const ParamTriple& pt, double k);

/// The constant value of L: (pi_{p,q}/(2r)) B(1/p* + 1/q, 1/r).
double legendre_constant(const ParamTriple& pt);

enum class DerivKind { dK, dE, dK_prime, dE_prime };

struct DerivativeCheck {
  double finite_difference;
  double closed_form;
};

/// Central finite difference and closed form for the modulus derivatives of
/// K, E and their primed companions. Requires k in (1e-3, 1-1e-3).
DerivativeCheck derivative_check(const ParamTriple& pt, double k, DerivKind kind);

/// |finite difference - closed form| of the same.
double derivative_residual(const ParamTriple& pt, double k, DerivKind kind);

/// k^{2-q/p} (k')^{r/p+r-1} W(y1,y2;k) with the Wronskian built from central
/// finite differences; constant in k and equal to -alpha q L(k).
double wronskian_scaled(const ParamTriple& pt, double k);

/// Residual of the hypergeometric-type ODE satisfied by y1 = K and
/// y2 = k^{q/p-1}(k')^{1-r/p} K', via second-order central differences.
double hyper_ode_residual(const ParamTriple& pt, double k, bool second_solution);

// --- defining ODEs ----------------------------------------------------------

enum class OdeKind { snode, allencahn, cnode, cnallencahn, dnode, dnallencahn };

/// |(phi(y'))' + nonlinear term| with the inner derivative y' analytic and
/// the outer derivative a central difference. The specialized forms require
/// r = p* (allencahn), r = q (cnallencahn), q = p* (dnallencahn); the
/// dn-family needs k > 0.
double ode_residual(const ParamTriple& pt, const Modulus& mod, OdeKind kind,
                    double x);

// --- inequalities -----------------------------------------------------------

enum class InequalityKind { sn_cn_p, sn_cn_q, carlen };

/// Signed margin rhs - lhs of the binomial-expansion inequalities; the sign
/// claimed by the theorems is nonnegative for exponent >= 2 and nonpositive
/// for exponent in (1,2]. For carlen the argument is alpha in [0,1] and the
/// exponent is pt.p; for the sn/cn variants it is x in [0,K].
double inequality_margin(const ParamTriple& pt, const Modulus& mod,
                         InequalityKind kind, double x_or_alpha);

// --- suites -----------------------------------------------------------------

enum class Suite {
  legendre,
  wallis1,
  wallis2,
  recurrence,
  ode,
  inequalities,
  pythagorean,
  roundtrip,
  derivative,
  all,
};

std::optional<Suite> suite_from_name(std::string_view name);
std::string_view suite_name(Suite s);

struct SuiteOptions {
  /// Restrict to a single (p,q,r); the default runs the frozen triple grid.
  std::optional<std::array<double, 3>> triple;
  /// Replace every per-point tolerance.
  std::optional<double> tol_override;
};

/// Runs a verification suite over the frozen grids and returns one report
/// per grid point, in deterministic order.
std::vector<VerificationReport> run_suite(Suite suite, const SuiteOptions& opt = {});

}  // namespace gelliptic
