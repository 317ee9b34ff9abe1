// SPDX-License-Identifier: Apache-2.0
//
// Three-parameter generalized Jacobi elliptic functions sn/cn/dn, the
// incomplete integral they invert, the complete elliptic integrals of the
// first and second kind (including the q = 1 extension), the amplitude
// function, and the periodic extensions to the real line.

#pragma once

#include "gelliptic/gtf.hpp"
#include "gelliptic/specfun.hpp"

namespace gelliptic {

/// Exponents p, q, r > 1, their conjugates, and alpha = 1/q + 1/r - 1/p.
struct ParamTriple {
  double p;
  double q;
  double r;
  double p_star;
  double q_star;
  double r_star;
  double alpha;

  ParamTriple(double p_value, double q_value, double r_value);

  ParamPair pq() const { return ParamPair(p, q); }
};

/// Modulus k in [0,1) with the powers the integrals actually consume:
/// k^q and the complementary pieces (1-k^q) and k' = (1-k^q)^{1/r}.
struct Modulus {
  double k = 0.0;
  double k_pow_q = 0.0;
  double comp_pow_r = 1.0;  // (k')^r = 1 - k^q, formed without cancellation
  double comp_rq = 1.0;     // k' = (1-k^q)^{1/r}

  static Modulus make(const ParamTriple& pt, double k);

  /// Builds the modulus from the two complementary powers directly. Used for
  /// the primed complete integrals, where both powers are already known and
  /// re-deriving one from the other would reintroduce cancellation.
  static Modulus from_powers(const ParamTriple& pt, double k_pow_q,
                             double comp_pow_r);

  /// The alternate complement (1-k^r)^{1/q}.
  double comp_qr(const ParamTriple& pt) const;
};

/// Incomplete integral H_{p,q,r}(x,k) on [0,1]; strictly increasing in x.
double H_pqr(const ParamTriple& pt, const Modulus& mod, double x,
             double tol = 1e-12);

/// Complete integral of the first kind. Evaluated by the hypergeometric
/// series when k^q <= 0.99 and by quadrature otherwise; memoized on
/// (p,q,r,k) behind an internal lock.
double K_pqr(const ParamTriple& pt, const Modulus& mod);

/// Complete integral of the second kind.
double E_pqr(const ParamTriple& pt, const Modulus& mod);

// The two evaluation routes, exposed so they can be cross-checked.
double K_pqr_quad(const ParamTriple& pt, const Modulus& mod, double tol = 1e-12);
SeriesResult K_pqr_series(const ParamTriple& pt, const Modulus& mod,
                          double tol = 1e-12);
double E_pqr_quad(const ParamTriple& pt, const Modulus& mod, double tol = 1e-12);
SeriesResult E_pqr_series(const ParamTriple& pt, const Modulus& mod,
                          double tol = 1e-12);

/// q = 1 extensions of the complete integrals, defined directly by their
/// algebraic integrals (modulus enters linearly).
double K_q1(double p, double r, double k, double tol = 1e-12);
double E_q1(double p, double r, double k, double tol = 1e-12);

struct JacobiValues {
  double sn;
  double cn;
  double dn;
};

/// sn, cn, dn at any real x. On [0,K] sn inverts H; the extension is the
/// usual parity/periodicity fold: sn odd and 4K-periodic with
/// sn(x+2K) = -sn(x), cn even with cn(x+2K) = -cn(x), dn even, 2K-periodic
/// and strictly positive. At k = 0 this reduces to sin/cos and dn == 1
/// exactly.
JacobiValues sncndn_pqr(const ParamTriple& pt, const Modulus& mod, double x);

double sn_pqr(const ParamTriple& pt, const Modulus& mod, double x);
double cn_pqr(const ParamTriple& pt, const Modulus& mod, double x);
double dn_pqr(const ParamTriple& pt, const Modulus& mod, double x);

/// Amplitude am(x) on [0, K], the angle with sn(x) = sin_{p,q}(am(x)).
double am_pqr(const ParamTriple& pt, const Modulus& mod, double x);

/// The odd power function |t|^{alpha-2} t (0 at t = 0) for alpha > 1.
double phi(double alpha_exp, double t);

namespace detail {

/// F(a,b;c;z) by series, falling back to the Euler integral
/// (1/B(b,c-b)) int t^{b-1} (1-t)^{c-b-1} (1-zt)^{-a} dt when the series is
/// refused or fails to converge. One of the two symmetric slots must satisfy
/// c > slot > 0 for the fallback. omz is 1-z supplied by the caller, which
/// typically has it in a cancellation-free form already.
double hyp2f1_with_fallback(double a, double b, double c, double z, double omz,
                            double tol);

}  // namespace detail

}  // namespace gelliptic
