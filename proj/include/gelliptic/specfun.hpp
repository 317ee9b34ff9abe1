// SPDX-License-Identifier: Apache-2.0
//
// Scalar special-function kernels: log-gamma, beta, the Pochhammer symbol,
// the Gauss hypergeometric series 2F1 and the Appell double series F1.

#pragma once

#include <cstddef>

namespace gelliptic {

/// Outcome of a truncated hypergeometric series evaluation.
struct SeriesResult {
  double value = 0.0;
  std::size_t terms_used = 0;
  bool converged = false;
  double est_error = 0.0;  ///< magnitude of the last summed term
};

/// ln Gamma(s) for s > 0 (Lanczos approximation, g = 607/128, 15 terms).
double log_gamma(double s);

/// Euler beta function B(x,y) for x, y > 0.
double beta(double x, double y);

/// Rising factorial (zeta)_n.
double pochhammer(double zeta, unsigned n);

/// Gauss hypergeometric series F(a,b;c;x) for |x| < 1.
///
/// Summation stops once three consecutive terms are each below
/// tol*|partial sum|. x > 0.99 is refused (converged = false, NaN value):
/// the series is too slow there and callers are expected to fall back to a
/// quadrature representation. c equal to a non-positive integer and |x| >= 1
/// raise std::domain_error. Hitting the term cap yields the partial sum with
/// converged = false, never a silently wrong value.
SeriesResult gauss_2f1(double a, double b, double c, double x, double tol = 1e-12);

/// Appell hypergeometric series F1(a; b1, b2; c; x, y) for |x|, |y| < 1.
///
/// Summed along diagonals m+n = s to bound cancellation; the stopping rule
/// and refusal threshold match gauss_2f1. For y = 0 this reduces to
/// F(a,b1;c;x).
SeriesResult appell_f1(double a, double b1, double b2, double c, double x,
                       double y, double tol = 1e-12);

}  // namespace gelliptic
