// SPDX-License-Identifier: Apache-2.0
//
// Independent reference implementations used only by the tests. These stay
// deliberately separate from the library code paths they check: classical
// complete integrals via the arithmetic-geometric mean, classical Jacobi
// functions via the descending amplitude recursion, a long-double tanh-sinh
// integrator, brute-force double series, and a Stirling log-gamma.

#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

namespace oracle {

inline double agm(double a, double b) {
  for (int i = 0; i < 64 && std::abs(a - b) > 1e-17 * a; ++i) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return 0.5 * (a + b);
}

/// Classical complete elliptic integral of the first kind, modulus k.
inline double classical_K(double k) {
  return 3.14159265358979323846 / (2.0 * agm(1.0, std::sqrt(1.0 - k * k)));
}

/// Classical complete elliptic integral of the second kind, modulus k,
/// via the c_n sums of the AGM iteration.
inline double classical_E(double k) {
  double a = 1.0, b = std::sqrt(1.0 - k * k), c = k;
  double sum = 0.5 * c * c;
  double pow2 = 1.0;
  for (int i = 0; i < 64 && std::abs(c) > 1e-17; ++i) {
    c = 0.5 * (a - b);
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
    pow2 *= 2.0;
    sum += 0.5 * pow2 * c * c;
  }
  const double big_k = 3.14159265358979323846 / (2.0 * a);
  return big_k * (1.0 - sum);
}

struct JacobiTriple {
  double sn, cn, dn;
};

/// Classical sn/cn/dn by the descending AGM amplitude recursion.
inline JacobiTriple classical_jacobi(double x, double k) {
  if (k == 0.0) return {std::sin(x), std::cos(x), 1.0};
  double a[32], c[32];
  a[0] = 1.0;
  double b = std::sqrt(1.0 - k * k);
  c[0] = k;
  int n = 0;
  while (n < 31 && std::abs(c[n]) > 1e-17 * a[n]) {
    ++n;
    a[n] = 0.5 * (a[n - 1] + b);
    c[n] = 0.5 * (a[n - 1] - b);
    b = std::sqrt(a[n - 1] * b);
  }
  double phi = std::ldexp(1.0, n) * a[n] * x;
  double phi_prev = phi;
  for (int i = n; i >= 1; --i) {
    phi_prev = phi;
    phi = 0.5 * (phi + std::asin(c[i] / a[i] * std::sin(phi)));
  }
  const JacobiTriple t{std::sin(phi), std::cos(phi),
                       std::cos(phi) / std::cos(phi_prev - phi)};
  return t;
}

/// Tanh-sinh in long double, written independently of the library rule.
/// f receives (t, 1-t). Fixed step refinement down to h = 2^-11.
inline long double tanh_sinh_ld(const std::function<long double(long double, long double)>& f,
                                long double tol = 1e-18L) {
  const long double half_pi = 1.57079632679489661923L;
  long double prev = 0.0L;
  long double value = 0.0L;
  for (int level = 2; level <= 11; ++level) {
    const long double h = std::ldexp(1.0L, -level);
    long double sum = 0.0L;
    for (long double u = -6.4L; u <= 6.4L; u += h) {
      const long double z = half_pi * std::sinh(u);
      const long double e2 = std::exp(-2.0L * z);
      const long double denom = 1.0L + e2;
      const long double t = 1.0L / denom;
      const long double omt = e2 / denom;
      const long double w = 2.0L * half_pi * std::cosh(u) * e2 / (denom * denom);
      if (omt <= 0.0L || t <= 0.0L || w <= 0.0L) continue;
      sum += w * f(t, omt);
    }
    value = h * sum;
    if (level > 3 && std::abs(value - prev) <= tol * std::max(1.0L, std::abs(value)))
      return value;
    prev = value;
  }
  return value;
}

/// Bisection solve of F(s) = target on [lo, hi] for increasing F.
inline double bisect_increasing(const std::function<double(double)>& func,
                                double target, double lo, double hi,
                                double tol = 1e-15) {
  for (int i = 0; i < 200 && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (func(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

inline double double_factorial(int n) {
  double v = 1.0;
  for (int i = n; i >= 2; i -= 2) v *= static_cast<double>(i);
  return v;
}

/// Brute-force Appell F1 double sum in long double.
inline long double f1_bruteforce(long double a, long double b1, long double b2,
                                 long double c, long double x, long double y,
                                 int terms) {
  long double total = 0.0L;
  for (int m = 0; m < terms; ++m) {
    for (int n = 0; n < terms; ++n) {
      long double t = 1.0L;
      for (int i = 0; i < m + n; ++i) t *= (a + i) / (c + i);
      for (int i = 0; i < m; ++i) t *= (b1 + i) * x / (i + 1.0L);
      for (int i = 0; i < n; ++i) t *= (b2 + i) * y / (i + 1.0L);
      total += t;
    }
  }
  return total;
}

/// ln Gamma via the Stirling series after shifting the argument above 20.
inline long double lgamma_stirling(long double s) {
  if (!(s > 0.0L)) throw std::domain_error("lgamma_stirling: s must be positive");
  long double shift = 0.0L;
  while (s < 20.0L) {
    shift -= std::log(s);
    s += 1.0L;
  }
  // Bernoulli terms B_{2n}/(2n(2n-1) s^{2n-1})
  static const long double coeff[] = {
      1.0L / 12.0L,       -1.0L / 360.0L,      1.0L / 1260.0L,
      -1.0L / 1680.0L,    1.0L / 1188.0L,      -691.0L / 360360.0L,
      1.0L / 156.0L,      -3617.0L / 122400.0L};
  const long double half_log_two_pi = 0.918938533204672741780329736406L;
  long double res = (s - 0.5L) * std::log(s) - s + half_log_two_pi;
  long double s_pow = s;
  const long double s2 = s * s;
  for (long double c : coeff) {
    res += c / s_pow;
    s_pow *= s2;
  }
  return res + shift;
}

}  // namespace oracle
