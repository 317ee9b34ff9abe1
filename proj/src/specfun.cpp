// SPDX-License-Identifier: Apache-2.0

#include "gelliptic/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace gelliptic {

namespace {

constexpr std::size_t kMaxSeriesTerms = 1'000'000;
constexpr double kSeriesRefusalX = 0.99;

bool is_nonpositive_integer(double c) {
  return c <= 0.0 && c == std::floor(c);
}

SeriesResult refused_series() {
  SeriesResult r;
  r.value = std::numeric_limits<double>::quiet_NaN();
  r.converged = false;
  r.est_error = std::numeric_limits<double>::infinity();
  return r;
}

}  // namespace

double log_gamma(double s) {
  if (!(s > 0.0)) throw std::domain_error("log_gamma: argument must be positive");
  // Lanczos coefficients for g = 607/128 (Godfrey's 15-term set).
  static constexpr double g = 4.7421875;
  static constexpr std::array<double, 15> c = {
      0.99999999999999709182,     57.156235665862923517,
      -59.597960355475491248,     14.136097974741747174,
      -0.49191381609762019978,    0.33994649984811888699e-4,
      0.46523628927048575665e-4,  -0.98374475304879564677e-4,
      0.15808870322491248884e-3,  -0.21026444172410488319e-3,
      0.21743961811521264320e-3,  -0.16431810653676389022e-3,
      0.84418223983852743293e-4,  -0.26190838401581408670e-4,
      0.36899182659531622704e-5};
  double acc = c[0];
  for (std::size_t i = 1; i < c.size(); ++i) acc += c[i] / (s - 1.0 + static_cast<double>(i));
  const double base = s + g - 0.5;
  constexpr double half_log_two_pi = 0.91893853320467274178;
  return half_log_two_pi + (s - 0.5) * std::log(base) - base + std::log(acc);
}

double beta(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0))
    throw std::domain_error("beta: arguments must be positive");
  return std::exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y));
}

double pochhammer(double zeta, unsigned n) {
  double prod = 1.0;
  for (unsigned i = 0; i < n; ++i) prod *= zeta + static_cast<double>(i);
  return prod;
}

SeriesResult gauss_2f1(double a, double b, double c, double x, double tol) {
  if (is_nonpositive_integer(c))
    throw std::domain_error("gauss_2f1: c must not be a non-positive integer");
  if (!(std::abs(x) < 1.0))
    throw std::domain_error("gauss_2f1: |x| must be less than 1");
  if (x > kSeriesRefusalX) return refused_series();

  SeriesResult res;
  double sum = 1.0;
  double term = 1.0;
  int small_run = 0;
  for (std::size_t n = 0; n < kMaxSeriesTerms; ++n) {
    const double dn = static_cast<double>(n);
    term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * x;
    sum += term;
    res.terms_used = n + 2;
    if (std::abs(term) < tol * std::abs(sum)) {
      if (++small_run >= 3) {
        res.value = sum;
        res.converged = true;
        res.est_error = std::abs(term);
        return res;
      }
    } else {
      small_run = 0;
    }
  }
  res.value = sum;
  res.converged = false;
  res.est_error = std::abs(term);
  return res;
}

SeriesResult appell_f1(double a, double b1, double b2, double c, double x,
                       double y, double tol) {
  if (is_nonpositive_integer(c))
    throw std::domain_error("appell_f1: c must not be a non-positive integer");
  if (!(std::abs(x) < 1.0 && std::abs(y) < 1.0))
    throw std::domain_error("appell_f1: |x| and |y| must be less than 1");
  if (x > kSeriesRefusalX || y > kSeriesRefusalX) return refused_series();

  SeriesResult res;
  // bx[m] = (b1)_m x^m / m!, by[n] = (b2)_n y^n / n!; the common factor
  // (a)_{m+n}/(c)_{m+n} depends only on the diagonal index.
  std::vector<double> bx{1.0}, by{1.0};
  double head_ratio = 1.0;  // (a)_s / (c)_s
  double sum = 0.0;
  int small_run = 0;
  std::size_t terms = 0;
  for (std::size_t s = 0; terms < kMaxSeriesTerms; ++s) {
    if (s > 0) {
      const double ds = static_cast<double>(s);
      bx.push_back(bx[s - 1] * (b1 + ds - 1.0) * x / ds);
      by.push_back(by[s - 1] * (b2 + ds - 1.0) * y / ds);
      head_ratio *= (a + ds - 1.0) / (c + ds - 1.0);
    }
    double diag = 0.0;
    for (std::size_t m = 0; m <= s; ++m) diag += bx[m] * by[s - m];
    diag *= head_ratio;
    sum += diag;
    terms += s + 1;
    res.terms_used = terms;
    if (std::abs(diag) < tol * std::abs(sum)) {
      if (++small_run >= 3) {
        res.value = sum;
        res.converged = true;
        res.est_error = std::abs(diag);
        return res;
      }
    } else {
      small_run = 0;
    }
    res.est_error = std::abs(diag);
  }
  res.value = sum;
  res.converged = false;
  return res;
}

}  // namespace gelliptic
