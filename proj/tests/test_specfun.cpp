// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "gelliptic/specfun.hpp"
#include "oracles.hpp"

using namespace gelliptic;

namespace {

// Deterministic pseudo-random draws for property checks.
struct Lcg {
  unsigned long long state = 0x243f6a8885a308d3ULL;
  double next(double lo, double hi) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    const double u = static_cast<double>((state >> 11) & ((1ULL << 53) - 1)) /
                     static_cast<double>(1ULL << 53);
    return lo + (hi - lo) * u;
  }
};

double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace

TEST_CASE("log_gamma matches frozen high-precision values") {
  CHECK(std::abs(log_gamma(1.0)) <= 1e-14);
  CHECK(std::abs(log_gamma(2.0)) <= 1e-14);
  CHECK(rel_err(log_gamma(0.5), 0.572364942924700087) <= 1e-13);
  CHECK(rel_err(log_gamma(7.3), 7.14789252302224903) <= 1e-13);
  CHECK(rel_err(log_gamma(1e-3), 6.90717888538385368) <= 1e-13);
  CHECK(rel_err(log_gamma(123.456), 469.605547129929469) <= 1e-13);
  CHECK(rel_err(log_gamma(1000.0), 5905.22042320918121) <= 1e-13);
}

TEST_CASE("log_gamma agrees with an independent Stirling oracle") {
  for (double s : {1.7e-3, 0.02, 0.37, 1.31, 2.5, 6.75, 19.25, 104.0, 871.3}) {
    const double want = static_cast<double>(oracle::lgamma_stirling(s));
    CHECK(std::abs(log_gamma(s) - want) <= 1e-13 * std::max(1.0, std::abs(want)));
  }
}

TEST_CASE("log_gamma recurrence and domain") {
  for (double s : {0.01, 0.4, 1.0, 2.7, 15.0, 300.0}) {
    const double lhs = log_gamma(s + 1.0) - log_gamma(s);
    CHECK(std::abs(lhs - std::log(s)) <= 1e-12 * std::max(1.0, std::abs(std::log(s))));
  }
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-2.5), std::domain_error);
}

TEST_CASE("beta basics") {
  CHECK(std::abs(beta(1.0, 1.0) - 1.0) <= 1e-14);
  CHECK(rel_err(beta(0.5, 0.5), 3.14159265358979324) <= 1e-13);
  CHECK(rel_err(beta(2.0 / 3.0, 0.5), 2.58710955922979053) <= 1e-12);
  CHECK(rel_err(beta(3.5, 2.25), 0.0477932568565435372) <= 1e-12);
  CHECK(beta(0.7, 1.9) == doctest::Approx(beta(1.9, 0.7)).epsilon(1e-14));
  CHECK_THROWS_AS(beta(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(beta(1.0, -1.0), std::domain_error);
}

TEST_CASE("beta against direct quadrature of the defining integral") {
  // B(2/3, 1/2) = int t^{-1/3} (1-t)^{-1/2} dt, long-double tanh-sinh.
  const long double want = oracle::tanh_sinh_ld([](long double t, long double omt) {
    return std::pow(t, -1.0L / 3.0L) * std::pow(omt, -0.5L);
  });
  CHECK(rel_err(beta(2.0 / 3.0, 0.5), static_cast<double>(want)) <= 1e-12);
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(3.7, 0) == 1.0);
  CHECK(pochhammer(1.0, 5) == 120.0);
  CHECK(pochhammer(0.5, 3) == 1.875);
  // (zeta)_{m+n} = (zeta)_m (zeta+m)_n, exact for integer inputs
  CHECK(pochhammer(4.0, 7) == pochhammer(4.0, 3) * pochhammer(7.0, 4));
  Lcg rng;
  for (int i = 0; i < 50; ++i) {
    const double z = rng.next(-3.0, 5.0);
    const unsigned m = static_cast<unsigned>(rng.next(0.0, 6.0));
    const unsigned n = static_cast<unsigned>(rng.next(0.0, 6.0));
    const double lhs = pochhammer(z, m + n);
    const double rhs = pochhammer(z, m) * pochhammer(z + m, n);
    CHECK(std::abs(lhs - rhs) <= 1e-14 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("gauss_2f1 values") {
  SeriesResult r = gauss_2f1(0.7, -1.3, 2.1, 0.0);
  CHECK(r.converged);
  CHECK(r.value == 1.0);

  // 2K(0.5)/pi and 2E(0.5)/pi from the AGM oracle
  const double two_k_over_pi = 2.0 * oracle::classical_K(0.5) / 3.14159265358979324;
  r = gauss_2f1(0.5, 0.5, 1.0, 0.25);
  CHECK(r.converged);
  CHECK(rel_err(r.value, two_k_over_pi) <= 1e-12);
  CHECK(rel_err(r.value, 1.07318200714936438) <= 1e-13);

  const double two_e_over_pi = 2.0 * oracle::classical_E(0.5) / 3.14159265358979324;
  r = gauss_2f1(0.5, -0.5, 1.0, 0.25);
  CHECK(r.converged);
  CHECK(rel_err(r.value, two_e_over_pi) <= 1e-12);
  CHECK(rel_err(r.value, 0.934215457667694116) <= 1e-13);

  r = gauss_2f1(0.3, 0.4, 1.1, 0.5);
  CHECK(rel_err(r.value, 1.07181209600731629) <= 1e-12);
}

TEST_CASE("gauss_2f1 symmetry in the first two parameters") {
  Lcg rng;
  for (int i = 0; i < 100; ++i) {
    const double a = rng.next(-2.0, 3.0);
    const double b = rng.next(-2.0, 3.0);
    const double c = rng.next(0.2, 4.0);
    const double x = rng.next(-0.9, 0.9);
    const double lhs = gauss_2f1(a, b, c, x).value;
    const double rhs = gauss_2f1(b, a, c, x).value;
    CHECK(std::abs(lhs - rhs) <= 1e-13 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("gauss_2f1 contiguous relation") {
  // F(a+1,b+1;c+1;x) = c/(a x) (F(a,b+1;c;x) - F(a,b;c;x))
  Lcg rng;
  for (int i = 0; i < 100; ++i) {
    const double a = rng.next(0.2, 2.0);
    const double b = rng.next(-1.5, 2.0);
    const double c = rng.next(0.5, 3.0);
    const double x = rng.next(0.05, 0.8);
    const double lhs = gauss_2f1(a + 1.0, b + 1.0, c + 1.0, x).value;
    const double rhs =
        c / (a * x) * (gauss_2f1(a, b + 1.0, c, x).value - gauss_2f1(a, b, c, x).value);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("gauss_2f1 edge behaviour") {
  CHECK_THROWS_AS(gauss_2f1(0.5, 0.5, 0.0, 0.3), std::domain_error);
  CHECK_THROWS_AS(gauss_2f1(0.5, 0.5, -2.0, 0.3), std::domain_error);
  CHECK_THROWS_AS(gauss_2f1(0.5, 0.5, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(gauss_2f1(0.5, 0.5, 1.0, -1.2), std::domain_error);
  // refusal near the boundary: not converged, no silent value
  const SeriesResult r = gauss_2f1(0.5, 0.5, 1.0, 0.995);
  CHECK(!r.converged);
  // c = -1.5 is not an integer, so it is admissible
  CHECK(gauss_2f1(0.5, 0.5, -1.5, 0.1).converged);
}

TEST_CASE("gauss_2f1 honest convergence metadata") {
  const SeriesResult r = gauss_2f1(0.25, 0.75, 1.5, 0.6, 1e-12);
  CHECK(r.converged);
  CHECK(r.est_error <= 1e-12 * std::max(1.0, std::abs(r.value)));
  CHECK(r.terms_used <= 1'000'000);
  // terminating series: b a non-positive integer
  const SeriesResult t = gauss_2f1(0.5, -3.0, 1.2, 0.7);
  CHECK(t.converged);
  const double direct = 1.0 + (-3.0 * 0.5 / 1.2) * 0.7 +
                        (0.5 * 1.5) * (-3.0 * -2.0) / (1.2 * 2.2 * 2.0) * 0.49 +
                        (0.5 * 1.5 * 2.5) * (-3.0 * -2.0 * -1.0) /
                            (1.2 * 2.2 * 3.2 * 6.0) * 0.343;
  CHECK(std::abs(t.value - direct) <= 1e-13 * std::max(1.0, std::abs(direct)));
}

TEST_CASE("appell_f1 values") {
  CHECK(appell_f1(0.7, 0.3, 0.9, 1.4, 0.0, 0.0).value == 1.0);

  // b2 = 0 kills every n >= 1 column
  const double lhs = appell_f1(0.3, 0.4, 0.0, 1.1, 0.5, 0.7).value;
  CHECK(rel_err(lhs, gauss_2f1(0.3, 0.4, 1.1, 0.5).value) <= 1e-13);

  const double brute = static_cast<double>(
      oracle::f1_bruteforce(0.25L, 0.5L, 0.5L, 1.25L, 0.36L, 0.09L, 220));
  const SeriesResult r = appell_f1(0.25, 0.5, 0.5, 1.25, 0.36, 0.09);
  CHECK(r.converged);
  CHECK(rel_err(r.value, brute) <= 1e-11);
  CHECK(rel_err(r.value, 1.05342382534482142) <= 1e-11);

  const double brute2 = static_cast<double>(
      oracle::f1_bruteforce(0.7L, -0.3L, 0.45L, 1.6L, 0.55L, 0.275L, 260));
  CHECK(rel_err(appell_f1(0.7, -0.3, 0.45, 1.6, 0.55, 0.275).value, brute2) <= 1e-11);
  CHECK(rel_err(appell_f1(0.7, -0.3, 0.45, 1.6, 0.55, 0.275).value,
                0.969984962706425713) <= 1e-11);
}

TEST_CASE("appell_f1 reduces to gauss_2f1 at y = 0") {
  Lcg rng;
  const double tol = 1e-12;
  for (int i = 0; i < 100; ++i) {
    const double a = rng.next(0.1, 2.0);
    const double b1 = rng.next(-1.0, 2.0);
    const double b2 = rng.next(-1.0, 2.0);
    const double c = rng.next(0.5, 3.0);
    const double x = rng.next(-0.85, 0.85);
    const double lhs = appell_f1(a, b1, b2, c, x, 0.0, tol).value;
    const double rhs = gauss_2f1(a, b1, c, x, tol).value;
    CHECK(std::abs(lhs - rhs) <= 2.0 * tol * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("appell_f1 edge behaviour") {
  CHECK_THROWS_AS(appell_f1(0.5, 0.5, 0.5, -1.0, 0.1, 0.1), std::domain_error);
  CHECK_THROWS_AS(appell_f1(0.5, 0.5, 0.5, 1.0, 1.0, 0.1), std::domain_error);
  CHECK(!appell_f1(0.5, 0.5, 0.5, 1.0, 0.995, 0.1).converged);
}
