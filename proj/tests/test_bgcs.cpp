#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "pdem/algebra.hpp"
#include "pdem/bgcs.hpp"
#include "pdem/specfun.hpp"

using namespace pdem;
using bgcs::Complex;
using bgcs::make_state;
using bgcs::make_state_auto;

TEST_CASE("vacuum state at z = 0") {
  for (double lp : {0.0, 0.9, -0.5}) {
    const auto st = make_state(Complex{0.0, 0.0}, lp, 50);
    CHECK(st.norm_factor == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(st.coeffs[0].real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(st.coeffs[0].imag() == 0.0);
    for (int n = 1; n < 50; ++n) CHECK(std::abs(st.coeffs[n]) == 0.0);
  }
}

TEST_CASE("normalization duality against the closed 0F3 form") {
  const auto st = make_state(Complex{1.0, 0.0}, 0.9, 200);
  double sum = 0.0;
  for (const auto& c : st.coeffs) sum += std::norm(c);
  CHECK(std::abs(sum - 1.0) <= 1e-12);
  const double a = 2.0 - 1.0 / 0.9;
  const double want = specfun::hyper0f3(1.0, a, a, 1.0 / 0.81).value;
  CHECK(st.norm_factor == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("harmonic-limit branch normalizes with I0") {
  const auto st = make_state(Complex{2.0, 0.0}, 0.0, 200);
  CHECK(st.norm_factor ==
        doctest::Approx(specfun::bessel_i(0, 4.0)).epsilon(1e-13));
  // c_n proportional to z^n/n!.
  const double ratio10 = std::abs(st.coeffs[1] / st.coeffs[0]);
  const double ratio21 = std::abs(st.coeffs[2] / st.coeffs[1]);
  CHECK(ratio10 == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(ratio21 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("coefficients satisfy the three-term recursion") {
  for (double lp : {-0.5, 0.9, 1.5, 2.6}) {
    for (Complex z : {Complex{0.25, 0.0}, Complex{0.0, 2.0}, Complex{3.0, 1.0}}) {
      const auto st = make_state(z, lp, 120);
      CHECK(st.coeffs[0].real() > 0.0);
      CHECK(st.coeffs[0].imag() == 0.0);
      for (int n = 1; n < 40; ++n) {
        const Complex lhs =
            st.coeffs[n] * (n * (1.0 - lp * (n + 1.0)));
        const Complex rhs = z * st.coeffs[n - 1];
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
      }
    }
  }
}

TEST_CASE("singular parameters are rejected") {
  CHECK_THROWS_AS(make_state(Complex{1.0, 0.0}, 0.5, 100), ParamSingular);
  CHECK_THROWS_AS(make_state(Complex{1.0, 0.0}, 1.0 / 3.0, 100),
                  ParamSingular);
  CHECK_THROWS_AS(bgcs::check_not_singular(0.25), ParamSingular);
  CHECK_NOTHROW(bgcs::check_not_singular(0.9));
  CHECK_NOTHROW(bgcs::check_not_singular(-0.5));
  // 1/k only becomes singular once the truncation reaches index k-1.
  CHECK_NOTHROW(make_state(Complex{1.0, 0.0}, 1e-4, 100));
}

TEST_CASE("truncation too small is reported, auto growth fixes it") {
  CHECK_THROWS_AS(make_state(Complex{5.0, 0.0}, 0.9, 3),
                  TruncationTooSmall);
  const auto st = make_state_auto(Complex{5.0, 0.0}, 0.9);
  CHECK(st.tail_bound <= 1e-12);
  double sum = 0.0;
  for (const auto& c : st.coeffs) sum += std::norm(c);
  CHECK(std::abs(sum - 1.0) <= 1e-10);
}

TEST_CASE("eigenvalue residual of the lowering generator") {
  for (double lp : {-0.5, 0.9, 1.5, 2.6}) {
    for (Complex z : {Complex{0.25, 0.0}, Complex{1.0, 0.0}, Complex{0.0, 2.0},
                      Complex{3.0, 1.0}}) {
      const auto st = make_state_auto(z, lp);
      const auto real =
          algebra::build_realization(lp, st.truncation, algebra::Mode::formal);
      CHECK(bgcs::eigen_residual(st, real) <= 1e-10);
    }
  }
  // z = 0: the vacuum is annihilated exactly.
  const auto vac = make_state(Complex{0.0, 0.0}, 0.9, 50);
  const auto real = algebra::build_realization(0.9, 50, algebra::Mode::formal);
  CHECK(bgcs::eigen_residual(vac, real) == 0.0);
}

TEST_CASE("eigen_residual dimension check") {
  const auto st = make_state(Complex{1.0, 0.0}, 0.9, 100);
  const auto real = algebra::build_realization(0.9, 50, algebra::Mode::formal);
  CHECK_THROWS_AS(bgcs::eigen_residual(st, real), DimensionMismatch);
}

TEST_CASE("overlap kernel") {
  CHECK(std::abs(bgcs::overlap(Complex{1.5, 0.5}, Complex{1.5, 0.5}, 0.9) -
                 1.0) <= 1e-12);
  // Vacuum projection leaves only the n = 0 term.
  const auto st = make_state_auto(Complex{2.0, 0.0}, 1.5);
  const Complex vs = bgcs::overlap(Complex{2.0, 0.0}, Complex{0.0, 0.0}, 1.5);
  CHECK(vs.real() ==
        doctest::Approx(1.0 / std::sqrt(st.norm_factor)).epsilon(1e-12));

  // Direct coefficient-sum oracle.
  const Complex z{1.0, 0.0};
  const Complex zp{1.0, 0.5};
  const auto s1 = make_state_auto(z, 0.9);
  const auto s2 = make_state_auto(zp, 0.9);
  Complex direct{0.0, 0.0};
  const int n = std::min(s1.truncation, s2.truncation);
  for (int i = 0; i < n; ++i)
    direct += std::conj(s1.coeffs[i]) * s2.coeffs[i];
  const Complex got = bgcs::overlap(z, zp, 0.9);
  CHECK(std::abs(got - direct) <= 1e-10);

  // Distinct labels are never orthogonal.
  for (double lp : {-0.5, 0.9, 1.5}) {
    CHECK(std::abs(bgcs::overlap(Complex{0.3, 0.0}, Complex{2.0, 1.0}, lp)) >
          0.0);
  }
}

TEST_CASE("label continuity") {
  CHECK(bgcs::continuity_gap(Complex{1.0, 0.0}, Complex{1.0, 0.0}, 1.5) <=
        1e-12);
  const double g1 =
      bgcs::continuity_gap(Complex{1.0, 0.0}, Complex{1.0 + 1e-4, 0.0}, 1.5);
  const double g2 =
      bgcs::continuity_gap(Complex{1.0, 0.0}, Complex{1.0 + 1e-5, 0.0}, 1.5);
  CHECK(g1 <= 1e-3);
  CHECK(g1 > 0.0);
  // The gap is quadratic near coincidence, so a 10x smaller label step
  // shrinks it by at least 10x (in fact ~100x).
  CHECK(g1 / g2 >= 10.0);

  // Harmonic branch gap matches the limit-form inner product.
  const double gh = bgcs::continuity_gap(Complex{1.0, 0.0},
                                         Complex{1.01, 0.0}, 0.0);
  const auto a = make_state_auto(Complex{1.0, 0.0}, 0.0);
  const auto b = make_state_auto(Complex{1.01, 0.0}, 0.0);
  double inner = 0.0;
  const int n = std::min(a.truncation, b.truncation);
  for (int i = 0; i < n; ++i)
    inner += (std::conj(a.coeffs[i]) * b.coeffs[i]).real();
  CHECK(gh == doctest::Approx(2.0 * (1.0 - inner)).epsilon(1e-8));
}

TEST_CASE("coefficient magnitudes certify an infinite convergence radius") {
  const auto st = make_state(Complex{3.0, 0.0}, 1.5, 150);
  // |c_{n+1}/c_n| ~ |z| / (lambda' n^2) -> 0.
  const double r20 = std::abs(st.coeffs[21] / st.coeffs[20]);
  const double r40 = std::abs(st.coeffs[41] / st.coeffs[40]);
  const double r80 = std::abs(st.coeffs[81] / st.coeffs[80]);
  CHECK(r40 < r20);
  CHECK(r80 < r40);
  CHECK(r80 <= 4.0 * (r40 / 4.0));  // at least quadratic decay in n
}

TEST_CASE("weight density parameter block and positivity") {
  const auto wd = bgcs::WeightDensity::make(1.5);
  CHECK(wd.meijer_b[0] == 0.0);
  CHECK(wd.meijer_b[1] == 0.0);
  CHECK(wd.meijer_b[2] == doctest::Approx(1.0 - 1.0 / 1.5).epsilon(1e-15));
  CHECK(wd.meijer_b[3] == wd.meijer_b[2]);
  CHECK(wd.scale == doctest::Approx(1.0 / 2.25).epsilon(1e-15));
  const double g = specfun::gamma(2.0 - 1.0 / 1.5);
  CHECK(wd.prefactor ==
        doctest::Approx(1.0 / (M_PI * 1.5 * 1.5 * g * g)).epsilon(1e-13));

  for (double xi : {0.1, 1.0, 5.0, 20.0}) {
    const auto wv = bgcs::weight_density(wd, xi);
    CHECK(wv.w_tilde >= 0.0);
    CHECK(wv.w >= 0.0);
    // w = w_tilde * N(xi) / pi by definition.
    const double a = 2.0 - 1.0 / 1.5;
    const double nxi = specfun::hyper0f3(1.0, a, a, xi / 2.25).value;
    CHECK(wv.w == doctest::Approx(wv.w_tilde * nxi / M_PI).epsilon(1e-12));
  }
  CHECK_THROWS_AS(bgcs::weight_density(wd, 0.0), ConfigError);
  CHECK_THROWS_AS(bgcs::WeightDensity::make(0.0), ParamSingular);
  CHECK_THROWS_AS(bgcs::WeightDensity::make(0.5), ParamSingular);
}

TEST_CASE("resolution-of-unity moments") {
  // n = 0: every Gamma factor cancels and the weight integrates to 1.
  const auto m0 = bgcs::moment_check(2.6, 0);
  CHECK(m0.rhs == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(m0.rel_err <= 1e-6);

  // lambda' = 1.5, n = 1 against the explicit Gamma-product value.
  const auto m1 = bgcs::moment_check(1.5, 1);
  const double g73 = specfun::gamma(7.0 / 3.0);
  const double g43 = specfun::gamma(4.0 / 3.0);
  CHECK(m1.rhs ==
        doctest::Approx(g73 * g73 * 2.25 / (g43 * g43)).epsilon(1e-12));
  CHECK(m1.rel_err <= 1e-6);

  CHECK(bgcs::moment_check(2.6, 2).rel_err <= 1e-5);
  CHECK_THROWS_AS(bgcs::moment_check(1.5, 7), ConfigError);
  CHECK_THROWS_AS(bgcs::moment_check(0.0, 1), ParamSingular);
}

TEST_CASE("harmonic-limit coherence of coefficients") {
  // Unit-norm coefficients at lambda' = 1e-4 track the analytic
  // lambda' = 0 branch closely for low n.
  for (double zr : {1.0, 3.0}) {
    const auto tiny = make_state_auto(Complex{zr, 0.0}, 1e-4);
    const auto zero = make_state_auto(Complex{zr, 0.0}, 0.0);
    for (int n = 0; n <= 20; ++n) {
      CHECK(std::abs(tiny.coeffs[n] - zero.coeffs[n]) <= 1e-3);
    }
  }
}
