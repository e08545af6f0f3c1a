#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "pdem/bgcs.hpp"
#include "pdem/specfun.hpp"
#include "pdem/stats.hpp"

using namespace pdem;
using stats::Complex;

TEST_CASE("vacuum distribution") {
  const auto st = bgcs::make_state(Complex{0.0, 0.0}, 0.9, 50);
  const auto p = stats::distribution(st);
  CHECK(p[0] == doctest::Approx(1.0).epsilon(1e-14));
  for (std::size_t n = 1; n < p.size(); ++n) CHECK(p[n] == 0.0);
  const auto m = stats::moments(Complex{0.0, 0.0}, 0.9);
  CHECK(m.mean == 0.0);
  CHECK(m.variance == 0.0);
}

TEST_CASE("distribution is a probability distribution") {
  for (double lp : {-0.5, 0.39, 0.9, 1.5, 2.6}) {
    const auto st = bgcs::make_state_auto(Complex{2.0, 0.0}, lp);
    const auto p = stats::distribution(st);
    double sum = 0.0;
    for (double v : p) {
      CHECK(v >= 0.0);
      sum += v;
    }
    CHECK(std::abs(sum - 1.0) <= 1e-12);
  }
}

TEST_CASE("closed-form moments agree with direct sums") {
  for (double lp : {-0.5, 0.39, 0.9, 1.5, 2.6}) {
    for (double az : {0.25, 1.0, 2.0, 5.0}) {
      const auto m = stats::moments(Complex{az, 0.0}, lp);
      REQUIRE(m.closed_available);
      CHECK(m.cross_check_err <= 1e-9);
      CHECK(std::abs(m.mean - m.mean_closed) <= 1e-9 * m.mean);
      CHECK(std::abs(m.second_moment - m.second_moment_closed) <=
            1e-9 * m.second_moment);
      CHECK(std::abs(m.variance - m.variance_closed) <=
            1e-9 * std::abs(m.variance));
      // Definitional identity of the variance.
      CHECK(std::abs(m.variance - (m.second_moment - m.mean * m.mean)) <=
            1e-12 * std::max(1.0, m.second_moment));
    }
  }
}

TEST_CASE("harmonic-branch mean matches the Bessel identity") {
  // mean = |z| I1(2|z|)/I0(2|z|) in the lambda' = 0 branch.
  for (double az : {0.5, 1.0, 2.0}) {
    const auto m = stats::moments(Complex{az, 0.0}, 0.0);
    CHECK(!m.closed_available);
    const double want = az * specfun::bessel_i(1, 2.0 * az) /
                        specfun::bessel_i(0, 2.0 * az);
    CHECK(m.mean == doctest::Approx(want).epsilon(1e-10));
  }
}

TEST_CASE("closed forms are flagged off near the prefactor pole") {
  // lambda' exactly 1/2 makes the state itself singular; just beside it the
  // direct route works and the pole-ridden closed forms are skipped.
  CHECK_THROWS_AS(stats::moments(Complex{1.0, 0.0}, 0.5), ParamSingular);
  const auto m = stats::moments(Complex{1.0, 0.0}, 0.5 + 1e-8);
  CHECK(!m.closed_available);
  CHECK(m.mean > 0.0);
}

TEST_CASE("Mandel Q and g2 definitions and error paths") {
  CHECK_THROWS_AS(stats::mandel_q(Complex{0.0, 0.0}, 0.9), VacuumUndefined);
  CHECK_THROWS_AS(stats::g2(Complex{0.0, 0.0}, 0.9), VacuumUndefined);

  const Complex z{1.0, 0.0};
  const auto m = stats::moments(z, 0.9);
  const double q = stats::mandel_q(z, 0.9);
  CHECK(q == doctest::Approx((m.variance - m.mean) / m.mean).epsilon(1e-9));
  const double g = stats::g2(z, 0.9);
  CHECK(g ==
        doctest::Approx((m.second_moment - m.mean) / (m.mean * m.mean))
            .epsilon(1e-9));
  CHECK(std::abs(g - (q / m.mean + 1.0)) <= 1e-10);
}

TEST_CASE("sub-Poissonian signs across the figure grid") {
  for (double lp : {0.39, 0.9, 1.5, 2.6}) {
    for (int j = 1; j <= 10; ++j) {
      const Complex z{0.5 * j, 0.0};
      const auto s = stats::summarize(z, lp);
      CHECK(s.mandel_q < 0.0);
      CHECK(s.g2 < 1.0);
      CHECK(s.variance / s.mean < 1.0);  // Fano factor
      CHECK(s.cross_check_err <= 1e-9);
    }
  }
}

TEST_CASE("summary closed-form Q and g2 agree with the direct route") {
  const auto s = stats::summarize(Complex{1.0, 0.0}, 1.5);
  REQUIRE(s.closed_available);
  CHECK(std::abs(s.mandel_q - s.mandel_q_closed) <=
        1e-9 * std::abs(s.mandel_q));
  CHECK(std::abs(s.g2 - s.g2_closed) <= 1e-9 * std::abs(s.g2));
}

TEST_CASE("small-|z| limit of g2") {
  // (1 - 2l')^2 / (2 (1 - 3l')^2); equals 1/2 at l' = 0.
  CHECK(stats::g2_small_z_limit(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  for (double lp : {0.39, 0.9, 1.5, 2.6}) {
    const double limit = stats::g2_small_z_limit(lp);
    // Richardson extrapolation in xi = |z|^2 removes the O(xi) transient.
    const double ga = stats::g2(Complex{1e-3, 0.0}, lp);
    const double gb = stats::g2(Complex{0.5e-3, 0.0}, lp);
    const double extrap = (4.0 * gb - ga) / 3.0;
    CHECK(std::abs(extrap - limit) <= 1e-6);
    // The raw value at |z| = 1e-3 is already close.
    CHECK(std::abs(ga - limit) <= 1e-4);
  }
}

TEST_CASE("harmonic-limit continuity of the mean") {
  for (double zr : {1.0, 3.0}) {
    const auto tiny = stats::moments(Complex{zr, 0.0}, 1e-4);
    const auto zero = stats::moments(Complex{zr, 0.0}, 0.0);
    CHECK(std::abs(tiny.mean - zero.mean) <= 1e-3 * zero.mean);
  }
}

TEST_CASE("Poisson reference") {
  const auto p = stats::poisson_reference(1.0, 60);
  CHECK(p[0] == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  double sum = 0.0, mean = 0.0, second = 0.0;
  const auto q = stats::poisson_reference(4.0, 200);
  for (std::size_t n = 0; n < q.size(); ++n) {
    sum += q[n];
    mean += n * q[n];
    second += static_cast<double>(n) * n * q[n];
  }
  CHECK(std::abs(sum - 1.0) <= 1e-12);
  CHECK(mean == doctest::Approx(4.0).epsilon(1e-12));
  CHECK((second - mean * mean) / mean == doctest::Approx(1.0).epsilon(1e-10));
  CHECK_THROWS_AS(stats::poisson_reference(0.0, 10), ConfigError);
}

TEST_CASE("narrower than Poisson at matched mean") {
  const auto s = stats::summarize(Complex{2.0, 0.0}, 0.39);
  const auto pois = stats::poisson_reference(s.mean, 200);
  double pvar = 0.0, pmean = 0.0;
  for (std::size_t n = 0; n < pois.size(); ++n) pmean += n * pois[n];
  for (std::size_t n = 0; n < pois.size(); ++n)
    pvar += (n - pmean) * (n - pmean) * pois[n];
  CHECK(s.variance / pvar < 1.0);
}
