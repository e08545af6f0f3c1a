#include <cmath>
#include <vector>

#include "doctest.h"
#include "pdem/algebra.hpp"

using namespace pdem;
using algebra::build_realization;
using algebra::Mode;

TEST_CASE("harmonic limit realization") {
  const auto real = build_realization(0.0, 5, Mode::formal);
  // L- subdiagonal is (1, sqrt2, sqrt3, 2); band[n] multiplies e_n and
  // band[0] is the vacuum's zero entry.
  const auto lower = real.lower();
  REQUIRE(lower.band.size() == 5);
  CHECK(lower.band[0] == 0.0);
  CHECK(lower.band[1] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(lower.band[2] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(lower.band[3] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  CHECK(lower.band[4] == doctest::Approx(2.0).epsilon(1e-15));
  for (int n = 0; n < 5; ++n) {
    CHECK(real.l_sq[n] == doctest::Approx(n).epsilon(1e-15));
    CHECK(real.energy[n] == doctest::Approx(n + 0.5).epsilon(1e-15));
  }
  CHECK(real.n_max_physical == -1);  // unbounded
}

TEST_CASE("ladder coefficient sequence and physical ceiling") {
  const auto real = build_realization(0.39, 8, Mode::formal);
  CHECK(real.l_sq[0] == 0.0);
  CHECK(real.l_sq[1] == doctest::Approx(1.0 - 0.39 * 2.0).epsilon(1e-15));
  CHECK(real.l_sq[2] == doctest::Approx(2.0 - 0.39 * 6.0).epsilon(1e-15));
  CHECK(real.l_sq[2] < 0.0);
  CHECK(real.n_max_physical == 1);

  const auto neg = build_realization(-0.5, 8, Mode::formal);
  for (int n = 0; n < 8; ++n) {
    CHECK(neg.l_sq[n] ==
          doctest::Approx(n + 0.5 * n * (n + 1.0)).epsilon(1e-15));
    CHECK(neg.l_sq[n] >= 0.0);
  }
  CHECK(neg.n_max_physical == -1);
}

TEST_CASE("physical mode clamps the dimension") {
  const auto real = build_realization(0.39, 20, Mode::physical);
  CHECK(real.dim == 2);  // n_max_physical = 1
  const auto neg = build_realization(-0.5, 20, Mode::physical);
  CHECK(neg.dim == 20);
}

TEST_CASE("formal-mode square roots of negative coefficients throw") {
  const auto real = build_realization(0.39, 8, Mode::formal);
  CHECK_THROWS_AS(real.lower(), NegativeCoefficient);
  CHECK_THROWS_AS(real.raise(), NegativeCoefficient);
  // K operators need no square roots and stay defined.
  CHECK_NOTHROW(real.k_lower());
  CHECK_NOTHROW(real.k_raise());
  CHECK_NOTHROW(real.k0());
}

TEST_CASE("shape-invariance sequences") {
  const double lp = 0.15;
  const double lt = 2.0 * lp;
  const auto real = build_realization(lp, 10, Mode::formal);
  for (int n = 1; n < 10; ++n) {
    CHECK(real.alpha_seq[n] ==
          doctest::Approx(1.0 - (n - 1) * lt).epsilon(1e-14));
    CHECK(real.r_seq[n] == doctest::Approx(1.0 - n * lt).epsilon(1e-14));
    CHECK(real.r_seq[n] ==
          doctest::Approx(real.alpha_seq[n] - lt).epsilon(1e-14));
  }
}

TEST_CASE("generalized factorial equals the product of partial R-sums") {
  // [n]! = prod_{k<=n} l_sq[k] where l_sq[k] = sum_{j<=k} R(alpha_j).
  for (double lp : {-0.5, 0.1, 0.39, 1.5}) {
    const auto real = build_realization(lp, 12, Mode::formal);
    double prod = 1.0;
    for (int k = 1; k < 12; ++k) {
      double partial = 0.0;
      for (int j = 1; j <= k; ++j) partial += real.r_seq[j];
      CHECK(partial == doctest::Approx(real.l_sq[k]).epsilon(1e-12));
      prod *= partial;
      CHECK(real.gen_factorial[k] == doctest::Approx(prod).epsilon(1e-12));
    }
    CHECK(real.gen_factorial[0] == 1.0);
  }
  // Harmonic limit: [n]! = n!.
  const auto h = build_realization(0.0, 8, Mode::formal);
  double fact = 1.0;
  for (int n = 1; n < 8; ++n) {
    fact *= n;
    CHECK(h.gen_factorial[n] == doctest::Approx(fact).epsilon(1e-15));
  }
}

TEST_CASE("band operator application") {
  const auto real = build_realization(-0.5, 6, Mode::formal);
  std::vector<double> e2(6, 0.0);
  e2[2] = 1.0;
  const auto k_minus = real.k_lower().apply(e2);
  for (int i = 0; i < 6; ++i) {
    CHECK(k_minus[i] == (i == 1 ? real.l_sq[2] : 0.0));
  }
  const auto k_plus = real.k_raise().apply(e2);
  for (int i = 0; i < 6; ++i) {
    CHECK(k_plus[i] == (i == 3 ? real.l_sq[3] : 0.0));
  }
  const auto k0 = real.k0().apply(e2);
  CHECK(k0[2] == doctest::Approx(0.5 + real.l_sq[2]).epsilon(1e-15));
}

TEST_CASE("algebra report: harmonic limit closes exactly") {
  const auto real = build_realization(0.0, 30, Mode::formal);
  const auto report = algebra::check_algebra(real);
  CHECK(report.max_ll_vs_scalar_one <= 1e-12);
  CHECK(report.max_ll_vs_rhat <= 1e-12);
  CHECK(report.max_kk_closure <= 1e-12);
  CHECK(report.max_casimir_dev <= 1e-12);
}

TEST_CASE("Casimir diagonal is exactly 1/4 for every lambda'") {
  for (double lp : {-0.5, 0.39, 0.9, 1.5, 2.6}) {
    const auto real = build_realization(lp, 40, Mode::formal);
    const auto report = algebra::check_algebra(real);
    CHECK(report.max_casimir_dev <= 1e-12);
    for (double c : report.casimir_diag) {
      CHECK(c == doctest::Approx(0.25).epsilon(1e-12));
    }
  }
}

TEST_CASE("documented su(1,1) closure deviation at lambda'=0.1, n=0") {
  const auto real = build_realization(0.1, 10, Mode::formal);
  const auto report = algebra::check_algebra(real);
  // [K-,K+] entry (1-0.2)^2 = 0.64 against 2K0 entry 1: residual 0.36.
  CHECK(std::abs(report.kk_closure_residual[0] - 0.36) <= 1e-12);
}

TEST_CASE("ladder commutator matches the operator-valued R-hat") {
  for (double lp : {-0.5, 0.2}) {
    const auto real = build_realization(lp, 25, Mode::formal);
    const auto report = algebra::check_algebra(real);
    CHECK(report.max_ll_vs_rhat <= 1e-12);
    const double lt = 2.0 * lp;
    for (std::size_t n = 0; n < report.rhat_diag.size(); ++n) {
      CHECK(report.rhat_diag[n] ==
            doctest::Approx(1.0 - lt * (n + 1.0)).epsilon(1e-13));
    }
    // The realization yields [L-, R-hat] = -lt L-; the opposite sign fails.
    CHECK(report.max_lr_minus_sign <= 1e-12);
    if (lp != 0.0) CHECK(report.max_lr_plus_sign > 1e-3);
  }
}

TEST_CASE("eigenstate construction by repeated raising") {
  for (double lp : {0.0, -0.5}) {
    const auto real = build_realization(lp, 12, Mode::formal);
    for (int n : {0, 2, 5}) {
      const auto built = algebra::build_eigenstate(real, n);
      CHECK(built.deviation_from_basis <= 1e-12);
      CHECK(built.vec[n] == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  // Positive lambda': stay within the physical ladder (l_sq[6] < 0 at 0.15).
  const auto real = build_realization(0.15, 6, Mode::formal);
  for (int n : {0, 2, 5}) {
    const auto built = algebra::build_eigenstate(real, n);
    CHECK(built.deviation_from_basis <= 1e-12);
  }
}

TEST_CASE("parameter shift recursion") {
  CHECK(algebra::shift_params(1.0, 0.0) == 1.0);
  CHECK(algebra::shift_params(algebra::shift_params(1.0, 0.78), 0.78) ==
        doctest::Approx(-0.56).epsilon(1e-15));
  double a = 1.0;
  const double lt = 0.3;
  for (int n = 2; n <= 7; ++n) {
    a = algebra::shift_params(a, lt);
    CHECK(a == doctest::Approx(1.0 - (n - 1) * lt).epsilon(1e-13));
  }
}

TEST_CASE("representation labels") {
  const double lp = 0.2;
  const auto real = build_realization(lp, 10, Mode::formal);
  CHECK(algebra::FockRealization::rep_j == -0.5);
  for (int n = 0; n < 10; ++n) {
    CHECK(real.rep_m[n] ==
          doctest::Approx(n + 0.5 - lp * n * (n + 1.0)).epsilon(1e-13));
  }
  for (int n = 0; n < 9; ++n) {
    CHECK(real.rep_m[n + 1] - real.rep_m[n] ==
          doctest::Approx(1.0 - 2.0 * lp * (n + 1.0)).epsilon(1e-12));
  }
}

TEST_CASE("energies generated identically by the Hamiltonian table") {
  const auto real = build_realization(0.3, 10, Mode::formal, 2.0);
  const auto h = real.hamiltonian();
  for (int n = 0; n < 10; ++n) {
    CHECK(h.diag[n] == doctest::Approx(real.energy[n]).epsilon(1e-14));
    CHECK(real.energy[n] ==
          doctest::Approx(2.0 * (n + 0.5 - 0.3 * n * (n + 1.0)))
              .epsilon(1e-13));
  }
}

TEST_CASE("build_realization rejections") {
  CHECK_THROWS_AS(build_realization(0.1, 1, Mode::formal), ConfigError);
}
