#include "pdem/verify.hpp"

#include <cmath>
#include <complex>

#include "pdem/algebra.hpp"
#include "pdem/bgcs.hpp"
#include "pdem/model.hpp"
#include "pdem/specfun.hpp"
#include "pdem/stats.hpp"

namespace pdem::verify {

namespace {

using bgcs::Complex;

void add(std::vector<CheckRow>& rows, const std::string& name, double measured,
         double bound, bool informational = false) {
  rows.push_back({name, measured, bound, measured <= bound, informational});
}

std::string tag(double x) { return cli::fmt17(x); }

// ---- classical ------------------------------------------------------------

void suite_classical(std::vector<CheckRow>& rows) {
  const double alpha = 1.0;
  const double dt = 1e-4 * 2.0 * M_PI / alpha;
  for (double lambda : {0.25, -0.25, 0.55, -0.55}) {
    for (double amp : {0.5, 1.0, 2.0}) {
      if (lambda < 0.0 && amp * amp * (-lambda) >= 0.999) continue;
      const auto params = model::OscillatorParams::make(alpha, lambda);
      const double omega_exact = alpha / std::sqrt(1.0 + lambda * amp * amp);
      const int steps =
          static_cast<int>(std::ceil(8.0 * 2.0 * M_PI / omega_exact / dt));
      const auto orbit = model::integrate_orbit(params, amp, 0.0, dt, steps);
      add(rows,
          "omega_law lambda=" + tag(lambda) + " A=" + tag(amp),
          std::abs(orbit.measured_omega - omega_exact) / omega_exact, 1e-4);
      add(rows, "energy_drift lambda=" + tag(lambda) + " A=" + tag(amp),
          orbit.energy_drift, 1e-8);
    }
  }

  for (double lt : {0.0, 0.25, -0.25}) {
    const auto params = model::OscillatorParams::make(1.0, lt);
    const double zmax = model::default_zeta_max(lt);
    const int n1 = 2 * static_cast<int>(std::round(zmax / 1e-3)) + 1;
    const auto wf1 = model::ground_state_grid(params, zmax, n1);
    add(rows, "ground_residual lt=" + tag(lt), wf1.residual, 1e-5);
    const auto wf2 = model::ground_state_grid(params, zmax, 2 * (n1 - 1) + 1);
    const double ratio = wf1.residual / wf2.residual;
    rows.push_back({"ground_residual_order lt=" + tag(lt), ratio, 4.0,
                    ratio > 3.2 && ratio < 4.8, false});
  }
}

// ---- algebra ---------------------------------------------------------------

void suite_algebra(std::vector<CheckRow>& rows, const cli::RunConfig& cfg) {
  for (double lp : {-0.5, 0.39, 0.9, 1.5, 2.6}) {
    const auto real = algebra::build_realization(lp, 40, algebra::Mode::formal);
    const auto rep = algebra::check_algebra(real);
    add(rows, "casimir lp=" + tag(lp), rep.max_casimir_dev, 1e-12);
    add(rows, "shape_invariance lp=" + tag(lp), rep.max_ll_vs_rhat, 1e-12);
  }

  {
    const auto real = algebra::build_realization(0.0, 40, algebra::Mode::formal);
    const auto rep = algebra::check_algebra(real);
    add(rows, "harmonic_LL_closure", rep.max_ll_vs_scalar_one, 1e-12);
    add(rows, "harmonic_KK_closure", rep.max_kk_closure, 1e-12);
    for (int n : {1, 2, 3, 5}) {
      add(rows, "eigenstate_rebuild lp=0 n=" + std::to_string(n),
          algebra::build_eigenstate(real, n).deviation_from_basis, 1e-12);
    }
  }
  {
    const auto real = algebra::build_realization(-0.5, 40, algebra::Mode::formal);
    add(rows, "eigenstate_rebuild lp=-0.5 n=2",
        algebra::build_eigenstate(real, 2).deviation_from_basis, 1e-12);
  }
  {
    const auto rep =
        algebra::check_algebra(algebra::build_realization(0.1, 8, algebra::Mode::formal));
    add(rows, "documented_KK_deviation lp=0.1 n=0",
        std::abs(rep.kk_closure_residual[0] - 0.36), 1e-12);
  }

  // shift_params: iterating from alpha_1 = 1 must reproduce 1 - (n-1) lt.
  {
    const double lt = 0.78;
    double a = 1.0;
    for (int i = 0; i < 2; ++i) a = algebra::shift_params(a, lt);
    add(rows, "shift_params lt=0.78 twice", std::abs(a - (-0.56)), 1e-12);
  }

  // Representation ladder increments m_{n+1} - m_n = 1 - 2 lp (n+1).
  {
    const double lp = 0.39;
    const auto real = algebra::build_realization(lp, 20, algebra::Mode::formal);
    double worst = 0.0;
    for (int n = 0; n + 1 < real.dim; ++n) {
      worst = std::max(worst, std::abs(real.rep_m[n + 1] - real.rep_m[n] -
                                       (1.0 - 2.0 * lp * (n + 1))));
    }
    add(rows, "representation_increments lp=0.39", worst, 1e-12);
  }

  // Informational su(1,1) closure table at the configured lambda'.
  const double lp_info = cfg.has_lambda_prime() || cfg.has_lambda()
                             ? cfg.effective_lambda_prime()
                             : 0.39;
  const auto rep_info =
      algebra::check_algebra(algebra::build_realization(lp_info, 10, algebra::Mode::formal));
  for (int n = 0; n < 6; ++n) {
    rows.push_back({"INFO kk_closure lp=" + tag(lp_info) + " n=" + std::to_string(n),
                    rep_info.kk_closure_residual[n], 0.0, true, true});
  }
}

// ---- coherent --------------------------------------------------------------

void suite_coherent(std::vector<CheckRow>& rows, const cli::RunConfig& cfg) {
  specfun::PrecisionConfig pc;
  pc.rel_tol = std::min(cfg.rel_tol, 1e-12);

  const Complex zs[] = {{0.25, 0.0}, {1.0, 0.0}, {0.0, 2.0}, {3.0, 1.0}};
  for (double lp : {-0.5, 0.9, 1.5, 2.6}) {
    for (const Complex& z : zs) {
      const auto st = bgcs::make_state_auto(z, lp, pc);
      const auto real =
          algebra::build_realization(lp, st.truncation, algebra::Mode::formal);
      add(rows, "eigen_residual lp=" + tag(lp) + " z=" + tag(z.real()) + "+" +
                    tag(z.imag()) + "i",
          bgcs::eigen_residual(st, real), std::max(1e-10, 10.0 * st.tail_bound));
      double sum = 0.0;
      for (const Complex& c : st.coeffs) sum += std::norm(c);
      add(rows, "norm_duality lp=" + tag(lp) + " z=" + tag(z.real()) + "+" +
                    tag(z.imag()) + "i",
          std::abs(sum - 1.0), 1e-10);
    }
  }

  // User-requested parameter point, in addition to the fixed grid.
  if (cfg.has_lambda_prime() || cfg.has_lambda()) {
    const double lp = cfg.effective_lambda_prime();
    const Complex z{cfg.z_re, cfg.z_im};
    const auto st = bgcs::make_state_auto(z, lp, pc);
    const auto real =
        algebra::build_realization(lp, st.truncation, algebra::Mode::formal);
    add(rows, "eigen_residual lp=" + tag(lp) + " z=" + tag(z.real()) + "+" +
                  tag(z.imag()) + "i",
        bgcs::eigen_residual(st, real), std::max(1e-10, 10.0 * st.tail_bound));
  }

  // Gamma-form vs recursion-form coefficients.
  for (double lp : {-0.5, 0.39, 0.9, 1.5}) {
    const Complex z{1.0, 0.5};
    const auto st = bgcs::make_state(z, lp, 200, pc);
    Complex c = st.coeffs[0];
    double worst = 0.0;
    for (int n = 1; n < st.truncation; ++n) {
      c *= z / (n * (1.0 - lp * (n + 1.0)));
      const double mag = std::abs(st.coeffs[n]);
      if (mag < 1e-280) break;  // below this both routes are pure noise
      worst = std::max(worst, std::abs(st.coeffs[n] - c) / mag);
    }
    add(rows, "gamma_vs_recursion lp=" + tag(lp), worst, 1e-12);
  }

  add(rows, "overlap_self lp=0.9 z=1",
      std::abs(bgcs::overlap({1.0, 0.0}, {1.0, 0.0}, 0.9, pc) - 1.0), 1e-12);
  {
    const Complex z{1.0, 0.0}, zp{1.0, 0.5};
    const auto s1 = bgcs::make_state_auto(z, 0.9, pc);
    const auto s2 = bgcs::make_state_auto(zp, 0.9, pc);
    Complex direct{0.0, 0.0};
    const int n = std::min(s1.truncation, s2.truncation);
    for (int i = 0; i < n; ++i) direct += std::conj(s1.coeffs[i]) * s2.coeffs[i];
    const Complex closed = bgcs::overlap(z, zp, 0.9, pc);
    add(rows, "overlap_vs_inner_product lp=0.9", std::abs(closed - direct), 1e-10);
    rows.push_back({"non_orthogonality lp=0.9", std::abs(closed), 0.0,
                    std::abs(closed) > 0.0, false});
  }

  add(rows, "continuity_self lp=1.5 z=1",
      bgcs::continuity_gap({1.0, 0.0}, {1.0, 0.0}, 1.5, pc), 1e-12);
  {
    const double g1 = bgcs::continuity_gap({1.0, 0.0}, {1.0 + 1e-4, 0.0}, 1.5, pc);
    const double g2 = bgcs::continuity_gap({1.0, 0.0}, {1.0 + 1e-5, 0.0}, 1.5, pc);
    add(rows, "continuity_gap lp=1.5 dz=1e-4", g1, 1e-3);
    rows.push_back({"continuity_linear_shrink lp=1.5", g1 / g2, 10.0,
                    g1 / g2 >= 10.0, false});
  }

  // Infinite radius of convergence witness: recursion ratio collapses.
  {
    const auto st = bgcs::make_state({3.0, 0.0}, 1.5, 200, pc);
    const double ratio = std::abs(st.coeffs[101]) / std::abs(st.coeffs[100]);
    add(rows, "convergence_ratio lp=1.5 n=100", ratio, 1e-3);
  }

  // Weight positivity and moment identity (resolution of unity surrogate).
  {
    const auto wd = bgcs::WeightDensity::make(1.5, pc);
    for (double xi : {0.1, 1.0, 5.0, 20.0}) {
      const auto wv = bgcs::weight_density(wd, xi);
      rows.push_back({"weight_positive lp=1.5 xi=" + tag(xi), wv.w_tilde, 0.0,
                      wv.w_tilde >= 0.0, false});
    }
  }
  for (double lp : {0.9, 1.5, 2.6}) {
    for (int n = 0; n <= 5; ++n) {
      const auto mc = bgcs::moment_check(lp, n, pc);
      add(rows, "moment lp=" + tag(lp) + " n=" + std::to_string(n), mc.rel_err,
          1e-5);
    }
  }

  // Harmonic-limit continuity of the coefficient vectors.
  for (double abs_z : {1.0, 2.0, 3.0}) {
    const auto st_eps = bgcs::make_state({abs_z, 0.0}, 1e-4, 200, pc);
    const auto st_0 = bgcs::make_state({abs_z, 0.0}, 0.0, 200, pc);
    double worst = 0.0;
    for (int n = 0; n <= 20; ++n)
      worst = std::max(worst, std::abs(st_eps.coeffs[n] - st_0.coeffs[n]));
    add(rows, "harmonic_limit_coeffs |z|=" + tag(abs_z), worst, 1e-3);
  }
}

// ---- stats -----------------------------------------------------------------

void suite_stats(std::vector<CheckRow>& rows, const cli::RunConfig& cfg) {
  specfun::PrecisionConfig pc;
  pc.rel_tol = std::min(cfg.rel_tol, 1e-13);

  for (double lp : {-0.5, 0.39, 0.9, 1.5, 2.6}) {
    for (double abs_z : {0.25, 1.0, 2.0, 5.0}) {
      const auto s = stats::summarize({abs_z, 0.0}, lp, pc);
      add(rows, "dual_methods lp=" + tag(lp) + " |z|=" + tag(abs_z),
          s.cross_check_err, 1e-9);
      double psum = 0.0;
      for (double p : s.p_n) psum += p;
      add(rows, "prob_sum lp=" + tag(lp) + " |z|=" + tag(abs_z),
          std::abs(psum - 1.0), 1e-12);
      add(rows, "variance_definitional lp=" + tag(lp) + " |z|=" + tag(abs_z),
          std::abs(s.variance - (s.second_moment - s.mean * s.mean)), 1e-12);
      add(rows, "g2_identity lp=" + tag(lp) + " |z|=" + tag(abs_z),
          std::abs(s.g2 - (s.mandel_q / s.mean + 1.0)), 1e-10);
    }
  }

  // Sign reproduction and Fano consistency on the figure grid.
  for (double lp : {0.39, 0.9, 1.5, 2.6}) {
    double worst_q = -std::numeric_limits<double>::infinity();
    double worst_g2 = -std::numeric_limits<double>::infinity();
    double worst_fano = -std::numeric_limits<double>::infinity();
    for (int j = 1; j <= 20; ++j) {
      const double abs_z = 0.25 * j;
      const auto s = stats::summarize({abs_z, 0.0}, lp, pc);
      worst_q = std::max(worst_q, s.mandel_q);
      worst_g2 = std::max(worst_g2, s.g2);
      worst_fano = std::max(worst_fano, s.variance / s.mean);
    }
    rows.push_back({"sub_poissonian_Q lp=" + tag(lp), worst_q, 0.0,
                    worst_q < 0.0, false});
    rows.push_back({"antibunching_g2 lp=" + tag(lp), worst_g2, 1.0,
                    worst_g2 < 1.0, false});
    rows.push_back({"fano_below_one lp=" + tag(lp), worst_fano, 1.0,
                    worst_fano < 1.0, false});
  }

  // Small-|z| limit of g2, anchored at |z| = 1e-3 and Richardson-extrapolated
  // in |z|^2 to remove the O(|z|^2) transient.
  for (double lp : {0.39, 0.9, 1.5, 2.6}) {
    const double g_a = stats::g2({1e-3, 0.0}, lp, pc);
    const double g_b = stats::g2({0.5e-3, 0.0}, lp, pc);
    const double extrapolated = (4.0 * g_b - g_a) / 3.0;
    add(rows, "g2_small_z_limit lp=" + tag(lp),
        std::abs(extrapolated - stats::g2_small_z_limit(lp)), 1e-6);
  }

  // Harmonic limit: mean at lp=1e-4 against the Bessel closed form at lp=0.
  for (double abs_z : {1.0, 2.0, 3.0}) {
    const auto m = stats::moments({abs_z, 0.0}, 1e-4, pc);
    const double bessel_mean = abs_z * specfun::bessel_i(1, 2.0 * abs_z) /
                               specfun::bessel_i(0, 2.0 * abs_z);
    add(rows, "harmonic_limit_mean |z|=" + tag(abs_z),
        std::abs(m.mean - bessel_mean) / bessel_mean, 1e-3);
  }

  // Poisson comparator sanity.
  {
    const auto p = stats::poisson_reference(4.0, 80);
    double mean = 0.0, second = 0.0, sum = 0.0;
    for (std::size_t n = 0; n < p.size(); ++n) {
      sum += p[n];
      mean += n * p[n];
      second += static_cast<double>(n) * n * p[n];
    }
    add(rows, "poisson_fano_one mu=4",
        std::abs((second - mean * mean) / mean - 1.0), 1e-10);
    add(rows, "poisson_sum mu=4", std::abs(sum - 1.0), 1e-10);
  }

  (void)cfg;
}

}  // namespace

std::vector<CheckRow> run_suite(const std::string& suite,
                                const cli::RunConfig& cfg) {
  std::vector<CheckRow> rows;
  if (suite == "classical") suite_classical(rows);
  else if (suite == "algebra") suite_algebra(rows, cfg);
  else if (suite == "coherent") suite_coherent(rows, cfg);
  else if (suite == "stats") suite_stats(rows, cfg);
  else if (suite == "all") {
    suite_classical(rows);
    suite_algebra(rows, cfg);
    suite_coherent(rows, cfg);
    suite_stats(rows, cfg);
  } else {
    throw ConfigError("unknown suite: " + suite);
  }
  return rows;
}

bool all_passed(const std::vector<CheckRow>& rows) {
  for (const CheckRow& r : rows) {
    if (!r.informational && !r.pass) return false;
  }
  return true;
}

}  // namespace pdem::verify
