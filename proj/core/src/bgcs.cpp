#include "pdem/bgcs.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

namespace pdem::bgcs {

using specfun::PrecisionConfig;

namespace {

constexpr double kSingularTol = 1e-10;

// a = 2 - 1/lambda'; the Gamma-form parameter.
double a_param(double lambda_prime) { return 2.0 - 1.0 / lambda_prime; }

bool a_near_nonpositive_integer(double a) {
  return a < 0.5 && std::abs(a - std::round(a)) < 1e-9;
}

// Log-magnitudes and signs of c_n / c_0 from the Gamma closed form,
//   c_n/c_0 = (-1)^n [Gamma(a) / (n! Gamma(a+n))] (z/lambda')^n
// with the Gamma ratio expanded as 1/(a)_n so that large negative a
// (lambda' near 0) stays finite as long as no factor vanishes.
struct CoeffLogs {
  std::vector<double> log_abs;  // ln |c_n / c_0|
  std::vector<int> sign;
  double phase_step;  // arg(z / lambda')
};

CoeffLogs coefficient_logs(Complex z, double lambda_prime, int n_terms) {
  CoeffLogs out;
  out.log_abs.resize(n_terms);
  out.sign.resize(n_terms);
  const double abs_ratio = std::abs(z) / std::abs(lambda_prime);
  const double log_ratio = abs_ratio > 0.0 ? std::log(abs_ratio) : 0.0;
  out.phase_step = std::arg(z / lambda_prime);
  const double a = a_param(lambda_prime);

  double log_fact = 0.0;      // ln n!
  double log_poch = 0.0;      // ln |(a)_n|
  int sign_poch = 1;
  for (int n = 0; n < n_terms; ++n) {
    if (std::abs(z) == 0.0 && n > 0) {
      out.log_abs[n] = -std::numeric_limits<double>::infinity();
      out.sign[n] = 1;
      continue;
    }
    out.log_abs[n] = n * log_ratio - log_fact - log_poch;
    out.sign[n] = (n % 2 == 0 ? 1 : -1) * sign_poch;
    // advance to n+1
    log_fact += std::log(n + 1.0);
    const double factor = a + n;
    log_poch += std::log(std::abs(factor));
    if (factor < 0.0) sign_poch = -sign_poch;
  }
  return out;
}

// Squared-magnitude ratio |c_{n}/c_{n-1}|^2 of the recursion.
double ratio_sq(double abs_z, double lambda_prime, int n) {
  const double denom = n * std::abs(1.0 - lambda_prime * (n + 1));
  const double r = abs_z / denom;
  return r * r;
}

}  // namespace

void check_not_singular(double lambda_prime, double tol) {
  if (lambda_prime <= 0.0) return;
  // lambda' = 1/k, k >= 2, kills a recursion denominator at n = k - 1.
  const double k_star = 1.0 / lambda_prime;
  const long k = std::lround(k_star);
  if (k >= 2 && std::abs(lambda_prime - 1.0 / static_cast<double>(k)) < tol) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "lambda'=%.17g is singular (1/%ld)",
                  lambda_prime, k);
    throw ParamSingular(buf);
  }
}

WeightDensity WeightDensity::make(double lambda_prime,
                                  const PrecisionConfig& cfg) {
  if (lambda_prime == 0.0)
    throw ParamSingular("weight density is undefined at lambda' = 0");
  check_not_singular(lambda_prime);
  WeightDensity wd;
  wd.lambda_prime = lambda_prime;
  const double bp = 1.0 - 1.0 / lambda_prime;
  wd.meijer_b = {0.0, 0.0, bp, bp};
  wd.scale = 1.0 / (lambda_prime * lambda_prime);
  const double g = specfun::gamma(a_param(lambda_prime));
  wd.prefactor = 1.0 / (M_PI * lambda_prime * lambda_prime * g * g);
  wd.cfg = cfg;
  return wd;
}

CoherentState make_state(Complex z, double lambda_prime, int truncation,
                         const PrecisionConfig& cfg) {
  if (truncation < 2) throw ConfigError("truncation must be >= 2");
  CoherentState st;
  st.z = z;
  st.lambda_prime = lambda_prime;
  st.truncation = truncation;
  const double abs_z = std::abs(z);

  std::vector<double> log_abs(truncation);
  std::vector<int> sign(truncation);
  double phase_step = 0.0;

  if (lambda_prime == 0.0) {
    // Harmonic-limit branch: c_n = z^n / n! c_0, N = I0(2|z|).
    double log_fact = 0.0;
    for (int n = 0; n < truncation; ++n) {
      log_abs[n] = (abs_z > 0.0 || n == 0)
                       ? n * std::log(std::max(abs_z, 1e-300)) - log_fact
                       : -std::numeric_limits<double>::infinity();
      sign[n] = 1;
      log_fact += std::log(n + 1.0);
    }
    phase_step = abs_z > 0.0 ? std::arg(z) : 0.0;
    st.norm_factor = specfun::bessel_i(0, 2.0 * abs_z);
  } else {
    for (int k = 2; k <= truncation; ++k) {
      if (std::abs(lambda_prime - 1.0 / static_cast<double>(k)) < kSingularTol) {
        char buf[96];
        std::snprintf(buf, sizeof buf,
                      "lambda'=%.17g within 1e-10 of 1/%d", lambda_prime, k);
        throw ParamSingular(buf);
      }
    }
    const CoeffLogs logs = coefficient_logs(z, lambda_prime, truncation);
    log_abs = logs.log_abs;
    sign = logs.sign;
    phase_step = logs.phase_step;

    const double a = a_param(lambda_prime);
    if (a_near_nonpositive_integer(a)) {
      // The 0F3 guard rejects these parameters even though the truncated
      // series is finite; fall back to summing the coefficient magnitudes.
      double acc = 0.0;
      for (int n = 0; n < truncation; ++n) acc += std::exp(2.0 * log_abs[n]);
      st.norm_factor = acc;
    } else {
      const double x = (abs_z * abs_z) / (lambda_prime * lambda_prime);
      st.norm_factor = specfun::hyper0f3(1.0, a, a, x, cfg).value;
    }
  }

  // Certified geometric tail of sum_{n>=N} |c_n|^2.
  if (abs_z == 0.0) {
    st.tail_bound = 0.0;
  } else {
    double rho;
    if (lambda_prime == 0.0) {
      rho = (abs_z / truncation) * (abs_z / truncation);
    } else {
      rho = ratio_sq(abs_z, lambda_prime, truncation);
      // Ratios are eventually decreasing; insist on the certified regime.
      rho = std::max(rho, ratio_sq(abs_z, lambda_prime, truncation + 1));
    }
    if (!(rho < 0.5)) throw TruncationTooSmall("tail ratio not yet geometric");
    const double last = std::exp(2.0 * log_abs[truncation - 1]) / st.norm_factor;
    st.tail_bound = last * rho / (1.0 - rho);
  }
  if (st.tail_bound > 1e-10)
    throw TruncationTooSmall("certified tail bound exceeds 1e-10");

  const double half_log_norm = 0.5 * std::log(st.norm_factor);
  st.coeffs.resize(truncation);
  for (int n = 0; n < truncation; ++n) {
    const double mag = sign[n] * std::exp(log_abs[n] - half_log_norm);
    st.coeffs[n] = mag * Complex{std::cos(n * phase_step), std::sin(n * phase_step)};
  }
  return st;
}

CoherentState make_state_auto(Complex z, double lambda_prime,
                              const PrecisionConfig& cfg) {
  int n = 200;
  for (;;) {
    try {
      CoherentState st = make_state(z, lambda_prime, n, cfg);
      if (st.tail_bound <= 1e-12 || n >= 2000) return st;
    } catch (const TruncationTooSmall&) {
      if (n >= 2000) throw;
    }
    n = std::min(2 * n, 2000);
  }
}

double eigen_residual(const CoherentState& state,
                      const algebra::FockRealization& real) {
  if (real.dim < state.truncation)
    throw DimensionMismatch("realization smaller than state truncation");
  if (real.lambda_prime != state.lambda_prime)
    throw DimensionMismatch("lambda' of realization and state differ");

  const int n = state.truncation;
  double res2 = 0.0, norm2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const Complex lowered =
        (i + 1 < n) ? real.l_sq[i + 1] * state.coeffs[i + 1] : Complex{0.0, 0.0};
    const Complex r = lowered - state.z * state.coeffs[i];
    res2 += std::norm(r);
    norm2 += std::norm(state.coeffs[i]);
  }
  return std::sqrt(res2 / norm2);
}

namespace {

// sum_n x^n / (n!)^2 for complex x (harmonic-limit overlap kernel).
Complex bessel_kernel(Complex x) {
  Complex term{1.0, 0.0}, sum{1.0, 0.0};
  for (int n = 1; n < 500; ++n) {
    term *= x / (static_cast<double>(n) * n);
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) return sum;
  }
  throw NoConvergence("overlap kernel series did not converge");
}

}  // namespace

Complex overlap(Complex z, Complex zp, double lambda_prime,
                const PrecisionConfig& cfg) {
  if (lambda_prime == 0.0) {
    const double nz = specfun::bessel_i(0, 2.0 * std::abs(z));
    const double nzp = specfun::bessel_i(0, 2.0 * std::abs(zp));
    return bessel_kernel(zp * std::conj(z)) / std::sqrt(nz * nzp);
  }
  const double a = a_param(lambda_prime);
  if (a_near_nonpositive_integer(a)) {
    // Direct inner product of truncated states.
    const CoherentState s1 = make_state_auto(z, lambda_prime, cfg);
    const CoherentState s2 = make_state_auto(zp, lambda_prime, cfg);
    Complex acc{0.0, 0.0};
    const int n = std::min(s1.truncation, s2.truncation);
    for (int i = 0; i < n; ++i) acc += std::conj(s1.coeffs[i]) * s2.coeffs[i];
    return acc;
  }
  check_not_singular(lambda_prime);
  const double lp2 = lambda_prime * lambda_prime;
  const Complex kernel = specfun::hyper0f3(1.0, a, a, zp * std::conj(z) / lp2, cfg).value;
  const double nz =
      specfun::hyper0f3(1.0, a, a, std::norm(z) / lp2, cfg).value;
  const double nzp =
      specfun::hyper0f3(1.0, a, a, std::norm(zp) / lp2, cfg).value;
  return kernel / std::sqrt(nz * nzp);
}

double continuity_gap(Complex z, Complex zp, double lambda_prime,
                      const PrecisionConfig& cfg) {
  return 2.0 * (1.0 - overlap(z, zp, lambda_prime, cfg).real());
}

WeightValue weight_density(const WeightDensity& wd, double xi) {
  if (!(xi > 0.0)) throw ConfigError("weight_density requires xi > 0");
  const double g = specfun::meijer_g_4040(wd.meijer_b, wd.scale * xi, wd.cfg).value;
  const double a = a_param(wd.lambda_prime);
  const double n_xi = specfun::hyper0f3(1.0, a, a, wd.scale * xi, wd.cfg).value;
  WeightValue out;
  out.w_tilde = g * wd.prefactor * M_PI;
  out.w = out.w_tilde * n_xi / M_PI;
  return out;
}

namespace {

double composite_simpson(const std::function<double(double)>& f, double a,
                         double b, int n_intervals) {
  const double h = (b - a) / n_intervals;
  double acc = f(a) + f(b);
  for (int i = 1; i < n_intervals; ++i)
    acc += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return acc * h / 3.0;
}

// Panelled composite Simpson with global doubling until two levels agree.
// The contour evaluations carry a small absolute noise floor, so the error
// test is relative to the whole integral rather than per panel.
double integrate_panels(const std::function<double(double)>& f,
                        const std::vector<double>& edges, double rel_tol) {
  int n = 128;
  double prev = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    prev += composite_simpson(f, edges[i], edges[i + 1], n);
  for (int level = 0; level < 4; ++level) {
    n *= 2;
    double cur = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
      cur += composite_simpson(f, edges[i], edges[i + 1], n);
    if (std::abs(cur - prev) <= rel_tol * std::max(std::abs(cur), 1e-300))
      return cur;
    prev = cur;
  }
  throw QuadratureNotConverged("moment quadrature did not stabilize");
}

}  // namespace

MomentCheck moment_check(double lambda_prime, int n,
                         const PrecisionConfig& cfg) {
  if (n < 0 || n > 6) throw ConfigError("moment_check supports n in 0..6");
  if (lambda_prime == 0.0) throw ParamSingular("moments undefined at lambda' = 0");
  check_not_singular(lambda_prime);
  const double a = a_param(lambda_prime);

  // rhs = Gamma(n+1)^2 Gamma(a+n)^2 lambda'^{2n} / Gamma(a)^2.
  const specfun::LogGamma lga = specfun::log_gamma(a);
  const specfun::LogGamma lgan = specfun::log_gamma(a + n);
  const specfun::LogGamma lgn = specfun::log_gamma(n + 1.0);
  const double rhs = std::exp(2.0 * (lgn.log_abs + lgan.log_abs - lga.log_abs) +
                              2.0 * n * std::log(std::abs(lambda_prime)));

  // lhs = lambda'^{2n} / Gamma(a)^2 * int_0^inf G(y) y^n dy, evaluated in
  // u = y^{1/4} where the integrand decays like e^{-4u}.
  const double bp = 1.0 - 1.0 / lambda_prime;
  const std::array<double, 4> b{0.0, 0.0, bp, bp};
  PrecisionConfig contour = cfg;
  contour.contour_halfheight = std::max(contour.contour_halfheight, 40.0);
  contour.contour_step = std::min(contour.contour_step, 0.05);
  // Cross-check the contour on one interior point before trusting it.
  (void)specfun::meijer_g_4040(b, 1.0, contour);
  // Small arguments need a low abscissa: the y^{-c} prefactor otherwise
  // amplifies the cancellation noise of the contour sum.
  const double rightmost_pole = std::max({-b[0], -b[1], -b[2], -b[3]});
  PrecisionConfig contour_lo = contour;
  contour_lo.contour_abscissa = rightmost_pole + 0.25;
  const specfun::MeijerG04 eval_hi(b, contour);
  const specfun::MeijerG04 eval_lo(b, contour_lo);

  // For y = u^4 >> 1 the contour sum at a fixed abscissa cancels down to
  // ~e^{-4u} from terms of size y^{-c}, so its relative accuracy collapses.
  // Shifting the abscissa to the saddle point c ~ y^{1/4} = u keeps the term
  // magnitudes comparable to the result.  One evaluator per large-u panel,
  // pinned at the panel's upper edge, is accurate across that panel.
  const std::vector<double> edges = {0.0, 0.01, 0.1, 0.3, 1.0, 2.0, 3.0,
                                     4.0, 6.0,  8.0, 11.0, 16.0, 22.0, 32.0};
  std::vector<std::pair<double, specfun::MeijerG04>> saddle_evals;
  for (double edge : edges) {
    if (edge <= 2.0) continue;
    PrecisionConfig contour_saddle = contour;
    contour_saddle.contour_abscissa = std::max(rightmost_pole + 1.0, edge);
    saddle_evals.emplace_back(edge, specfun::MeijerG04(b, contour_saddle));
  }

  const auto eval_g = [&](double y) -> double {
    if (y < 1.0) return eval_lo.value(y);
    const double u = std::pow(y, 0.25);
    for (const auto& [edge, eval] : saddle_evals)
      if (u <= edge) return eval.value(y);
    return saddle_evals.back().second.value(y);
  };
  const auto integrand = [&](double u) -> double {
    if (u <= 0.0) return 0.0;
    const double y = u * u * u * u;
    const double g = u <= 2.0 ? (y < 1.0 ? eval_lo.value(y) : eval_hi.value(y))
                              : eval_g(y);
    return 4.0 * g * std::pow(u, 4 * n + 3);
  };
  const double scale =
      std::exp(2.0 * n * std::log(std::abs(lambda_prime)) - 2.0 * lga.log_abs);
  const double lhs =
      scale * integrate_panels(integrand, edges, std::max(cfg.rel_tol, 1e-9));

  MomentCheck out;
  out.lhs = lhs;
  out.rhs = rhs;
  out.rel_err = std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300);
  return out;
}

}  // namespace pdem::bgcs
