#include "pdem/stats.hpp"

#include <cmath>

namespace pdem::stats {

using specfun::PrecisionConfig;

std::vector<double> distribution(const bgcs::CoherentState& state) {
  std::vector<double> p(state.coeffs.size());
  for (std::size_t n = 0; n < p.size(); ++n) p[n] = std::norm(state.coeffs[n]);
  return p;
}

namespace {

bool closed_form_available(double lambda_prime) {
  if (lambda_prime == 0.0) return false;
  // The prefactor 1/(2 lambda' - 1)^2 amplifies rounding long before the
  // exact pole, so a generous window falls back to the direct route.
  if (std::abs(lambda_prime - 0.5) < 1e-6) return false;
  // 0F3 parameters 3 - 1/lambda' and the normalization's 2 - 1/lambda'
  // must not sit on nonpositive integers.
  for (double a : {2.0 - 1.0 / lambda_prime, 3.0 - 1.0 / lambda_prime}) {
    if (a < 0.5 && std::abs(a - std::round(a)) < 1e-9) return false;
  }
  return true;
}

double rel_diff(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

}  // namespace

Moments moments(Complex z, double lambda_prime, const PrecisionConfig& cfg) {
  // State construction rejects lambda' = 1/k only when the vanishing
  // recursion denominator falls inside the truncation window, so values such
  // as lambda' = 1e-4 remain usable here.
  const bgcs::CoherentState state = bgcs::make_state_auto(z, lambda_prime, cfg);
  const std::vector<double> p = distribution(state);
  Moments m{};
  for (std::size_t n = 0; n < p.size(); ++n) {
    m.mean += n * p[n];
    m.second_moment += static_cast<double>(n) * n * p[n];
  }
  m.variance = m.second_moment - m.mean * m.mean;

  m.closed_available = closed_form_available(lambda_prime);
  if (m.closed_available) {
    const double lp = lambda_prime;
    const double a = 2.0 - 1.0 / lp;
    const double x = std::norm(z) / (lp * lp);
    const double norm = specfun::hyper0f3(1.0, a, a, x, cfg).value;
    const double pre = std::norm(z) / ((2.0 * lp - 1.0) * (2.0 * lp - 1.0));
    const double f2 = specfun::hyper0f3(2.0, a + 1.0, a + 1.0, x, cfg).value;
    const double f1 = specfun::hyper0f3(1.0, a + 1.0, a + 1.0, x, cfg).value;
    m.mean_closed = pre * f2 / norm;
    m.second_moment_closed = pre * f1 / norm;
    m.variance_closed = m.second_moment_closed - m.mean_closed * m.mean_closed;
    m.cross_check_err = std::max(rel_diff(m.mean, m.mean_closed),
                                 rel_diff(m.second_moment, m.second_moment_closed));
  }
  return m;
}

double mandel_q(Complex z, double lambda_prime, const PrecisionConfig& cfg) {
  if (std::abs(z) == 0.0) throw VacuumUndefined("Mandel Q is 0/0 at the vacuum");
  const Moments m = moments(z, lambda_prime, cfg);
  return (m.variance - m.mean) / m.mean;
}

double g2(Complex z, double lambda_prime, const PrecisionConfig& cfg) {
  if (std::abs(z) == 0.0) throw VacuumUndefined("g2(0) is 0/0 at the vacuum");
  const Moments m = moments(z, lambda_prime, cfg);
  return (m.second_moment - m.mean) / (m.mean * m.mean);
}

StatSummary summarize(Complex z, double lambda_prime,
                      const PrecisionConfig& cfg) {
  StatSummary s;
  s.lambda_prime = lambda_prime;
  s.z = z;
  const bgcs::CoherentState state = bgcs::make_state_auto(z, lambda_prime, cfg);
  s.p_n = distribution(state);

  const Moments m = moments(z, lambda_prime, cfg);
  s.mean = m.mean;
  s.second_moment = m.second_moment;
  s.variance = m.variance;
  s.closed_available = m.closed_available;
  s.cross_check_err = m.cross_check_err;
  if (s.mean > 0.0) {
    s.mandel_q = (s.variance - s.mean) / s.mean;
    s.g2 = (s.second_moment - s.mean) / (s.mean * s.mean);
  }

  if (m.closed_available && std::abs(z) > 0.0) {
    s.mean_closed = m.mean_closed;
    s.second_moment_closed = m.second_moment_closed;
    s.variance_closed = m.variance_closed;
    const double lp = lambda_prime;
    const double a = 2.0 - 1.0 / lp;
    const double x = std::norm(z) / (lp * lp);
    const double norm = specfun::hyper0f3(1.0, a, a, x, cfg).value;
    const double pre = std::norm(z) / ((2.0 * lp - 1.0) * (2.0 * lp - 1.0));
    const double f2 = specfun::hyper0f3(2.0, a + 1.0, a + 1.0, x, cfg).value;
    const double f1 = specfun::hyper0f3(1.0, a + 1.0, a + 1.0, x, cfg).value;
    s.mandel_q_closed = f1 / f2 - pre * f2 / norm - 1.0;
    s.g2_closed = norm / (pre * f2) * (f1 / f2 - 1.0);
    s.cross_check_err = std::max({s.cross_check_err,
                                  rel_diff(s.mandel_q, s.mandel_q_closed),
                                  rel_diff(s.g2, s.g2_closed)});
  }
  return s;
}

std::vector<double> poisson_reference(double mean, int n_max) {
  if (!(mean > 0.0)) throw ConfigError("poisson_reference requires mean > 0");
  std::vector<double> p(n_max + 1);
  const double log_mu = std::log(mean);
  double log_fact = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    p[n] = std::exp(-mean + n * log_mu - log_fact);
    log_fact += std::log(n + 1.0);
  }
  return p;
}

double g2_small_z_limit(double lambda_prime) {
  const double u = 1.0 - 2.0 * lambda_prime;
  const double v = 1.0 - 3.0 * lambda_prime;
  return u * u / (2.0 * v * v);
}

}  // namespace pdem::stats
