#include "pdem/model.hpp"

#include <cmath>
#include <cstdio>

namespace pdem::model {

OscillatorParams OscillatorParams::make(double alpha, double lambda) {
  if (!(alpha > 0.0)) throw ConfigError("alpha must be positive");
  OscillatorParams p;
  p.alpha = alpha;
  p.lambda = lambda;
  p.lambda_tilde = lambda / alpha;
  p.lambda_prime = lambda / (2.0 * alpha);
  p.domain_halfwidth = lambda < 0.0 ? 1.0 / std::sqrt(-lambda)
                                    : std::numeric_limits<double>::infinity();
  return p;
}

MassPotential evaluate_model(const OscillatorParams& params, double x) {
  if (!params.in_domain(x)) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "x=%.17g outside |x| < %.17g", x,
                  params.domain_halfwidth);
    throw DomainError(buf);
  }
  const double denom = 1.0 + params.lambda * x * x;
  return {1.0 / denom, 0.5 * params.alpha * params.alpha * x * x / denom};
}

double classical_energy(const OscillatorParams& params, double x, double v) {
  const double denom = 1.0 + params.lambda * x * x;
  return 0.5 * v * v / denom + evaluate_model(params, x).potential;
}

namespace {

double acceleration(const OscillatorParams& p, double x, double v) {
  return (p.lambda * x * v * v - p.alpha * p.alpha * x) / (1.0 + p.lambda * x * x);
}

}  // namespace

ClassicalOrbit integrate_orbit(const OscillatorParams& params, double x0,
                               double v0, double dt, int n_steps) {
  if (!(dt > 0.0)) throw ConfigError("dt must be positive");
  if (!params.in_domain(x0)) throw DomainError("initial point outside domain");

  ClassicalOrbit orbit;
  orbit.times.reserve(n_steps + 1);
  orbit.positions.reserve(n_steps + 1);
  orbit.velocities.reserve(n_steps + 1);

  double x = x0, v = v0;
  const double e0 = classical_energy(params, x0, v0);
  double max_drift = 0.0;
  orbit.times.push_back(0.0);
  orbit.positions.push_back(x);
  orbit.velocities.push_back(v);

  for (int i = 0; i < n_steps; ++i) {
    const double k1x = v;
    const double k1v = acceleration(params, x, v);
    const double k2x = v + 0.5 * dt * k1v;
    const double k2v = acceleration(params, x + 0.5 * dt * k1x, v + 0.5 * dt * k1v);
    const double k3x = v + 0.5 * dt * k2v;
    const double k3v = acceleration(params, x + 0.5 * dt * k2x, v + 0.5 * dt * k2v);
    const double k4x = v + dt * k3v;
    const double k4v = acceleration(params, x + dt * k3x, v + dt * k3v);
    x += dt / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
    v += dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    if (!params.in_domain(x)) throw DomainEscape("trajectory reached the domain wall");
    orbit.times.push_back((i + 1) * dt);
    orbit.positions.push_back(x);
    orbit.velocities.push_back(v);
    const double e = classical_energy(params, x, v);
    max_drift = std::max(max_drift, std::abs(e - e0) / std::max(std::abs(e0), 1e-300));
  }
  orbit.energy_drift = max_drift;
  if (max_drift > 1e-6) throw StepTooLarge("energy drift exceeds 1e-6; reduce dt");

  for (double xi : orbit.positions) orbit.amplitude = std::max(orbit.amplitude, std::abs(xi));

  // Upward zero crossings with linear interpolation between samples.
  std::vector<double> crossings;
  for (std::size_t i = 1; i < orbit.positions.size(); ++i) {
    const double a = orbit.positions[i - 1];
    const double b = orbit.positions[i];
    if (a <= 0.0 && b > 0.0) {
      crossings.push_back(orbit.times[i - 1] + dt * (-a) / (b - a));
    }
  }
  if (crossings.size() >= 2) {
    const double mean_period =
        (crossings.back() - crossings.front()) / (crossings.size() - 1);
    orbit.measured_omega = 2.0 * M_PI / mean_period;
  }
  orbit.phase = std::atan2(orbit.measured_omega * x0, v0);
  return orbit;
}

double default_zeta_max(double lambda_tilde) {
  return lambda_tilde < 0.0 ? 0.999 / std::sqrt(-lambda_tilde) : 10.0;
}

GridWavefunction ground_state_grid(const OscillatorParams& params,
                                   double zeta_max, int n_points) {
  const double lt = params.lambda_tilde;
  if (n_points < 1001) throw ConfigError("ground_state_grid needs n_points >= 1001");
  if (lt < 0.0 && !(zeta_max < 1.0 / std::sqrt(-lt)))
    throw DomainError("zeta_max must stay inside the lambda<0 domain");
  if (lt >= 1.0)
    throw NotNormalizable("ground state decays too slowly for lambda_tilde >= 1");

  GridWavefunction wf;
  wf.ground_energy = 0.5 * params.alpha;
  const int n = n_points;
  const double h = 2.0 * zeta_max / (n - 1);
  wf.zeta_grid.resize(n);
  wf.values.resize(n);
  for (int i = 0; i < n; ++i) {
    // Build the grid symmetrically so psi0(zeta) = psi0(-zeta) bit-exactly.
    const double z = (i <= (n - 1) / 2) ? -zeta_max + i * h
                                        : -(-zeta_max + (n - 1 - i) * h);
    wf.zeta_grid[i] = z;
    wf.values[i] = lt == 0.0
                       ? std::exp(-0.5 * z * z)
                       : std::exp(-std::log1p(lt * z * z) / (2.0 * lt));
  }

  // Trapezoidal normalization.
  double nrm2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
    nrm2 += w * wf.values[i] * wf.values[i] * h;
  }
  const double scale = 1.0 / std::sqrt(nrm2);
  for (double& v : wf.values) v *= scale;
  wf.norm = 1.0;

  // Second-order central-difference residual of H psi0 = (alpha/2) psi0,
  // measured on interior points only.
  double r2 = 0.0, p2 = 0.0;
  for (int i = 1; i < n - 1; ++i) {
    const double z = wf.zeta_grid[i];
    const double psi = wf.values[i];
    const double d2 = (wf.values[i + 1] - 2.0 * psi + wf.values[i - 1]) / (h * h);
    const double d1 = (wf.values[i + 1] - wf.values[i - 1]) / (2.0 * h);
    const double denom = 1.0 + lt * z * z;
    const double hpsi =
        0.5 * params.alpha * (-denom * d2 - 2.0 * lt * z * d1 + z * z * psi / denom);
    const double r = hpsi - wf.ground_energy * psi;
    r2 += r * r * h;
    p2 += psi * psi * h;
  }
  wf.residual = std::sqrt(r2 / p2);
  return wf;
}

}  // namespace pdem::model
