#ifndef PDEM_MODEL_HPP
#define PDEM_MODEL_HPP

#include <limits>
#include <vector>

#include "pdem/errors.hpp"

namespace pdem::model {

// Physical parameters of the nonlinear oscillator. lambda < 0 confines the
// dynamics to |x| < 1/sqrt(|lambda|).
struct OscillatorParams {
  double alpha;
  double lambda;
  double lambda_tilde;      // lambda / alpha
  double lambda_prime;      // lambda_tilde / 2
  double domain_halfwidth;  // 1/sqrt(|lambda|) for lambda < 0, else +inf

  static OscillatorParams make(double alpha, double lambda);
  bool in_domain(double x) const { return std::abs(x) < domain_halfwidth; }
};

struct ClassicalOrbit {
  std::vector<double> times;
  std::vector<double> positions;
  std::vector<double> velocities;
  double amplitude = 0.0;
  double phase = 0.0;
  double measured_omega = 0.0;
  double energy_drift = 0.0;  // relative drift of the classical Hamiltonian
};

struct GridWavefunction {
  std::vector<double> zeta_grid;  // zeta = sqrt(alpha) * x
  std::vector<double> values;
  double norm = 0.0;
  double ground_energy = 0.0;  // alpha/2 by the factorization contract
  double residual = 0.0;       // ||H psi - (alpha/2) psi|| / ||psi||
};

// mass = 1/(1 + lambda x^2), potential = alpha^2 x^2 / (2 (1 + lambda x^2)).
struct MassPotential {
  double mass;
  double potential;
};
MassPotential evaluate_model(const OscillatorParams& params, double x);

// Classical energy H = xdot^2 / (2 (1 + lambda x^2)) + V(x).
double classical_energy(const OscillatorParams& params, double x, double v);

// Fixed-step RK4 on xddot = (lambda x xdot^2 - alpha^2 x) / (1 + lambda x^2).
// measured_omega comes from linear interpolation of upward zero crossings.
ClassicalOrbit integrate_orbit(const OscillatorParams& params, double x0,
                               double v0, double dt, int n_steps);

// Normalized ground state psi0(zeta) = C (1 + lt z^2)^(-1/(2 lt)) on a
// symmetric grid, plus the finite-difference eigenvalue residual.
GridWavefunction ground_state_grid(const OscillatorParams& params,
                                   double zeta_max, int n_points);

// Grid default: 10 for lambda_tilde >= 0, 0.999/sqrt(|lt|) for lt < 0.
double default_zeta_max(double lambda_tilde);

}  // namespace pdem::model

#endif
