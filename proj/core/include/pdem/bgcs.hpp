#ifndef PDEM_BGCS_HPP
#define PDEM_BGCS_HPP

#include <array>
#include <complex>
#include <vector>

#include "pdem/algebra.hpp"
#include "pdem/errors.hpp"
#include "pdem/specfun.hpp"

namespace pdem::bgcs {

using Complex = std::complex<double>;

// Barut-Girardello coherent state K-|z> = z|z> expanded over the Fock basis.
// Coefficients are normalized, with c_0 real and positive.
struct CoherentState {
  Complex z{0.0, 0.0};
  double lambda_prime = 0.0;
  std::vector<Complex> coeffs;
  double norm_factor = 1.0;  // N(|z|^2)
  int truncation = 0;
  double tail_bound = 0.0;  // upper bound on sum_{n>=N} |c_n|^2
};

// Meijer-G parameter block for the resolution-of-unity weight. For
// lambda' != 0: b = (0, 0, 1-1/lambda', 1-1/lambda'), scale = 1/lambda'^2,
// prefactor = 1 / (pi [lambda' Gamma(2-1/lambda')]^2).
struct WeightDensity {
  double lambda_prime;
  std::array<double, 4> meijer_b;
  double scale;
  double prefactor;
  specfun::PrecisionConfig cfg;

  static WeightDensity make(double lambda_prime,
                            const specfun::PrecisionConfig& cfg = {});
};

// Rejects lambda' within tol of 1/k for integer k >= 2 (Gamma degenerates).
void check_not_singular(double lambda_prime, double tol = 1e-10);

// Coefficients from the Gamma closed form evaluated in log space with sign
// tracking; normalization from 0F3. lambda' = 0 takes the analytic limit
// branch (c_n ~ z^n/n!, N = I0(2|z|)). Throws TruncationTooSmall when the
// certified tail at the requested N exceeds 1e-10.
CoherentState make_state(Complex z, double lambda_prime, int truncation,
                         const specfun::PrecisionConfig& cfg = {});

// Grows the truncation (doubling from 200 up to 2000) until the tail bound
// drops to 1e-12.
CoherentState make_state_auto(Complex z, double lambda_prime,
                              const specfun::PrecisionConfig& cfg = {});

// ||K-|z> - z|z>|| / |||z>|| in the truncated basis of `real` (formal mode).
double eigen_residual(const CoherentState& state,
                      const algebra::FockRealization& real);

// <z|z'> via the closed 0F3 kernel with complex argument z' z* / lambda'^2.
Complex overlap(Complex z, Complex zp, double lambda_prime,
                const specfun::PrecisionConfig& cfg = {});

// || |z'> - |z> ||^2 = 2 (1 - Re<z'|z>).
double continuity_gap(Complex z, Complex zp, double lambda_prime,
                      const specfun::PrecisionConfig& cfg = {});

// (w, w_tilde) at xi > 0; w_tilde = pi w / N.
struct WeightValue {
  double w;
  double w_tilde;
};
WeightValue weight_density(const WeightDensity& wd, double xi);

// Moment identity int_0^inf w_tilde(xi) xi^n dxi against the Gamma-product
// right-hand side.
struct MomentCheck {
  double lhs;
  double rhs;
  double rel_err;
};
MomentCheck moment_check(double lambda_prime, int n,
                         const specfun::PrecisionConfig& cfg = {});

}  // namespace pdem::bgcs

#endif
