#ifndef PDEM_STATS_HPP
#define PDEM_STATS_HPP

#include <complex>
#include <vector>

#include "pdem/bgcs.hpp"
#include "pdem/errors.hpp"
#include "pdem/specfun.hpp"

namespace pdem::stats {

using Complex = std::complex<double>;

// Occupation statistics of a coherent state, every quantity computed by
// direct summation and, where the closed hypergeometric forms exist, by
// those as well. cross_check_err is the worst relative disagreement.
struct StatSummary {
  double lambda_prime = 0.0;
  Complex z{0.0, 0.0};
  std::vector<double> p_n;

  // direct-summation values (authoritative)
  double mean = 0.0;
  double second_moment = 0.0;
  double variance = 0.0;
  double mandel_q = 0.0;
  double g2 = 0.0;

  // closed-form values; valid only when closed_available
  bool closed_available = false;
  double mean_closed = 0.0;
  double second_moment_closed = 0.0;
  double variance_closed = 0.0;
  double mandel_q_closed = 0.0;
  double g2_closed = 0.0;

  double cross_check_err = 0.0;
};

// p_n = |c_n|^2.
std::vector<double> distribution(const bgcs::CoherentState& state);

struct Moments {
  double mean;
  double second_moment;
  double variance;
  bool closed_available;
  double mean_closed;
  double second_moment_closed;
  double variance_closed;
  double cross_check_err;
};

// Closed 0F3 forms plus direct sums; lambda' = 1/2 poles the closed-form
// prefactor, so only the direct route is reported there.
Moments moments(Complex z, double lambda_prime,
                const specfun::PrecisionConfig& cfg = {});

// Q = ((Δn)^2 - <n>)/<n> from the direct moments. Throws VacuumUndefined
// at z = 0.
double mandel_q(Complex z, double lambda_prime,
                const specfun::PrecisionConfig& cfg = {});

// g2(0) = (<n^2> - <n>)/<n>^2.
double g2(Complex z, double lambda_prime,
          const specfun::PrecisionConfig& cfg = {});

// Everything at once (used by figure emission and the verification suite).
StatSummary summarize(Complex z, double lambda_prime,
                      const specfun::PrecisionConfig& cfg = {});

// Poisson comparator matched in mean (the dashed harmonic curve).
std::vector<double> poisson_reference(double mean, int n_max);

// Limit of g2(0) as |z| -> 0: (1-2l')^2 / (2 (1-3l')^2).
double g2_small_z_limit(double lambda_prime);

}  // namespace pdem::stats

#endif
