#ifndef PDEM_SPECFUN_HPP
#define PDEM_SPECFUN_HPP

#include <array>
#include <complex>
#include <limits>
#include <vector>

#include "pdem/errors.hpp"

namespace pdem::specfun {

// Convergence control shared by the series and contour evaluators.
// contour_abscissa may be left NaN, in which case each Meijer-G evaluation
// places the line one unit right of the rightmost integrand pole.
struct PrecisionConfig {
  double rel_tol = 1e-12;        // in (0, 1e-3]
  int max_terms = 512;           // >= 32
  double contour_abscissa = std::numeric_limits<double>::quiet_NaN();
  double contour_halfheight = 40.0;  // T
  double contour_step = 0.05;        // h

  void validate() const;
};

// Value plus an a-posteriori error bound, carried by everything series- or
// quadrature-based so callers can propagate the worst bound.
struct SeriesResult {
  double value = 0.0;
  double error_bound = 0.0;
  int terms_used = 0;
};

struct ComplexSeriesResult {
  std::complex<double> value{0.0, 0.0};
  double error_bound = 0.0;
  int terms_used = 0;
};

struct LogGamma {
  double log_abs = 0.0;
  int sign = 1;  // sign of Gamma(x)
};

// Gamma(x) for real x away from the poles at 0, -1, -2, ...
// Negative non-integer arguments go through the reflection identity.
// Throws PoleError within 1e-12 of a nonpositive integer.
double gamma(double x);

// ln|Gamma(x)| and the sign of Gamma(x); same pole handling as gamma().
LogGamma log_gamma(double x);

// ln Gamma(z) for complex z with Re z > 0 (principal branch).
std::complex<double> log_gamma(std::complex<double> z);

// Rising factorial x(x+1)...(x+n-1); exact product, n = 0 gives 1.
double pochhammer(double x, int n);

// 0F3(b1,b2,b3; x) by forward term recurrence with a certified geometric
// tail. Throws ParamSingular for nonpositive-integer b, NoConvergence when
// max_terms is hit before the tail bound is met.
SeriesResult hyper0f3(double b1, double b2, double b3, double x,
                      const PrecisionConfig& cfg = {});

// Same series with a complex argument (needed for overlap kernels).
ComplexSeriesResult hyper0f3(double b1, double b2, double b3,
                             std::complex<double> x,
                             const PrecisionConfig& cfg = {});

// Meijer G^{4,0}_{0,4}(y | -; b) on a fixed Mellin-Barnes contour.
// The normalization is pinned by the Mellin identity
//   int_0^inf G(beta*xi) xi^{k-1} dxi = prod_i Gamma(b_i + k) beta^{-k}.
class MeijerG04 {
 public:
  MeijerG04(const std::array<double, 4>& b, const PrecisionConfig& cfg);

  // G(y) for y > 0 using the contour fixed at construction.
  double value(double y) const;

  double abscissa() const { return abscissa_; }
  const std::array<double, 4>& b() const { return b_; }

 private:
  std::array<double, 4> b_;
  double abscissa_;
  double step_;
  // trapezoid weights h/(2*pi) * prod_i Gamma(b_i + c + i*t_j) at t_j >= 0;
  // the t_j < 0 half is recovered by conjugate symmetry.
  std::vector<std::complex<double>> weights_;
};

// Contour-refined evaluation: recompute with T doubled and h halved until
// two levels agree to cfg.rel_tol. Throws ContourError for a bad abscissa,
// QuadratureNotConverged when refinement fails to stabilize.
SeriesResult meijer_g_4040(const std::array<double, 4>& b, double y,
                           const PrecisionConfig& cfg = {});

// Modified Bessel I0/I1 by ascending series (harmonic-limit oracle).
double bessel_i(int order, double x);

}  // namespace pdem::specfun

#endif
