#include "pdem/specfun.hpp"

#include <cmath>
#include <cstdio>

namespace pdem::specfun {

namespace {

constexpr double kPoleTol = 1e-12;
constexpr double kLog2Pi = 1.8378770664093454836;  // ln(2*pi)

// Lanczos g = 7, 9-term coefficient set; ~1e-14 relative for double.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};

bool near_nonpositive_integer(double x, double tol) {
  if (x > 0.5) return false;
  return std::abs(x - std::round(x)) < tol;
}

// ln Gamma(x) for x > 0.
double lanczos_lgamma_pos(double x) {
  const double zz = x - 1.0;
  double series = kLanczos[0];
  for (int i = 1; i < 9; ++i) series += kLanczos[i] / (zz + i);
  const double t = zz + kLanczosG + 0.5;
  return 0.5 * kLog2Pi + (zz + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

void PrecisionConfig::validate() const {
  if (!(rel_tol > 0.0 && rel_tol <= 1e-3))
    throw ConfigError("rel_tol must lie in (0, 1e-3]");
  if (max_terms < 32) throw ConfigError("max_terms must be >= 32");
  if (!(contour_halfheight > 0.0)) throw ConfigError("contour_halfheight must be > 0");
  if (!(contour_step > 0.0)) throw ConfigError("contour_step must be > 0");
}

LogGamma log_gamma(double x) {
  if (near_nonpositive_integer(x, kPoleTol)) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "Gamma pole at x=%.17g", x);
    throw PoleError(buf);
  }
  if (x >= 0.5) return {lanczos_lgamma_pos(x), 1};
  // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
  const double s = std::sin(M_PI * x);
  LogGamma out;
  out.log_abs = std::log(M_PI) - std::log(std::abs(s)) - lanczos_lgamma_pos(1.0 - x);
  out.sign = s > 0.0 ? 1 : -1;
  return out;
}

double gamma(double x) {
  const LogGamma lg = log_gamma(x);
  return lg.sign * std::exp(lg.log_abs);
}

std::complex<double> log_gamma(std::complex<double> z) {
  // Contour callers guarantee Re z > 0; shift the rare Re z < 0.5 case up
  // with the recurrence instead of the complex reflection formula.
  std::complex<double> shift{0.0, 0.0};
  int guard = 0;
  while (z.real() < 0.5) {
    shift += std::log(z);
    z += 1.0;
    if (++guard > 64) throw PoleError("complex log_gamma: argument too far left");
  }
  const std::complex<double> zz = z - 1.0;
  std::complex<double> series{kLanczos[0], 0.0};
  for (int i = 1; i < 9; ++i) series += kLanczos[i] / (zz + static_cast<double>(i));
  const std::complex<double> t = zz + (kLanczosG + 0.5);
  return 0.5 * kLog2Pi + (zz + 0.5) * std::log(t) - t + std::log(series) - shift;
}

double pochhammer(double x, int n) {
  double p = 1.0;
  for (int k = 0; k < n; ++k) p *= x + k;
  return p;
}

namespace {

void check_0f3_params(double b1, double b2, double b3) {
  for (double b : {b1, b2, b3}) {
    if (near_nonpositive_integer(b, kPoleTol)) {
      char buf[80];
      std::snprintf(buf, sizeof buf, "0F3 parameter %.17g is a nonpositive integer", b);
      throw ParamSingular(buf);
    }
  }
}

// Shared kernel for real and complex arguments. Terms follow
// t_{n+1} = t_n * x / ((n+1)(b1+n)(b2+n)(b3+n)); the loop stops once the
// latest term is below rel_tol relative to the sum AND the term ratio has
// dropped under 1/2, which certifies a geometric tail.
template <typename Scalar>
void sum_0f3(double b1, double b2, double b3, Scalar x,
             const PrecisionConfig& cfg, Scalar& sum, double& bound, int& used) {
  sum = Scalar(1);
  Scalar term(1);
  bound = 0.0;
  used = 1;
  if (std::abs(x) == 0.0) return;
  for (int n = 0; n < cfg.max_terms; ++n) {
    const Scalar next = term * x / ((n + 1.0) * (b1 + n) * (b2 + n) * (b3 + n));
    sum += next;
    ++used;
    const double ratio = std::abs(next) / std::max(std::abs(term), 1e-300);
    term = next;
    if (std::abs(next) < cfg.rel_tol * std::abs(sum) && ratio < 0.5) {
      bound = std::abs(next) * ratio / (1.0 - ratio);
      return;
    }
  }
  throw NoConvergence("0F3: max_terms reached before certified tail");
}

}  // namespace

SeriesResult hyper0f3(double b1, double b2, double b3, double x,
                      const PrecisionConfig& cfg) {
  cfg.validate();
  check_0f3_params(b1, b2, b3);
  SeriesResult r;
  sum_0f3(b1, b2, b3, x, cfg, r.value, r.error_bound, r.terms_used);
  return r;
}

ComplexSeriesResult hyper0f3(double b1, double b2, double b3,
                             std::complex<double> x, const PrecisionConfig& cfg) {
  cfg.validate();
  check_0f3_params(b1, b2, b3);
  ComplexSeriesResult r;
  sum_0f3(b1, b2, b3, x, cfg, r.value, r.error_bound, r.terms_used);
  return r;
}

MeijerG04::MeijerG04(const std::array<double, 4>& b, const PrecisionConfig& cfg)
    : b_(b), step_(cfg.contour_step) {
  cfg.validate();
  double rightmost_pole = -b[0];
  for (double bi : b) rightmost_pole = std::max(rightmost_pole, -bi);
  abscissa_ = std::isnan(cfg.contour_abscissa) ? rightmost_pole + 1.0
                                               : cfg.contour_abscissa;
  if (!(abscissa_ > rightmost_pole)) {
    char buf[96];
    std::snprintf(buf, sizeof buf,
                  "contour abscissa %.17g not right of pole at %.17g",
                  abscissa_, rightmost_pole);
    throw ContourError(buf);
  }
  const int n_nodes = static_cast<int>(std::ceil(cfg.contour_halfheight / step_)) + 1;
  weights_.resize(n_nodes);
  for (int j = 0; j < n_nodes; ++j) {
    const std::complex<double> s{abscissa_, j * step_};
    std::complex<double> lg{0.0, 0.0};
    for (double bi : b_) lg += log_gamma(std::complex<double>(bi, 0.0) + s);
    // trapezoid on [-T, T]: interior nodes weight h, plus conjugate pairing
    // doubles everything except t = 0.
    weights_[j] = std::exp(lg) * (step_ / (2.0 * M_PI));
  }
}

double MeijerG04::value(double y) const {
  if (!(y > 0.0)) throw ContourError("Meijer G argument must be positive");
  // G(y) = 1/(2*pi*i) int Gamma-product y^{-s} ds,  s = c + i t.
  // y^{-s} = y^{-c} e^{-i t ln y}; conjugate symmetry folds t < 0 onto t > 0.
  const double ln_y = std::log(y);
  double acc = 0.5 * weights_[0].real();  // t = 0 node counted once
  for (std::size_t j = 1; j < weights_.size(); ++j) {
    const double t = static_cast<double>(j) * step_;
    acc += (weights_[j] * std::polar(1.0, -t * ln_y)).real();
  }
  return 2.0 * acc * std::pow(y, -abscissa_);
}

SeriesResult meijer_g_4040(const std::array<double, 4>& b, double y,
                           const PrecisionConfig& cfg) {
  cfg.validate();
  PrecisionConfig level = cfg;
  double prev = MeijerG04(b, level).value(y);
  for (int refine = 0; refine < 4; ++refine) {
    level.contour_halfheight *= 2.0;
    level.contour_step *= 0.5;
    const double cur = MeijerG04(b, level).value(y);
    const double diff = std::abs(cur - prev);
    if (diff <= cfg.rel_tol * std::max(std::abs(cur), 1e-300) || diff < 1e-300) {
      return {cur, diff, 0};
    }
    prev = cur;
  }
  throw QuadratureNotConverged("Meijer G: contour refinement did not stabilize");
}

double bessel_i(int order, double x) {
  if (order != 0 && order != 1) throw ConfigError("bessel_i supports orders 0 and 1");
  if (x < 0.0) throw ConfigError("bessel_i requires x >= 0");
  const double half = 0.5 * x;
  double term = order == 0 ? 1.0 : half;
  double sum = term;
  if (x == 0.0) return sum;
  for (int k = 1; k < 500; ++k) {
    term *= half * half / (k * (k + order));
    sum += term;
    if (term < 1e-17 * sum) return sum;
  }
  throw NoConvergence("bessel_i series did not converge");
}

}  // namespace pdem::specfun
