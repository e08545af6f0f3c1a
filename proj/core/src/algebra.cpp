#include "pdem/algebra.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace pdem::algebra {

std::vector<double> BandOperator::apply(const std::vector<double>& x) const {
  const std::size_t n = x.size();
  std::vector<double> y(n, 0.0);
  if (!diag.empty()) {
    for (std::size_t i = 0; i < n; ++i) y[i] += diag[i] * x[i];
  }
  if (band_offset == -1) {
    // band[n] multiplies e_n -> e_{n-1}; band[0] is 0 (vacuum annihilation).
    for (std::size_t i = 1; i < n; ++i) y[i - 1] += band[i] * x[i];
  } else if (band_offset == +1) {
    // band[n] multiplies e_n -> e_{n+1}.
    for (std::size_t i = 0; i + 1 < n; ++i) y[i + 1] += band[i] * x[i];
  }
  return y;
}

namespace {

double lsq_at(double lambda_prime, long n) {
  return static_cast<double>(n) - lambda_prime * n * (n + 1.0);
}

}  // namespace

FockRealization build_realization(double lambda_prime, int dim, Mode mode,
                                  double alpha) {
  if (dim < 2) throw ConfigError("build_realization needs dim >= 2");
  if (!(alpha > 0.0)) throw ConfigError("alpha must be positive");

  FockRealization r;
  r.lambda_prime = lambda_prime;
  r.lambda_tilde = 2.0 * lambda_prime;
  r.alpha = alpha;
  r.mode = mode;

  if (lambda_prime > 0.0) {
    // l_sq[n] >= 0 iff n + 1 <= 1/lambda'; beyond that the ladder terminates.
    long n = 0;
    while (lsq_at(lambda_prime, n + 1) >= 0.0) ++n;
    r.n_max_physical = n;
    if (mode == Mode::physical) dim = std::min<long>(dim, r.n_max_physical + 1);
  } else {
    r.n_max_physical = -1;  // unbounded
  }
  r.dim = std::max(dim, 2);

  r.l_sq.resize(r.dim);
  r.energy.resize(r.dim);
  r.rep_m.resize(r.dim);
  r.gen_factorial.resize(r.dim);
  r.alpha_seq.resize(r.dim + 1);
  r.r_seq.resize(r.dim + 1);
  r.alpha_seq[0] = r.r_seq[0] = std::numeric_limits<double>::quiet_NaN();
  for (int n = 0; n < r.dim; ++n) {
    r.l_sq[n] = lsq_at(lambda_prime, n);
    r.energy[n] = alpha * (r.l_sq[n] + 0.5);
    r.rep_m[n] = r.l_sq[n] + 0.5;
    r.gen_factorial[n] = n == 0 ? 1.0 : r.gen_factorial[n - 1] * r.l_sq[n];
  }
  for (int n = 1; n <= r.dim; ++n) {
    r.alpha_seq[n] = 1.0 - (n - 1) * r.lambda_tilde;
    r.r_seq[n] = 1.0 - n * r.lambda_tilde;
  }
  return r;
}

namespace {

std::vector<double> sqrt_band(const FockRealization& r) {
  std::vector<double> out(r.dim);
  for (int n = 0; n < r.dim; ++n) {
    if (r.l_sq[n] < 0.0) {
      char buf[96];
      std::snprintf(buf, sizeof buf,
                    "L ladder needs sqrt of negative l_sq[%d]=%.17g", n, r.l_sq[n]);
      throw NegativeCoefficient(buf);
    }
    out[n] = std::sqrt(r.l_sq[n]);
  }
  return out;
}

}  // namespace

BandOperator FockRealization::lower() const { return {{}, -1, sqrt_band(*this)}; }

BandOperator FockRealization::raise() const {
  // Superdiagonal entry at n is sqrt(l_sq[n+1]); store shifted so band[n]
  // multiplies e_n.
  auto s = sqrt_band(*this);
  std::vector<double> band(dim, 0.0);
  for (int n = 0; n + 1 < dim; ++n) band[n] = s[n + 1];
  return {{}, +1, band};
}

BandOperator FockRealization::k_lower() const { return {{}, -1, l_sq}; }

BandOperator FockRealization::k_raise() const {
  std::vector<double> band(dim, 0.0);
  for (int n = 0; n + 1 < dim; ++n) band[n] = l_sq[n + 1];
  return {{}, +1, band};
}

BandOperator FockRealization::k0() const {
  std::vector<double> d(dim);
  for (int n = 0; n < dim; ++n) d[n] = 0.5 + l_sq[n];
  return {d, 0, {}};
}

BandOperator FockRealization::h1() const { return {l_sq, 0, {}}; }

BandOperator FockRealization::hamiltonian() const {
  std::vector<double> d(dim);
  for (int n = 0; n < dim; ++n) d[n] = alpha * (l_sq[n] + 0.5);
  return {d, 0, {}};
}

AlgebraReport check_algebra(const FockRealization& real) {
  if (real.dim < 3) throw ConfigError("check_algebra needs dim >= 3");
  AlgebraReport rep;
  const int interior = real.dim - 1;  // indices 0..dim-2
  const double lt = real.lambda_tilde;

  rep.ll_commutator_diag.resize(interior);
  rep.rhat_diag.resize(interior);
  rep.kk_closure_residual.resize(interior);
  rep.casimir_diag.resize(interior);

  for (int n = 0; n < interior; ++n) {
    // [L-, L+] e_n = (l_sq[n+1] - l_sq[n]) e_n (valid away from the edge).
    const double ll = real.l_sq[n + 1] - real.l_sq[n];
    const double rhat = 1.0 - lt * (n + 1);
    rep.ll_commutator_diag[n] = ll;
    rep.rhat_diag[n] = rhat;
    rep.max_ll_vs_rhat = std::max(rep.max_ll_vs_rhat, std::abs(ll - rhat));
    rep.max_ll_vs_scalar_one = std::max(rep.max_ll_vs_scalar_one, std::abs(ll - 1.0));

    const double kk = real.l_sq[n + 1] * real.l_sq[n + 1] -
                      real.l_sq[n] * real.l_sq[n];
    const double two_k0 = 1.0 + 2.0 * real.l_sq[n];
    rep.kk_closure_residual[n] = std::abs(kk - two_k0);
    rep.max_kk_closure = std::max(rep.max_kk_closure, rep.kk_closure_residual[n]);

    const double casimir =
        real.l_sq[n] * real.l_sq[n] -
        (0.5 + real.l_sq[n]) * (real.l_sq[n] - 0.5);
    rep.casimir_diag[n] = casimir;
    rep.max_casimir_dev = std::max(rep.max_casimir_dev, std::abs(casimir - 0.25));
  }

  // [L-, R-hat] subdiagonal at n is l(n) (R_n - R_{n-1}); compare against
  // both sign conventions of +/- lambda_tilde L-.
  for (int n = 1; n < interior; ++n) {
    if (real.l_sq[n] < 0.0) continue;  // formal mode past the physical ladder
    const double l = std::sqrt(real.l_sq[n]);
    const double comm = l * ((1.0 - lt * (n + 1)) - (1.0 - lt * n));
    rep.max_lr_minus_sign = std::max(rep.max_lr_minus_sign, std::abs(comm + lt * l));
    rep.max_lr_plus_sign = std::max(rep.max_lr_plus_sign, std::abs(comm - lt * l));
  }
  return rep;
}

EigenstateBuild build_eigenstate(const FockRealization& real, int n) {
  if (n >= real.dim) throw ConfigError("build_eigenstate: n >= dim");
  if (real.mode == Mode::physical && real.n_max_physical >= 0 &&
      n > real.n_max_physical)
    throw ConfigError("build_eigenstate: n beyond the physical ladder");

  const BandOperator lp = real.raise();
  std::vector<double> v(real.dim, 0.0);
  v[0] = 1.0;
  for (int k = 0; k < n; ++k) v = lp.apply(v);
  const double norm = std::sqrt(std::abs(real.gen_factorial[n]));
  if (norm == 0.0) throw NegativeCoefficient("generalized factorial vanished");
  for (double& x : v) x /= norm;

  EigenstateBuild out;
  out.vec = v;
  for (int i = 0; i < real.dim; ++i) {
    const double expect = i == n ? 1.0 : 0.0;
    out.deviation_from_basis = std::max(out.deviation_from_basis,
                                        std::abs(v[i] - expect));
  }
  return out;
}

double shift_params(double alpha_n, double lambda_tilde) {
  return alpha_n - lambda_tilde;
}

}  // namespace pdem::algebra
