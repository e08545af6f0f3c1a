#ifndef PDEM_ALGEBRA_HPP
#define PDEM_ALGEBRA_HPP

#include <vector>

#include "pdem/errors.hpp"

namespace pdem::algebra {

enum class Mode { physical, formal };

// One sub-, super- or main diagonal; the matrix carrier for the ladder and
// su(1,1) operators in the truncated Fock basis.
struct BandOperator {
  std::vector<double> diag;        // may be empty
  int band_offset = 0;             // -1 lowers, +1 raises, 0 diagonal only
  std::vector<double> band;        // off-diagonal entries, empty when offset 0

  // y = Op x in the truncated basis.
  std::vector<double> apply(const std::vector<double>& x) const;
};

// Coefficient tables of the truncated Fock realization at fixed lambda'.
// Arrays with subscript semantics n = 0..dim-1 unless noted; alpha_seq and
// r_seq are 1-based (entry [n] is alpha_n / R(alpha_n), [0] unused).
struct FockRealization {
  double lambda_prime = 0.0;
  double lambda_tilde = 0.0;  // 2 * lambda_prime
  double alpha = 1.0;         // energy scale for E_n
  int dim = 0;
  Mode mode = Mode::formal;

  std::vector<double> l_sq;           // l_sq[n] = n - lambda' n (n+1)
  long n_max_physical = 0;            // -1 sentinel means unbounded
  std::vector<double> alpha_seq;      // alpha_n = 1 - (n-1) lambda_tilde
  std::vector<double> r_seq;          // R(alpha_n) = 1 - n lambda_tilde
  std::vector<double> gen_factorial;  // [n]! = prod_{k<=n} l_sq[k]
  std::vector<double> energy;         // E_n = alpha (n + 1/2 - lambda' n(n+1))
  std::vector<double> rep_m;          // m_n = n + 1/2 - lambda' n(n+1)
  static constexpr double rep_j = -0.5;

  BandOperator lower() const;     // L-: subdiagonal sqrt(l_sq[n])
  BandOperator raise() const;     // L+: superdiagonal sqrt(l_sq[n+1])
  BandOperator k_lower() const;   // K-: subdiagonal l_sq[n]
  BandOperator k_raise() const;   // K+: superdiagonal l_sq[n+1]
  BandOperator k0() const;        // diagonal 1/2 + l_sq[n]
  BandOperator h1() const;        // diagonal l_sq[n]
  BandOperator hamiltonian() const;  // diagonal alpha (l_sq[n] + 1/2)
};

FockRealization build_realization(double lambda_prime, int dim,
                                  Mode mode = Mode::formal, double alpha = 1.0);

// Measured residuals of every identity asserted for the realization,
// over interior indices 0..dim-2 (the truncation edge is excluded).
struct AlgebraReport {
  // (a) diagonal of [L-, L+] against the operator-valued R-hat with entries
  //     1 - lambda_tilde (n+1), per basis state.
  std::vector<double> ll_commutator_diag;
  std::vector<double> rhat_diag;
  double max_ll_vs_rhat = 0.0;
  double max_ll_vs_scalar_one = 0.0;  // deviation from the scalar reading R=1

  // (b) [L-, R-hat] -/+ lambda_tilde L- subdiagonal residuals, both signs.
  double max_lr_minus_sign = 0.0;  // residual of [L-,R] - (-lt) L-
  double max_lr_plus_sign = 0.0;   // residual of [L-,R] - (+lt) L-

  // (c) per-state residual of [K-, K+] - 2 K0 (su(1,1) closure).
  std::vector<double> kk_closure_residual;
  double max_kk_closure = 0.0;

  // (d) Casimir diagonal K+K- - K0(K0-1); exact value 1/4.
  std::vector<double> casimir_diag;
  double max_casimir_dev = 0.0;
};

AlgebraReport check_algebra(const FockRealization& real);

// |phi_n> built by applying L+ n times to the vacuum and dividing by
// sqrt([n]!); must reproduce e_n to 1e-12.
struct EigenstateBuild {
  std::vector<double> vec;
  double deviation_from_basis = 0.0;
};
EigenstateBuild build_eigenstate(const FockRealization& real, int n);

// Shape-invariance translation alpha_{n+1} = alpha_n - lambda_tilde.
double shift_params(double alpha_n, double lambda_tilde);

}  // namespace pdem::algebra

#endif
