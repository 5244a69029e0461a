#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "pauliz/hamiltonian.hpp"
#include "pauliz/pauli.hpp"

namespace pauliz {

/// Dense complex operator on 2^N dimensions; the exact ground truth that
/// every estimator in this project is tested against.
using DenseOperator = Eigen::MatrixXcd;

/// Hard cap for dense work: 2^12 x 2^12 complex entries.
inline constexpr std::uint32_t kMaxDenseQubits = 12;

/// Kronecker-product matrix of a Pauli string (qubit 0 = most significant
/// tensor factor).
DenseOperator dense(const PauliString& p);
DenseOperator dense(const PhasedPauli& p);

/// sum_j h_j * dense(P_j); Hermitian by construction.
DenseOperator dense(const PauliHamiltonian& h);

/// Z = tr(exp(-beta H)) = sum_i exp(-beta lambda_i) via Hermitian
/// eigendecomposition; valid for complex beta.
std::complex<double> exact_partition(const PauliHamiltonian& h,
                                     InverseTemperature beta);

struct TrotterTrace {
  DenseOperator op;                 // T_R (real beta) or T_R * T_I
  std::complex<double> trace;       // Z_T
};

/// Exact dense Trotter product at the plan's nu: each factor exp(c_j P_j)
/// or exp(i d_j P_j) is built from its closed form (Pauli strings square to
/// the identity), one step is the ordered factor product, and the step is
/// raised to nu by binary powering.
TrotterTrace exact_trotter(const PauliHamiltonian& h, const TrotterPlan& plan);

/// Largest singular value.
double spectral_norm(const DenseOperator& m);

struct BoundReport {
  // (a) additive bound at the planned additive step count, hidden constant
  // taken as 1; `additive_constant` is the empirically observed constant.
  std::uint64_t nu_additive = 0;
  double additive_error = 0.0;       // |Z - Z_T|
  bool additive_ok = false;          // additive_error <= eps
  double additive_constant = 0.0;

  // (b) multiplicative bound at the planned step count (real beta only).
  std::uint64_t nu_multiplicative = 0;
  double multiplicative_error = 0.0;  // |Z - Z_T| / Z
  bool multiplicative_ok = false;

  // (c) per-step error operator W_nu = exp(+(beta/nu) H) * T_1 and the trace
  // bound |Z_T| <= Z * ||W_nu||^nu.
  double w_norm_pow_nu = 0.0;
  bool trace_bound_ok = false;

  bool real_beta_checks_run = false;  // (b) and (c) need b_i = 0
  double z_exact = 0.0;
};

/// Empirical validation of the step-count bounds and the per-step trace
/// bound on one instance, all computed densely.
BoundReport validate_bounds(const PauliHamiltonian& h, InverseTemperature beta,
                            double eps);

struct ValidatedAdditivePlan {
  TrotterPlan plan;
  std::uint32_t doublings = 0;   // extra factor 2^doublings over the heuristic
  double achieved_error = 0.0;   // dense |Z - Z_T| at the final nu
};

/// Additive planner with a dense safety net: the step-count bound has an
/// unstated constant (taken as 1), so at dense-checkable sizes the step
/// count is doubled until |Z - Z_T| <= eps_at actually holds.
ValidatedAdditivePlan plan_trotter_additive_validated(
    const PauliHamiltonian& h, InverseTemperature beta, double eps_at);

}  // namespace pauliz
