#include "pauliz/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "pauliz/errors.hpp"

namespace pauliz {

namespace {

void check_capacity(std::uint32_t num_qubits) {
  if (num_qubits > kMaxDenseQubits) {
    throw CapacityError("dense operations are capped at " +
                        std::to_string(kMaxDenseQubits) + " qubits, got " +
                        std::to_string(num_qubits));
  }
}

// Dense-index bit masks of a Pauli string. Qubit q maps to index bit
// N-1-q so that qubit 0 is the most significant tensor factor.
struct DenseMasks {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  int y_count = 0;
};

DenseMasks dense_masks(const PauliString& p) {
  DenseMasks m;
  const std::uint32_t n = p.num_qubits();
  for (std::uint32_t q = 0; q < n; ++q) {
    const std::uint64_t bit = 1ULL << (n - 1 - q);
    if (p.x_bit(q)) m.x |= bit;
    if (p.z_bit(q)) m.z |= bit;
    if (p.x_bit(q) && p.z_bit(q)) ++m.y_count;
  }
  return m;
}

std::complex<double> i_power(int k) {
  static constexpr std::complex<double> table[4] = {
      {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  return table[k & 3];
}

// Adds coeff * P to m. Each column c of dense(P) has a single entry at row
// c ^ x_mask with value i^{#Y} * (-1)^{popcount(c & z_mask)}.
void add_pauli(DenseOperator& m, const PauliString& p,
               std::complex<double> coeff) {
  const DenseMasks masks = dense_masks(p);
  const std::complex<double> base = coeff * i_power(masks.y_count);
  const auto dim = static_cast<std::uint64_t>(m.cols());
  for (std::uint64_t col = 0; col < dim; ++col) {
    const std::uint64_t row = col ^ masks.x;
    const double sign =
        (std::popcount(col & masks.z) & 1) ? -1.0 : 1.0;
    m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) +=
        base * sign;
  }
}

DenseOperator zero_operator(std::uint32_t num_qubits) {
  check_capacity(num_qubits);
  const auto dim = static_cast<Eigen::Index>(1ULL << num_qubits);
  return DenseOperator::Zero(dim, dim);
}

// exp(c P) = cosh(c) I + sinh(c) P, exact because P^2 = I.
DenseOperator imag_time_factor(const PauliString& p, double c) {
  DenseOperator m = zero_operator(p.num_qubits());
  m.diagonal().array() += std::cosh(c);
  add_pauli(m, p, std::sinh(c));
  return m;
}

// exp(i d P) = cos(d) I + i sin(d) P.
DenseOperator real_time_factor(const PauliString& p, double d) {
  DenseOperator m = zero_operator(p.num_qubits());
  m.diagonal().array() += std::cos(d);
  add_pauli(m, p, std::complex<double>(0.0, std::sin(d)));
  return m;
}

DenseOperator matrix_power(DenseOperator base, std::uint64_t exponent) {
  DenseOperator result =
      DenseOperator::Identity(base.rows(), base.cols());
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

DenseOperator trotter_step(const PauliHamiltonian& h,
                           const std::vector<double>& exponents,
                           bool real_time) {
  DenseOperator step =
      DenseOperator::Identity(1LL << h.num_qubits(), 1LL << h.num_qubits());
  for (std::size_t j = 0; j < h.num_terms(); ++j) {
    const auto& p = h.terms()[j].pauli;
    step = step * (real_time ? real_time_factor(p, exponents[j])
                             : imag_time_factor(p, exponents[j]));
  }
  return step;
}

}  // namespace

DenseOperator dense(const PauliString& p) {
  DenseOperator m = zero_operator(p.num_qubits());
  add_pauli(m, p, 1.0);
  return m;
}

DenseOperator dense(const PhasedPauli& p) {
  DenseOperator m = zero_operator(p.pauli.num_qubits());
  add_pauli(m, p.pauli, p.phase());
  return m;
}

DenseOperator dense(const PauliHamiltonian& h) {
  DenseOperator m = zero_operator(h.num_qubits());
  for (const auto& t : h.terms()) {
    add_pauli(m, t.pauli, t.coeff);
  }
  return m;
}

std::complex<double> exact_partition(const PauliHamiltonian& h,
                                     InverseTemperature beta) {
  const DenseOperator m = dense(h);
  Eigen::SelfAdjointEigenSolver<DenseOperator> solver(m,
                                                      Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigensolver failed to converge");
  }
  std::complex<double> z = 0.0;
  const std::complex<double> b = beta.value();
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    z += std::exp(-b * solver.eigenvalues()[i]);
  }
  return z;
}

TrotterTrace exact_trotter(const PauliHamiltonian& h, const TrotterPlan& plan) {
  check_capacity(h.num_qubits());
  if (plan.imag_exponents.size() != h.num_terms()) {
    throw std::invalid_argument("plan does not match hamiltonian term count");
  }
  DenseOperator t_r =
      matrix_power(trotter_step(h, plan.imag_exponents, false), plan.nu);
  if (plan.mode == PlanMode::AdditiveComplex && !plan.beta.is_real()) {
    const DenseOperator t_i =
        matrix_power(trotter_step(h, plan.real_exponents, true), plan.nu);
    t_r = t_r * t_i;
  }
  TrotterTrace out{std::move(t_r), 0.0};
  out.trace = out.op.trace();
  return out;
}

double spectral_norm(const DenseOperator& m) {
  Eigen::BDCSVD<DenseOperator> svd(m);
  return svd.singularValues()(0);
}

ValidatedAdditivePlan plan_trotter_additive_validated(
    const PauliHamiltonian& h, InverseTemperature beta, double eps_at) {
  check_capacity(h.num_qubits());
  ValidatedAdditivePlan out{plan_trotter_additive(h, beta, eps_at)};
  const std::complex<double> z = exact_partition(h, beta);
  for (std::uint32_t attempt = 0;; ++attempt) {
    out.achieved_error = std::abs(z - exact_trotter(h, out.plan).trace);
    if (out.achieved_error <= eps_at) return out;
    if (attempt >= 24) {
      throw BudgetInfeasibleError(
          "additive plan validation did not converge within 2^24 x the "
          "heuristic step count");
    }
    ++out.doublings;
    out.plan.nu *= 2;
    const auto nu_d = static_cast<double>(out.plan.nu);
    for (std::size_t j = 0; j < h.num_terms(); ++j) {
      out.plan.imag_exponents[j] = -beta.b_r * h.terms()[j].coeff / nu_d;
      out.plan.real_exponents[j] = -beta.b_i * h.terms()[j].coeff / nu_d;
    }
  }
}

BoundReport validate_bounds(const PauliHamiltonian& h, InverseTemperature beta,
                            double eps) {
  check_capacity(h.num_qubits());
  BoundReport report;
  const std::complex<double> z_complex = exact_partition(h, beta);
  report.z_exact = std::abs(z_complex);

  // (a) additive step-count bound.
  {
    const TrotterPlan plan = plan_trotter_additive(h, beta, eps);
    const TrotterTrace tt = exact_trotter(h, plan);
    report.nu_additive = plan.nu;
    report.additive_error = std::abs(z_complex - tt.trace);
    report.additive_ok = report.additive_error <= eps;
    const HamiltonianDiagnostics d = diagnostics(h);
    const double raw = std::ldexp(1.0, static_cast<int>(h.num_qubits())) *
                       beta.abs() * beta.abs() * d.omega * d.omega *
                       std::exp(beta.b_r * d.omega);
    report.additive_constant =
        raw > 0.0 ? report.additive_error * static_cast<double>(plan.nu) / raw
                  : 0.0;
  }

  if (!beta.is_real()) return report;
  report.real_beta_checks_run = true;
  const double z_real = z_complex.real();

  // (b) multiplicative step-count bound.
  const TrotterPlan plan = plan_trotter_multiplicative(h, beta.b_r, eps);
  const TrotterTrace tt = exact_trotter(h, plan);
  report.nu_multiplicative = plan.nu;
  report.multiplicative_error = std::abs(z_complex - tt.trace) / z_real;
  report.multiplicative_ok = report.multiplicative_error <= eps;

  // (c) W_nu = exp(+(beta/nu) H) T_1 and |Z_T| <= Z ||W_nu||^nu.
  const DenseOperator ham = dense(h);
  Eigen::SelfAdjointEigenSolver<DenseOperator> solver(ham);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigensolver failed to converge");
  }
  const Eigen::VectorXd inflate =
      (solver.eigenvalues().array() * (beta.b_r / static_cast<double>(plan.nu)))
          .exp();
  const DenseOperator exp_plus = solver.eigenvectors() *
                                 inflate.asDiagonal() *
                                 solver.eigenvectors().adjoint();
  const DenseOperator w_nu =
      exp_plus * trotter_step(h, plan.imag_exponents, false);
  report.w_norm_pow_nu =
      std::pow(spectral_norm(w_nu), static_cast<double>(plan.nu));
  report.trace_bound_ok =
      std::abs(tt.trace) <= z_real * report.w_norm_pow_nu * (1.0 + 1e-9);
  return report;
}

}  // namespace pauliz
