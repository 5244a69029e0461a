#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pauliz/pauli.hpp"

namespace pauliz {

struct PauliTerm {
  double coeff = 0.0;
  PauliString pauli;

  bool operator==(const PauliTerm&) const = default;
};

/// H = sum_j h_j P_j with real h_j. Term order is significant: the Trotter
/// product and the non-commuting sets depend on it, so it is preserved
/// verbatim through file round-trips.
class PauliHamiltonian {
 public:
  PauliHamiltonian(std::uint32_t num_qubits, std::vector<PauliTerm> terms);

  std::uint32_t num_qubits() const { return num_qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }

  bool operator==(const PauliHamiltonian&) const = default;

 private:
  std::uint32_t num_qubits_;
  std::vector<PauliTerm> terms_;
};

/// beta = b_r + i*b_i. The real part drives imaginary-time (non-unitary)
/// evolution, the imaginary part real-time (unitary) evolution.
struct InverseTemperature {
  double b_r = 0.0;
  double b_i = 0.0;

  double abs() const { return std::hypot(b_r, b_i); }
  bool is_real() const { return b_i == 0.0; }
  std::complex<double> value() const { return {b_r, b_i}; }
};

enum class PlanMode { MultiplicativeReal, AdditiveComplex };

/// Output of a step planner: nu Trotter steps, each applying
/// prod_j exp(c_j P_j) * prod_j exp(i d_j P_j) with c_j = -b_r h_j / nu and
/// d_j = -b_i h_j / nu (the real-time factors are skipped when b_i = 0).
struct TrotterPlan {
  std::uint64_t nu = 1;
  std::vector<double> imag_exponents;  // c_j, factor exp(c_j P_j)
  std::vector<double> real_exponents;  // d_j, factor exp(i d_j P_j)
  double omega = 0.0;                  // sum_j |h_j|
  double frak_h = 0.0;                 // sum_{k>=2} |h_k| N_k
  double error_budget = 0.0;           // the epsilon that produced nu
  PlanMode mode = PlanMode::MultiplicativeReal;
  InverseTemperature beta;
};

struct HamiltonianDiagnostics {
  double omega = 0.0;               // sum |h_j|
  double xi = 0.0;                  // max |h_j|
  double frak_h = 0.0;              // sum_{k>=2} |h_k| N_k
  std::vector<std::uint32_t> n_k;   // N_k for k = 2..L (index 0 <-> k = 2)
  std::size_t num_terms = 0;
  std::uint32_t num_qubits = 0;
};

/// Scalar diagnostics and the non-commuting counts N_k: the number of earlier
/// terms that fail to commute with term k. A term always commutes with
/// itself, so only z < k can qualify.
HamiltonianDiagnostics diagnostics(const PauliHamiltonian& h);

/// Step count for multiplicative Trotter error eps_mt at real beta:
/// nu = max(1, ceil(beta^2 * Omega * frak_h / ln(1 + eps_mt))).
TrotterPlan plan_trotter_multiplicative(const PauliHamiltonian& h, double beta,
                                        double eps_mt);

/// Step count for additive Trotter error eps_at at complex beta:
/// nu = max(1, ceil(2^N * |beta|^2 * Omega^2 * exp(b_r * Omega) / eps_at)).
/// The bound's hidden constant is taken as 1; see the dense-oracle
/// validation for the empirically observed constant.
TrotterPlan plan_trotter_additive(const PauliHamiltonian& h,
                                  InverseTemperature beta, double eps_at);

/// Planning heuristic for the expected sampling cost of the multiplicative
/// estimator (scaling trends only, constants are not meaningful):
/// 2^{2N} exp(2 beta Omega) / (eps_ms^2 z_hint^2) * log2(1/delta)
///   * log2(z_max / z_hint).
double expected_runtime_estimate(const PauliHamiltonian& h, double beta,
                                 double eps_ms, double delta, double z_max,
                                 double z_hint);

/// Symmetric split of a total multiplicative budget:
/// eps_ms = eps_mt = sqrt(1 + eps_m) - 1 solves
/// eps_m = eps_ms + eps_mt + eps_ms * eps_mt.
double split_multiplicative_error(double eps_m);

/// JSON file format:
/// {"num_qubits": <int>, "terms": [{"coeff": <float>, "pauli": "<IXYZ>"}...]}
PauliHamiltonian parse_hamiltonian(std::istream& in);
PauliHamiltonian parse_hamiltonian_file(const std::string& path);
void write_hamiltonian(const PauliHamiltonian& h, std::ostream& out);
void write_hamiltonian_file(const PauliHamiltonian& h, const std::string& path);

}  // namespace pauliz
