#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "pauliz/circuit.hpp"
#include "pauliz/oracle.hpp"

namespace pauliz {

/// Dense 2^n statevector. Basis-index convention matches the dense oracle:
/// qubit 0 is the most significant index bit.
class StateVector {
 public:
  explicit StateVector(std::uint32_t num_qubits);

  std::uint32_t num_qubits() const { return num_qubits_; }
  void set_basis_state(std::uint64_t index);

  const std::vector<std::complex<double>>& amplitudes() const { return amp_; }
  std::complex<double> amplitude(std::uint64_t index) const {
    return amp_[index];
  }

  /// Applies one gate. `qubit_offset` shifts every qubit index of the gate
  /// (used to embed a register circuit below a clean qubit);
  /// `extra_control`, when >= 0, restricts the action to amplitudes where
  /// that qubit is 1, turning the gate into its controlled version.
  void apply(const Gate& g, std::uint32_t qubit_offset = 0,
             int extra_control = -1);
  void apply(const Circuit& c, std::uint32_t qubit_offset = 0,
             int extra_control = -1);

  double norm() const;

 private:
  std::uint64_t index_bit(std::uint32_t qubit) const {
    return 1ULL << (num_qubits_ - 1 - qubit);
  }

  std::uint32_t num_qubits_;
  std::vector<std::complex<double>> amp_;
};

/// Dense unitary of a circuit, built column by column through the simulator.
DenseOperator dense(const Circuit& c);

}  // namespace pauliz
