#pragma once

#include <cstdint>

#include "pauliz/hamiltonian.hpp"
#include "pauliz/rng.hpp"

namespace pauliz {

/// Random instance of the correctness experiment: N ~ U{1..max_qubits},
/// L ~ U{1..max_terms}, coefficients ~ U[-1, 1], each term a uniformly
/// random non-identity Pauli string, all terms distinct.
PauliHamiltonian random_hamiltonian(CounterRng& rng,
                                    std::uint32_t max_qubits = 3,
                                    std::uint32_t max_terms = 4);

/// Transverse-field Ising chain, open boundary:
/// -j * sum Z_i Z_{i+1} - g * sum X_i. Needs n >= 2.
PauliHamiltonian tfim(std::uint32_t n, double j, double g);

struct HubbardSpec {
  std::uint32_t lx = 1;
  std::uint32_t ly = 1;
  double t = 1.0;  // nearest-neighbour hopping
  double u = 0.0;  // onsite interaction
};

/// 2D one-band Fermi-Hubbard model under the Jordan-Wigner mapping, open
/// boundary, modes ordered site-major / spin-minor. Hopping terms become
/// (X Z..Z X + Y Z..Z Y) / 2 strings, the onsite n_up n_down expands into
/// Z, ZZ and one merged identity term (kept so Z stays exact).
/// Capacity: 2 * lx * ly <= 24 qubits.
PauliHamiltonian hubbard_jordan_wigner(const HubbardSpec& spec);

}  // namespace pauliz
