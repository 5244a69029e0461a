#pragma once

#include "pauliz/circuit.hpp"
#include "pauliz/pauli.hpp"
#include "pauliz/sampler.hpp"

namespace pauliz {

/// Compiled probabilistic gadget for exp(c P): a basis-change layer
/// (H for X, RX(+-pi/2) for Y), a CNOT ladder over the support, and two
/// central branches {I, Z} drawn with the cosh/sinh split probabilities.
/// branch-weighted sum p_id * scale * dense(identity_branch) +
/// p_pauli * scale * sign * dense(pauli_branch) equals exp(c P).
struct ImaginaryGadget {
  Circuit identity_branch;
  Circuit pauli_branch;
  PauliExpSplit split;
  bool degenerate = false;  // identity P: the gadget is the scalar e^c
  double scalar = 1.0;
};

ImaginaryGadget build_imaginary_gadget(double c, const PauliString& p);

/// Unitary circuit equal to exp(-i theta P): same conjugation structure
/// with a central RZ(2 theta). Throws std::invalid_argument for identity P
/// (a global phase has no circuit form here).
Circuit build_real_gadget(double theta, const PauliString& p);

}  // namespace pauliz
