#include "pauliz/gadgets.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace pauliz {

namespace {

std::vector<std::uint32_t> support(const PauliString& p) {
  std::vector<std::uint32_t> qubits;
  for (std::uint32_t q = 0; q < p.num_qubits(); ++q) {
    if (p.letter(q) != PauliString::Letter::I) qubits.push_back(q);
  }
  return qubits;
}

// Emits pre layer + forward ladder, central gate (optional), then the
// mirrored ladder + post layer, so that the circuit matrix equals
// G * Z_support-conjugation * G^dagger with G = H for X and RX(-pi/2) for Y.
void emit_conjugated(Circuit& c, const PauliString& p,
                     const std::vector<std::uint32_t>& sup,
                     const Gate* central) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  for (const std::uint32_t q : sup) {
    switch (p.letter(q)) {
      case PauliString::Letter::X:
        c.append(Gate::h(q));
        break;
      case PauliString::Letter::Y:
        c.append(Gate::rx(q, half_pi));
        break;
      default:
        break;
    }
  }
  for (std::size_t i = 0; i + 1 < sup.size(); ++i) {
    c.append(Gate::cx(sup[i], sup[i + 1]));
  }
  if (central != nullptr) c.append(*central);
  for (std::size_t i = sup.size() - 1; i-- > 0;) {
    c.append(Gate::cx(sup[i], sup[i + 1]));
  }
  for (const std::uint32_t q : sup) {
    switch (p.letter(q)) {
      case PauliString::Letter::X:
        c.append(Gate::h(q));
        break;
      case PauliString::Letter::Y:
        c.append(Gate::rx(q, -half_pi));
        break;
      default:
        break;
    }
  }
}

}  // namespace

ImaginaryGadget build_imaginary_gadget(double c, const PauliString& p) {
  ImaginaryGadget gadget{Circuit(p.num_qubits()), Circuit(p.num_qubits()),
                         pauli_exp_split(c)};
  const std::vector<std::uint32_t> sup = support(p);
  if (sup.empty()) {
    gadget.degenerate = true;
    gadget.scalar = std::exp(c);
    return gadget;
  }
  emit_conjugated(gadget.identity_branch, p, sup, nullptr);
  const Gate central = Gate::z(sup.back());
  emit_conjugated(gadget.pauli_branch, p, sup, &central);
  return gadget;
}

Circuit build_real_gadget(double theta, const PauliString& p) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("rotation angle must be finite");
  }
  const std::vector<std::uint32_t> sup = support(p);
  if (sup.empty()) {
    throw std::invalid_argument(
        "real-time gadget needs a non-identity pauli string");
  }
  Circuit circuit(p.num_qubits());
  const Gate central = Gate::rz(sup.back(), 2.0 * theta);
  emit_conjugated(circuit, p, sup, &central);
  return circuit;
}

}  // namespace pauliz
