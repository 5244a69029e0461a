#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pauliz/pauli.hpp"

namespace pauliz {

enum class GateKind {
  H,
  S,
  Sdg,
  X,
  Y,
  Z,
  Rx,
  Rz,
  Cx,
  Crz,
  Pauli,   // phased Pauli string i^k * P applied to the whole register
  CPauli,  // the same, applied to the q0-controlled block only
};

/// One gate. q0 is the target for single-qubit kinds and the control for
/// Cx / Crz / CPauli; q1 is the target for Cx / Crz. The Pauli kinds carry
/// a full-width string (identity on the control position for CPauli) plus
/// a quarter-phase exponent.
struct Gate {
  GateKind kind = GateKind::H;
  std::uint32_t q0 = 0;
  std::uint32_t q1 = 0;
  double angle = 0.0;
  std::optional<PauliString> pauli;
  std::uint8_t phase_exp = 0;

  static Gate single(GateKind kind, std::uint32_t q, double angle = 0.0) {
    Gate g;
    g.kind = kind;
    g.q0 = q;
    g.angle = angle;
    return g;
  }
  static Gate h(std::uint32_t q) { return single(GateKind::H, q); }
  static Gate s(std::uint32_t q) { return single(GateKind::S, q); }
  static Gate sdg(std::uint32_t q) { return single(GateKind::Sdg, q); }
  static Gate x(std::uint32_t q) { return single(GateKind::X, q); }
  static Gate y(std::uint32_t q) { return single(GateKind::Y, q); }
  static Gate z(std::uint32_t q) { return single(GateKind::Z, q); }
  static Gate rx(std::uint32_t q, double theta) {
    return single(GateKind::Rx, q, theta);
  }
  static Gate rz(std::uint32_t q, double theta) {
    return single(GateKind::Rz, q, theta);
  }
  static Gate cx(std::uint32_t control, std::uint32_t target) {
    Gate g = single(GateKind::Cx, control);
    g.q1 = target;
    return g;
  }
  static Gate crz(std::uint32_t control, std::uint32_t target, double theta) {
    Gate g = single(GateKind::Crz, control, theta);
    g.q1 = target;
    return g;
  }
  static Gate pauli_product(PauliString p, std::uint8_t phase_exp = 0) {
    Gate g = single(GateKind::Pauli, 0);
    g.pauli = std::move(p);
    g.phase_exp = phase_exp & 3;
    return g;
  }
  static Gate controlled_pauli(std::uint32_t control, PauliString p,
                               std::uint8_t phase_exp = 0) {
    Gate g = single(GateKind::CPauli, control);
    g.pauli = std::move(p);
    g.phase_exp = phase_exp & 3;
    return g;
  }
};

/// Ordered gate list over a fixed qubit count.
class Circuit {
 public:
  explicit Circuit(std::uint32_t num_qubits);

  std::uint32_t num_qubits() const { return num_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }

  /// Validates qubit ranges and gate shape before appending.
  void append(Gate g);
  void append(const Circuit& other);
  void clear() { gates_.clear(); }
  void reserve(std::size_t n) { gates_.reserve(n); }

 private:
  std::uint32_t num_qubits_;
  std::vector<Gate> gates_;
};

/// JSON form used on disk:
/// {"num_qubits": n, "gates": [{"kind": "H"|"S"|"SDG"|"X"|"Y"|"Z"|"RX"|"RZ"|
///   "CX"|"CRZ", "qubits": [..], "angle": <float, optional>}...]}
/// The Pauli product kinds are internal to the simulator and have no file
/// representation.
Circuit parse_circuit(std::istream& in);
Circuit parse_circuit_file(const std::string& path);
void write_circuit(const Circuit& c, std::ostream& out);
std::string gate_kind_name(GateKind kind);

}  // namespace pauliz
