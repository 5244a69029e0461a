#include "pauliz/circuit.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"
#include "pauliz/errors.hpp"

namespace pauliz {

Circuit::Circuit(std::uint32_t num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits == 0) {
    throw std::invalid_argument("circuit needs at least one qubit");
  }
}

void Circuit::append(Gate g) {
  auto check_qubit = [&](std::uint32_t q) {
    if (q >= num_qubits_) {
      throw std::invalid_argument("gate qubit " + std::to_string(q) +
                                  " out of range for " +
                                  std::to_string(num_qubits_) + " qubits");
    }
  };
  check_qubit(g.q0);
  switch (g.kind) {
    case GateKind::Cx:
    case GateKind::Crz:
      check_qubit(g.q1);
      if (g.q0 == g.q1) {
        throw std::invalid_argument("control and target must differ");
      }
      break;
    case GateKind::Rx:
    case GateKind::Rz:
      if (!std::isfinite(g.angle)) {
        throw std::invalid_argument("gate angle must be finite");
      }
      break;
    case GateKind::Pauli:
    case GateKind::CPauli:
      if (!g.pauli || g.pauli->num_qubits() != num_qubits_) {
        throw std::invalid_argument(
            "pauli gate must carry a string over all circuit qubits");
      }
      if (g.kind == GateKind::CPauli &&
          g.pauli->letter(g.q0) != PauliString::Letter::I) {
        throw std::invalid_argument(
            "controlled pauli must be identity on its control qubit");
      }
      break;
    default:
      break;
  }
  if (g.kind == GateKind::Crz && !std::isfinite(g.angle)) {
    throw std::invalid_argument("gate angle must be finite");
  }
  gates_.push_back(std::move(g));
}

void Circuit::append(const Circuit& other) {
  if (other.num_qubits_ != num_qubits_) {
    throw std::invalid_argument("appending circuit of different width");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

std::string gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::Sdg: return "SDG";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::Rx: return "RX";
    case GateKind::Rz: return "RZ";
    case GateKind::Cx: return "CX";
    case GateKind::Crz: return "CRZ";
    case GateKind::Pauli: return "PAULI";
    case GateKind::CPauli: return "CPAULI";
  }
  return "?";
}

namespace {

const std::unordered_map<std::string, GateKind>& named_kinds() {
  static const std::unordered_map<std::string, GateKind> map = {
      {"H", GateKind::H},   {"S", GateKind::S},     {"SDG", GateKind::Sdg},
      {"X", GateKind::X},   {"Y", GateKind::Y},     {"Z", GateKind::Z},
      {"RX", GateKind::Rx}, {"RZ", GateKind::Rz},   {"CX", GateKind::Cx},
      {"CRZ", GateKind::Crz}};
  return map;
}

bool takes_angle(GateKind kind) {
  return kind == GateKind::Rx || kind == GateKind::Rz || kind == GateKind::Crz;
}

bool two_qubit(GateKind kind) {
  return kind == GateKind::Cx || kind == GateKind::Crz;
}

}  // namespace

Circuit parse_circuit(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("circuit file is not valid JSON: ") +
                      e.what());
  }
  if (!j.is_object() || !j.contains("num_qubits") || !j.contains("gates") ||
      !j["num_qubits"].is_number_integer() || !j["gates"].is_array() ||
      j["num_qubits"].get<std::int64_t>() < 1) {
    throw SchemaError("circuit JSON must have a positive num_qubits and gates");
  }
  Circuit c(j["num_qubits"].get<std::uint32_t>());
  for (const auto& jg : j["gates"]) {
    if (!jg.is_object() || !jg.contains("kind") || !jg["kind"].is_string() ||
        !jg.contains("qubits") || !jg["qubits"].is_array()) {
      throw SchemaError("each gate needs a kind and a qubits array");
    }
    const auto kind_name = jg["kind"].get<std::string>();
    const auto it = named_kinds().find(kind_name);
    if (it == named_kinds().end()) {
      throw SchemaError("unknown gate kind \"" + kind_name + "\"");
    }
    Gate g = Gate::single(it->second, 0);
    const auto& qubits = jg["qubits"];
    const std::size_t expected = two_qubit(g.kind) ? 2 : 1;
    if (qubits.size() != expected) {
      throw SchemaError("gate " + kind_name + " needs " +
                        std::to_string(expected) + " qubit(s)");
    }
    for (const auto& q : qubits) {
      if (!q.is_number_integer() || q.get<std::int64_t>() < 0) {
        throw SchemaError("gate qubits must be non-negative integers");
      }
    }
    g.q0 = qubits[0].get<std::uint32_t>();
    if (expected == 2) g.q1 = qubits[1].get<std::uint32_t>();
    if (takes_angle(g.kind)) {
      if (!jg.contains("angle") || !jg["angle"].is_number()) {
        throw SchemaError("gate " + kind_name + " needs an angle");
      }
      g.angle = jg["angle"].get<double>();
      if (!std::isfinite(g.angle)) {
        throw SchemaError("gate angle must be finite");
      }
    }
    try {
      c.append(std::move(g));
    } catch (const std::invalid_argument& e) {
      throw SchemaError(e.what());
    }
  }
  return c;
}

Circuit parse_circuit_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw SchemaError("cannot open circuit file: " + path);
  }
  return parse_circuit(in);
}

void write_circuit(const Circuit& c, std::ostream& out) {
  nlohmann::json j;
  j["num_qubits"] = c.num_qubits();
  j["gates"] = nlohmann::json::array();
  for (const auto& g : c.gates()) {
    if (g.kind == GateKind::Pauli || g.kind == GateKind::CPauli) {
      throw SchemaError("pauli product gates have no file representation");
    }
    nlohmann::json jg;
    jg["kind"] = gate_kind_name(g.kind);
    jg["qubits"] = two_qubit(g.kind)
                       ? nlohmann::json::array({g.q0, g.q1})
                       : nlohmann::json::array({g.q0});
    if (takes_angle(g.kind)) jg["angle"] = g.angle;
    j["gates"].push_back(std::move(jg));
  }
  out << j.dump(2) << "\n";
}

}  // namespace pauliz
