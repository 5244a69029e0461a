#include "pauliz/reduction.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "pauliz/errors.hpp"
#include "pauliz/oracle.hpp"
#include "pauliz/statevector.hpp"

namespace pauliz {

namespace {

Gate adjoint(const Gate& g) {
  Gate out = g;
  switch (g.kind) {
    case GateKind::S:
      out.kind = GateKind::Sdg;
      break;
    case GateKind::Sdg:
      out.kind = GateKind::S;
      break;
    case GateKind::Rx:
    case GateKind::Rz:
    case GateKind::Crz:
      out.angle = -g.angle;
      break;
    case GateKind::Pauli:
    case GateKind::CPauli:
      // (i^k P)^dagger = i^{-k} P for Hermitian P.
      out.phase_exp = static_cast<std::uint8_t>((4 - g.phase_exp) & 3);
      break;
    default:
      break;  // H, X, Y, Z, CX are self-adjoint
  }
  return out;
}

}  // namespace

Circuit dagger(const Circuit& c) {
  Circuit out(c.num_qubits());
  out.reserve(c.gates().size());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
    out.append(adjoint(*it));
  }
  return out;
}

HDecomposition reduce(const UDecomposition& u) {
  HDecomposition out{{}, u.sigma, u.delta, TracePart::Re};
  const std::complex<double> i_unit(0.0, 1.0);
  if (u.part == TracePart::Re) {
    out.terms.push_back({0.5, u.circuit});
    out.terms.push_back({0.5, dagger(u.circuit)});
  } else {
    out.terms.push_back({-0.5 * i_unit, u.circuit});
    out.terms.push_back({0.5 * i_unit, dagger(u.circuit)});
  }
  return out;
}

ReductionCheck verify_reduction(const UDecomposition& u) {
  if (u.sigma.num_qubits() != u.circuit.num_qubits()) {
    throw std::invalid_argument("sigma and circuit qubit counts differ");
  }
  const DenseOperator m_u = dense(u.circuit);
  const DenseOperator m_u_dag = m_u.adjoint();
  const DenseOperator m_sigma = dense(u.sigma);
  const std::complex<double> i_unit(0.0, 1.0);

  ReductionCheck check;
  check.trace_sigma_u = (m_sigma * m_u).trace();

  const DenseOperator combo_re = 0.5 * (m_u + m_u_dag);
  const DenseOperator combo_im = 0.5 * i_unit * (m_u_dag - m_u);
  check.re_discrepancy = std::abs((m_sigma * combo_re).trace().real() -
                                  check.trace_sigma_u.real());
  check.im_discrepancy = std::abs((m_sigma * combo_im).trace().real() -
                                  check.trace_sigma_u.imag());
  check.hermiticity_re =
      (combo_re - DenseOperator(combo_re.adjoint())).cwiseAbs().maxCoeff();
  check.hermiticity_im =
      (combo_im - DenseOperator(combo_im.adjoint())).cwiseAbs().maxCoeff();
  return check;
}

std::complex<double> pauli_coefficient(const Circuit& u,
                                       const PauliString& sigma) {
  if (sigma.num_qubits() != u.num_qubits()) {
    throw std::invalid_argument("sigma and circuit qubit counts differ");
  }
  const DenseOperator m = dense(sigma) * dense(u);
  return m.trace() / static_cast<double>(1ULL << u.num_qubits());
}

void write_h_decomposition(const HDecomposition& h, std::ostream& out) {
  nlohmann::json j;
  j["terms"] = nlohmann::json::array();
  for (const auto& term : h.terms) {
    std::ostringstream circuit_text;
    write_circuit(term.circuit, circuit_text);
    j["terms"].push_back({{"coeff_re", term.coeff.real()},
                          {"coeff_im", term.coeff.imag()},
                          {"circuit", nlohmann::json::parse(circuit_text.str())}});
  }
  j["sigma"] = h.sigma.str();
  j["delta"] = h.delta;
  j["part"] = h.part == TracePart::Re ? "Re" : "Im";
  out << j.dump(2) << "\n";
}

HDecomposition parse_h_decomposition(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("terms") || !j.contains("sigma") ||
      !j.contains("delta") || !j.contains("part")) {
    throw SchemaError("h-decomposition JSON needs terms, sigma, delta, part");
  }
  HDecomposition h{{}, PauliString(1), 0.0, TracePart::Re};
  try {
    h.sigma = PauliString::parse(j["sigma"].get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
  h.delta = j["delta"].get<double>();
  const auto part = j["part"].get<std::string>();
  if (part != "Re" && part != "Im") {
    throw SchemaError("part must be Re or Im");
  }
  h.part = part == "Re" ? TracePart::Re : TracePart::Im;
  for (const auto& jt : j["terms"]) {
    std::istringstream circuit_text(jt["circuit"].dump());
    h.terms.push_back(
        {{jt["coeff_re"].get<double>(), jt["coeff_im"].get<double>()},
         parse_circuit(circuit_text)});
  }
  return h;
}

}  // namespace pauliz
