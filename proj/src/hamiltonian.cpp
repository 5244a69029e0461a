#include "pauliz/hamiltonian.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "pauliz/errors.hpp"

namespace pauliz {

PauliHamiltonian::PauliHamiltonian(std::uint32_t num_qubits,
                                   std::vector<PauliTerm> terms)
    : num_qubits_(num_qubits), terms_(std::move(terms)) {
  if (num_qubits == 0) {
    throw std::invalid_argument("hamiltonian needs at least one qubit");
  }
  for (std::size_t j = 0; j < terms_.size(); ++j) {
    if (terms_[j].pauli.num_qubits() != num_qubits) {
      throw std::invalid_argument(
          "term " + std::to_string(j) + " acts on " +
          std::to_string(terms_[j].pauli.num_qubits()) + " qubits, expected " +
          std::to_string(num_qubits));
    }
    if (!std::isfinite(terms_[j].coeff)) {
      throw std::invalid_argument("term " + std::to_string(j) +
                                  " has a non-finite coefficient");
    }
  }
}

HamiltonianDiagnostics diagnostics(const PauliHamiltonian& h) {
  HamiltonianDiagnostics d;
  d.num_terms = h.num_terms();
  d.num_qubits = h.num_qubits();
  const auto& terms = h.terms();
  for (const auto& t : terms) {
    d.omega += std::abs(t.coeff);
    d.xi = std::max(d.xi, std::abs(t.coeff));
  }
  d.n_k.reserve(terms.size() >= 2 ? terms.size() - 1 : 0);
  for (std::size_t k = 1; k < terms.size(); ++k) {
    std::uint32_t count = 0;
    for (std::size_t z = 0; z < k; ++z) {
      if (!commutes(terms[z].pauli, terms[k].pauli)) ++count;
    }
    d.n_k.push_back(count);
    d.frak_h += std::abs(terms[k].coeff) * count;
  }
  return d;
}

namespace {

std::uint64_t ceil_to_steps(double bound, const char* what) {
  if (!std::isfinite(bound) || bound > 9.0e18) {
    std::ostringstream msg;
    msg << what << " infeasible: required step count ~" << bound;
    throw BudgetInfeasibleError(msg.str());
  }
  if (bound <= 1.0) return 1;
  return static_cast<std::uint64_t>(std::ceil(bound));
}

}  // namespace

TrotterPlan plan_trotter_multiplicative(const PauliHamiltonian& h, double beta,
                                        double eps_mt) {
  if (!(eps_mt > 0.0)) {
    throw std::invalid_argument("eps_mt must be positive");
  }
  if (!std::isfinite(beta)) {
    throw std::invalid_argument("beta must be finite");
  }
  const HamiltonianDiagnostics d = diagnostics(h);
  const double bound = beta * beta * d.omega * d.frak_h / std::log1p(eps_mt);

  TrotterPlan plan;
  plan.nu = ceil_to_steps(bound, "multiplicative trotter plan");
  plan.omega = d.omega;
  plan.frak_h = d.frak_h;
  plan.error_budget = eps_mt;
  plan.mode = PlanMode::MultiplicativeReal;
  plan.beta = {beta, 0.0};
  plan.imag_exponents.reserve(h.num_terms());
  for (const auto& t : h.terms()) {
    plan.imag_exponents.push_back(-beta * t.coeff / static_cast<double>(plan.nu));
  }
  return plan;
}

TrotterPlan plan_trotter_additive(const PauliHamiltonian& h,
                                  InverseTemperature beta, double eps_at) {
  if (!(eps_at > 0.0)) {
    throw std::invalid_argument("eps_at must be positive");
  }
  const HamiltonianDiagnostics d = diagnostics(h);
  // Work in logs first: 2^N exp(b_r Omega) overflows double well before the
  // step count becomes representable.
  const double abs_beta = beta.abs();
  double bound = 0.0;
  if (abs_beta > 0.0 && d.omega > 0.0) {
    const double log_bound = h.num_qubits() * std::log(2.0) +
                             2.0 * std::log(abs_beta) +
                             2.0 * std::log(d.omega) + beta.b_r * d.omega -
                             std::log(eps_at);
    if (log_bound > 44.0) {  // e^44 ~ 1.3e19, past any addressable step count
      std::ostringstream msg;
      msg << "additive trotter plan infeasible: required step count ~e^"
          << log_bound;
      throw BudgetInfeasibleError(msg.str());
    }
    bound = std::exp(log_bound);
  }

  TrotterPlan plan;
  plan.nu = ceil_to_steps(bound, "additive trotter plan");
  plan.omega = d.omega;
  plan.frak_h = d.frak_h;
  plan.error_budget = eps_at;
  plan.mode = PlanMode::AdditiveComplex;
  plan.beta = beta;
  plan.imag_exponents.reserve(h.num_terms());
  plan.real_exponents.reserve(h.num_terms());
  for (const auto& t : h.terms()) {
    plan.imag_exponents.push_back(-beta.b_r * t.coeff /
                                  static_cast<double>(plan.nu));
    plan.real_exponents.push_back(-beta.b_i * t.coeff /
                                  static_cast<double>(plan.nu));
  }
  return plan;
}

double expected_runtime_estimate(const PauliHamiltonian& h, double beta,
                                 double eps_ms, double delta, double z_max,
                                 double z_hint) {
  if (!(eps_ms > 0.0) || !(delta > 0.0) || !(z_max > 0.0) || !(z_hint > 0.0)) {
    throw std::invalid_argument("runtime estimate budgets must be positive");
  }
  const HamiltonianDiagnostics d = diagnostics(h);
  const double dim = std::ldexp(1.0, 2 * static_cast<int>(h.num_qubits()));
  return dim * std::exp(2.0 * beta * d.omega) / (eps_ms * eps_ms * z_hint * z_hint) *
         std::log2(1.0 / delta) * std::log2(z_max / z_hint);
}

double split_multiplicative_error(double eps_m) {
  if (!(eps_m > 0.0)) {
    throw std::invalid_argument("eps_m must be positive");
  }
  return std::sqrt(1.0 + eps_m) - 1.0;
}

PauliHamiltonian parse_hamiltonian(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("hamiltonian file is not valid JSON: ") +
                      e.what());
  }
  if (!j.is_object() || !j.contains("num_qubits") || !j.contains("terms")) {
    throw SchemaError("hamiltonian JSON must have num_qubits and terms");
  }
  if (!j["num_qubits"].is_number_integer() ||
      j["num_qubits"].get<std::int64_t>() < 1) {
    throw SchemaError("num_qubits must be a positive integer");
  }
  const auto num_qubits = j["num_qubits"].get<std::uint32_t>();
  if (!j["terms"].is_array()) {
    throw SchemaError("terms must be an array");
  }

  std::vector<PauliTerm> terms;
  terms.reserve(j["terms"].size());
  for (const auto& jt : j["terms"]) {
    if (!jt.is_object() || !jt.contains("coeff") || !jt.contains("pauli") ||
        !jt["coeff"].is_number() || !jt["pauli"].is_string()) {
      throw SchemaError("each term needs a numeric coeff and a pauli string");
    }
    const double coeff = jt["coeff"].get<double>();
    if (!std::isfinite(coeff)) {
      throw SchemaError("term coefficient is not finite");
    }
    const auto text = jt["pauli"].get<std::string>();
    if (text.size() != num_qubits) {
      throw SchemaError("pauli string \"" + text + "\" has length " +
                        std::to_string(text.size()) + ", expected " +
                        std::to_string(num_qubits));
    }
    PauliString p(1);
    try {
      p = PauliString::parse(text);
    } catch (const std::invalid_argument& e) {
      throw SchemaError(e.what());
    }
    terms.push_back(PauliTerm{coeff, std::move(p)});
  }
  return PauliHamiltonian(num_qubits, std::move(terms));
}

PauliHamiltonian parse_hamiltonian_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw SchemaError("cannot open hamiltonian file: " + path);
  }
  return parse_hamiltonian(in);
}

void write_hamiltonian(const PauliHamiltonian& h, std::ostream& out) {
  nlohmann::json j;
  j["num_qubits"] = h.num_qubits();
  j["terms"] = nlohmann::json::array();
  for (const auto& t : h.terms()) {
    j["terms"].push_back({{"coeff", t.coeff}, {"pauli", t.pauli.str()}});
  }
  out << j.dump(2) << "\n";
}

void write_hamiltonian_file(const PauliHamiltonian& h, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw SchemaError("cannot open output file: " + path);
  }
  write_hamiltonian(h, out);
}

}  // namespace pauliz
