#include "pauliz/statevector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "pauliz/errors.hpp"

namespace pauliz {

namespace {

constexpr std::uint32_t kMaxStateQubits = 26;  // 1 GiB of amplitudes

std::complex<double> i_power(int k) {
  static constexpr std::complex<double> table[4] = {
      {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  return table[k & 3];
}

}  // namespace

StateVector::StateVector(std::uint32_t num_qubits)
    : num_qubits_(num_qubits), amp_(1ULL << num_qubits) {
  if (num_qubits == 0 || num_qubits > kMaxStateQubits) {
    throw CapacityError("statevector supports 1.." +
                        std::to_string(kMaxStateQubits) + " qubits, got " +
                        std::to_string(num_qubits));
  }
  amp_[0] = 1.0;
}

void StateVector::set_basis_state(std::uint64_t index) {
  if (index >= amp_.size()) {
    throw std::invalid_argument("basis state index out of range");
  }
  std::fill(amp_.begin(), amp_.end(), std::complex<double>(0.0, 0.0));
  amp_[index] = 1.0;
}

void StateVector::apply(const Gate& g, std::uint32_t qubit_offset,
                        int extra_control) {
  const std::uint64_t dim = amp_.size();
  std::uint64_t ctrl_mask = 0;
  if (extra_control >= 0) {
    ctrl_mask |= index_bit(static_cast<std::uint32_t>(extra_control));
  }

  auto shifted = [&](std::uint32_t q) {
    const std::uint32_t sq = q + qubit_offset;
    if (sq >= num_qubits_) {
      throw std::invalid_argument("gate qubit out of simulator range");
    }
    return sq;
  };

  // The Pauli kinds act on the whole register at once.
  if (g.kind == GateKind::Pauli || g.kind == GateKind::CPauli) {
    if (g.kind == GateKind::CPauli) ctrl_mask |= index_bit(shifted(g.q0));
    const PauliString& p = *g.pauli;
    std::uint64_t xm = 0, zm = 0;
    int y_count = 0;
    for (std::uint32_t q = 0; q < p.num_qubits(); ++q) {
      const std::uint64_t bit = index_bit(shifted(q));
      if (p.x_bit(q)) xm |= bit;
      if (p.z_bit(q)) zm |= bit;
      if (p.x_bit(q) && p.z_bit(q)) ++y_count;
    }
    const std::complex<double> base = i_power(g.phase_exp + y_count);
    // amp_new[col ^ xm] = base * (-1)^{popcount(col & zm)} * amp_old[col]
    for (std::uint64_t col = 0; col < dim; ++col) {
      if ((col & ctrl_mask) != ctrl_mask) continue;
      const std::uint64_t row = col ^ xm;
      if (row < col) continue;  // each pair handled once
      const std::complex<double> f_col =
          (std::popcount(col & zm) & 1) ? -base : base;
      if (row == col) {
        amp_[col] *= f_col;
      } else {
        const std::complex<double> f_row =
            (std::popcount(row & zm) & 1) ? -base : base;
        const std::complex<double> tmp = amp_[col];
        amp_[col] = f_row * amp_[row];
        amp_[row] = f_col * tmp;
      }
    }
    return;
  }

  if (g.kind == GateKind::Cx || g.kind == GateKind::Crz) {
    ctrl_mask |= index_bit(shifted(g.q0));
  }
  const std::uint32_t target =
      (g.kind == GateKind::Cx || g.kind == GateKind::Crz) ? shifted(g.q1)
                                                          : shifted(g.q0);
  const std::uint64_t tbit = index_bit(target);

  // 2x2 matrix of the single-qubit action.
  std::complex<double> u00 = 1, u01 = 0, u10 = 0, u11 = 1;
  const std::complex<double> i_unit(0.0, 1.0);
  switch (g.kind) {
    case GateKind::H:
      u00 = u01 = u10 = std::sqrt(0.5);
      u11 = -std::sqrt(0.5);
      break;
    case GateKind::S:
      u11 = i_unit;
      break;
    case GateKind::Sdg:
      u11 = -i_unit;
      break;
    case GateKind::X:
    case GateKind::Cx:
      u00 = u11 = 0;
      u01 = u10 = 1;
      break;
    case GateKind::Y:
      u00 = u11 = 0;
      u01 = -i_unit;
      u10 = i_unit;
      break;
    case GateKind::Z:
      u11 = -1;
      break;
    case GateKind::Rx: {
      const double half = 0.5 * g.angle;
      u00 = u11 = std::cos(half);
      u01 = u10 = -i_unit * std::sin(half);
      break;
    }
    case GateKind::Rz:
    case GateKind::Crz: {
      const double half = 0.5 * g.angle;
      u00 = std::exp(-i_unit * half);
      u11 = std::exp(i_unit * half);
      u01 = u10 = 0;
      break;
    }
    default:
      break;
  }

  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & tbit) continue;
    if ((i & ctrl_mask) != ctrl_mask) continue;
    const std::uint64_t j = i | tbit;
    const std::complex<double> a0 = amp_[i];
    const std::complex<double> a1 = amp_[j];
    amp_[i] = u00 * a0 + u01 * a1;
    amp_[j] = u10 * a0 + u11 * a1;
  }
}

void StateVector::apply(const Circuit& c, std::uint32_t qubit_offset,
                        int extra_control) {
  for (const auto& g : c.gates()) {
    apply(g, qubit_offset, extra_control);
  }
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const auto& a : amp_) sum += std::norm(a);
  return std::sqrt(sum);
}

DenseOperator dense(const Circuit& c) {
  if (c.num_qubits() > kMaxDenseQubits) {
    throw CapacityError("dense circuit matrices are capped at " +
                        std::to_string(kMaxDenseQubits) + " qubits");
  }
  const auto dim = static_cast<Eigen::Index>(1ULL << c.num_qubits());
  DenseOperator m(dim, dim);
  StateVector state(c.num_qubits());
  for (Eigen::Index col = 0; col < dim; ++col) {
    state.set_basis_state(static_cast<std::uint64_t>(col));
    state.apply(c);
    for (Eigen::Index row = 0; row < dim; ++row) {
      m(row, col) = state.amplitude(static_cast<std::uint64_t>(row));
    }
  }
  return m;
}

}  // namespace pauliz
