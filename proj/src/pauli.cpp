#include "pauliz/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace pauliz {

namespace {

std::size_t word_count(std::uint32_t num_qubits) {
  return (static_cast<std::size_t>(num_qubits) + 63) / 64;
}

void check_same_width(const PauliString& a, const PauliString& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("pauli strings act on different qubit counts: " +
                                std::to_string(a.num_qubits()) + " vs " +
                                std::to_string(b.num_qubits()));
  }
}

}  // namespace

PauliString::PauliString(std::uint32_t num_qubits)
    : num_qubits_(num_qubits),
      x_(word_count(num_qubits), 0),
      z_(word_count(num_qubits), 0) {
  if (num_qubits == 0) {
    throw std::invalid_argument("pauli string needs at least one qubit");
  }
}

PauliString PauliString::parse(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty pauli string");
  }
  PauliString p(static_cast<std::uint32_t>(text.size()));
  for (std::uint32_t q = 0; q < text.size(); ++q) {
    switch (text[q]) {
      case 'I':
        break;
      case 'X':
        p.set_letter(q, Letter::X);
        break;
      case 'Y':
        p.set_letter(q, Letter::Y);
        break;
      case 'Z':
        p.set_letter(q, Letter::Z);
        break;
      default:
        throw std::invalid_argument(std::string("illegal pauli letter '") +
                                    text[q] + "' at position " + std::to_string(q));
    }
  }
  return p;
}

std::string PauliString::str() const {
  static constexpr char letters[4] = {'I', 'X', 'Y', 'Z'};
  std::string out(num_qubits_, 'I');
  for (std::uint32_t q = 0; q < num_qubits_; ++q) {
    out[q] = letters[static_cast<int>(letter(q))];
  }
  return out;
}

PauliString::Letter PauliString::letter(std::uint32_t qubit) const {
  const bool x = x_bit(qubit);
  const bool z = z_bit(qubit);
  if (x && z) return Letter::Y;
  if (x) return Letter::X;
  if (z) return Letter::Z;
  return Letter::I;
}

void PauliString::set_letter(std::uint32_t qubit, Letter l) {
  const std::uint64_t bit = 1ULL << (qubit & 63);
  const std::size_t w = qubit >> 6;
  x_[w] &= ~bit;
  z_[w] &= ~bit;
  if (l == Letter::X || l == Letter::Y) x_[w] |= bit;
  if (l == Letter::Z || l == Letter::Y) z_[w] |= bit;
}

bool PauliString::is_identity() const {
  for (std::size_t w = 0; w < x_.size(); ++w) {
    if (x_[w] | z_[w]) return false;
  }
  return true;
}

std::uint32_t PauliString::weight() const {
  std::uint32_t count = 0;
  for (std::size_t w = 0; w < x_.size(); ++w) {
    count += static_cast<std::uint32_t>(std::popcount(x_[w] | z_[w]));
  }
  return count;
}

int phase_exponent_delta(const std::uint64_t* ax, const std::uint64_t* az,
                         const std::uint64_t* bx, const std::uint64_t* bz,
                         std::size_t words) {
  // Per qubit, with P(x,z) = i^{xz} X^x Z^z, the product a*b gains
  // i^{ax*az + bx*bz - cx*cz + 2*az*bx} relative to the canonical form of
  // the combined masks (cx, cz) = (ax^bx, az^bz).
  int k = 0;
  for (std::size_t w = 0; w < words; ++w) {
    const std::uint64_t cx = ax[w] ^ bx[w];
    const std::uint64_t cz = az[w] ^ bz[w];
    k += std::popcount(ax[w] & az[w]);
    k += std::popcount(bx[w] & bz[w]);
    k -= std::popcount(cx & cz);
    k += 2 * std::popcount(az[w] & bx[w]);
  }
  return k & 3;
}

PhasedPauli mul(const PauliString& a, const PauliString& b) {
  check_same_width(a, b);
  const std::size_t words = a.x_words().size();
  PhasedPauli out{0, PauliString(a.num_qubits())};
  out.phase_exp = static_cast<std::uint8_t>(phase_exponent_delta(
      a.x_words().data(), a.z_words().data(), b.x_words().data(),
      b.z_words().data(), words));
  for (std::uint32_t q = 0; q < a.num_qubits(); ++q) {
    const bool x = a.x_bit(q) ^ b.x_bit(q);
    const bool z = a.z_bit(q) ^ b.z_bit(q);
    if (x && z) {
      out.pauli.set_letter(q, PauliString::Letter::Y);
    } else if (x) {
      out.pauli.set_letter(q, PauliString::Letter::X);
    } else if (z) {
      out.pauli.set_letter(q, PauliString::Letter::Z);
    }
  }
  return out;
}

PhasedPauli mul(const PhasedPauli& a, const PhasedPauli& b) {
  PhasedPauli out = mul(a.pauli, b.pauli);
  out.phase_exp = static_cast<std::uint8_t>(
      (out.phase_exp + a.phase_exp + b.phase_exp) & 3);
  return out;
}

bool commutes(const PauliString& a, const PauliString& b) {
  check_same_width(a, b);
  // Symplectic inner product: parity of |{q : letters differ, both non-I}|.
  int parity = 0;
  const auto& ax = a.x_words();
  const auto& az = a.z_words();
  const auto& bx = b.x_words();
  const auto& bz = b.z_words();
  for (std::size_t w = 0; w < ax.size(); ++w) {
    parity ^= std::popcount((ax[w] & bz[w]) ^ (az[w] & bx[w])) & 1;
  }
  return parity == 0;
}

std::complex<double> normalized_trace(const PhasedPauli& p) {
  if (!p.pauli.is_identity()) return {0.0, 0.0};
  return p.phase();
}

}  // namespace pauliz
