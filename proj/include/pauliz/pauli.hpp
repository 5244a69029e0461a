#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pauliz {

/// Tensor product of single-qubit Pauli operators, bit-packed as the usual
/// symplectic (x, z) pair: qubit q carries I/X/Y/Z for
/// (x, z) = (0,0)/(1,0)/(1,1)/(0,1).
///
/// Conventions, fixed project-wide:
///  - the leftmost letter of the text form is qubit 0,
///  - qubit 0 is the most significant tensor factor of the dense matrix.
class PauliString {
 public:
  enum class Letter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

  /// All-identity string on `num_qubits` qubits.
  explicit PauliString(std::uint32_t num_qubits);

  /// Parses a string over {I, X, Y, Z}; throws std::invalid_argument on an
  /// empty string or an illegal character.
  static PauliString parse(std::string_view text);

  std::string str() const;

  std::uint32_t num_qubits() const { return num_qubits_; }

  Letter letter(std::uint32_t qubit) const;
  void set_letter(std::uint32_t qubit, Letter l);

  bool x_bit(std::uint32_t qubit) const {
    return (x_[qubit >> 6] >> (qubit & 63)) & 1ULL;
  }
  bool z_bit(std::uint32_t qubit) const {
    return (z_[qubit >> 6] >> (qubit & 63)) & 1ULL;
  }

  bool is_identity() const;

  /// Number of qubits carrying a non-identity letter.
  std::uint32_t weight() const;

  const std::vector<std::uint64_t>& x_words() const { return x_; }
  const std::vector<std::uint64_t>& z_words() const { return z_; }

  bool operator==(const PauliString& other) const = default;

 private:
  std::uint32_t num_qubits_;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
};

/// A Pauli string together with a global quarter phase i^k, k in {0,1,2,3}.
/// Closed under multiplication; Hermitian iff k is even.
struct PhasedPauli {
  std::uint8_t phase_exp = 0;  // exponent k of i
  PauliString pauli;

  std::complex<double> phase() const {
    static constexpr double re[4] = {1.0, 0.0, -1.0, 0.0};
    static constexpr double im[4] = {0.0, 1.0, 0.0, -1.0};
    return {re[phase_exp & 3], im[phase_exp & 3]};
  }
};

/// Exact matrix product a*b with symplectic phase bookkeeping.
/// Throws std::invalid_argument on a qubit-count mismatch.
PhasedPauli mul(const PauliString& a, const PauliString& b);
PhasedPauli mul(const PhasedPauli& a, const PhasedPauli& b);

/// True iff a*b == b*a, i.e. the number of positions where the letters are
/// both non-identity and different is even.
bool commutes(const PauliString& a, const PauliString& b);

/// tr(p) / 2^N: the phase if p is the identity string, else 0.
std::complex<double> normalized_trace(const PhasedPauli& p);

/// Phase exponent increment picked up when multiplying a*b, before reducing
/// the masks. Exposed for the sampler's in-place accumulation loop.
int phase_exponent_delta(const std::uint64_t* ax, const std::uint64_t* az,
                         const std::uint64_t* bx, const std::uint64_t* bz,
                         std::size_t words);

}  // namespace pauliz
