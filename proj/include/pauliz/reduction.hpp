#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include "pauliz/circuit.hpp"
#include "pauliz/dqc1.hpp"
#include "pauliz/pauli.hpp"

namespace pauliz {

/// Instance of the problem "estimate Re or Im of tr(sigma U)" for a circuit U.
struct UDecomposition {
  Circuit circuit;
  PauliString sigma;
  double delta = 0.0;
  TracePart part = TracePart::Re;
};

struct HDecompositionTerm {
  std::complex<double> coeff;
  Circuit circuit;
};

/// Instance of the same problem for a Hermitian linear combination
/// H = sum_i c_i U_i of circuits.
struct HDecomposition {
  std::vector<HDecompositionTerm> terms;
  PauliString sigma;
  double delta = 0.0;
  TracePart part = TracePart::Re;
};

/// Adjoint circuit: gate list reversed, every gate replaced by its adjoint
/// (S <-> Sdg, rotation angles negated, the rest self-adjoint).
Circuit dagger(const Circuit& c);

/// The syntactic unitary-to-Hermitian transform:
///   part Re -> {(1/2, U), (1/2, U^dagger)}
///   part Im -> {(-i/2, U), (+i/2, U^dagger)}
/// The output always asks for the real part; both combinations are Hermitian
/// and their sigma-trace reproduces Re or Im of tr(sigma U) exactly.
HDecomposition reduce(const UDecomposition& u);

struct ReductionCheck {
  double re_discrepancy = 0.0;      // |Re tr(sigma (U+U^t)/2) - Re tr(sigma U)|
  double im_discrepancy = 0.0;      // |Re tr(i sigma (U^t-U)/2) - Im tr(sigma U)|
  double hermiticity_re = 0.0;      // ||M - M^t|| for the Re combination
  double hermiticity_im = 0.0;      // same for the Im combination
  std::complex<double> trace_sigma_u;
};

/// Dense verification of the transform's defining identities.
ReductionCheck verify_reduction(const UDecomposition& u);

/// tr(dense(sigma) * dense(U)) / 2^N: the coefficient of sigma in the Pauli
/// expansion of U.
std::complex<double> pauli_coefficient(const Circuit& u,
                                       const PauliString& sigma);

/// JSON form: {"terms": [{"coeff_re": .., "coeff_im": .., "circuit": {...}}],
/// "sigma": "..", "delta": .., "part": "Re"}
void write_h_decomposition(const HDecomposition& h, std::ostream& out);
HDecomposition parse_h_decomposition(std::istream& in);

}  // namespace pauliz
