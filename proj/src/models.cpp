#include "pauliz/models.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "pauliz/errors.hpp"

namespace pauliz {

PauliHamiltonian random_hamiltonian(CounterRng& rng, std::uint32_t max_qubits,
                                    std::uint32_t max_terms) {
  if (max_qubits == 0 || max_terms == 0) {
    throw std::invalid_argument("need at least one qubit and one term");
  }
  const auto num_qubits =
      static_cast<std::uint32_t>(1 + rng.next_below(max_qubits));
  const auto num_terms =
      static_cast<std::uint32_t>(1 + rng.next_below(max_terms));

  std::vector<PauliTerm> terms;
  terms.reserve(num_terms);
  const std::uint64_t distinct_strings = (1ULL << (2 * num_qubits)) - 1;
  for (std::uint32_t j = 0; j < num_terms; ++j) {
    const double coeff = rng.next_uniform(-1.0, 1.0);
    if (terms.size() >= distinct_strings) break;  // 1 qubit, 4 terms
    for (;;) {
      PauliString p(num_qubits);
      for (std::uint32_t q = 0; q < num_qubits; ++q) {
        p.set_letter(q,
                     static_cast<PauliString::Letter>(rng.next_below(4)));
      }
      if (p.is_identity()) continue;
      const bool duplicate =
          std::any_of(terms.begin(), terms.end(),
                      [&](const PauliTerm& t) { return t.pauli == p; });
      if (duplicate) continue;
      terms.push_back(PauliTerm{coeff, std::move(p)});
      break;
    }
  }
  return PauliHamiltonian(num_qubits, std::move(terms));
}

PauliHamiltonian tfim(std::uint32_t n, double j, double g) {
  if (n < 2) {
    throw std::invalid_argument("tfim needs at least 2 sites");
  }
  std::vector<PauliTerm> terms;
  terms.reserve(2 * n - 1);
  for (std::uint32_t i = 0; i + 1 < n; ++i) {
    PauliString p(n);
    p.set_letter(i, PauliString::Letter::Z);
    p.set_letter(i + 1, PauliString::Letter::Z);
    terms.push_back(PauliTerm{-j, std::move(p)});
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    PauliString p(n);
    p.set_letter(i, PauliString::Letter::X);
    terms.push_back(PauliTerm{-g, std::move(p)});
  }
  return PauliHamiltonian(n, std::move(terms));
}

namespace {

// JW string for C^dag_a C_b + C^dag_b C_a with modes a < b:
// (X_a Z..Z X_b + Y_a Z..Z Y_b) / 2.
PauliString hopping_string(std::uint32_t num_modes, std::uint32_t a,
                           std::uint32_t b, PauliString::Letter end_letter) {
  PauliString p(num_modes);
  p.set_letter(a, end_letter);
  p.set_letter(b, end_letter);
  for (std::uint32_t m = a + 1; m < b; ++m) {
    p.set_letter(m, PauliString::Letter::Z);
  }
  return p;
}

}  // namespace

PauliHamiltonian hubbard_jordan_wigner(const HubbardSpec& spec) {
  if (spec.lx == 0 || spec.ly == 0) {
    throw std::invalid_argument("lattice dimensions must be positive");
  }
  const std::uint64_t num_sites =
      static_cast<std::uint64_t>(spec.lx) * spec.ly;
  if (2 * num_sites > 24) {
    throw CapacityError("hubbard mapping is capped at 24 qubits, lattice " +
                        std::to_string(spec.lx) + "x" + std::to_string(spec.ly) +
                        " needs " + std::to_string(2 * num_sites));
  }
  const auto num_modes = static_cast<std::uint32_t>(2 * num_sites);
  auto mode = [&](std::uint32_t site, std::uint32_t spin) {
    return 2 * site + spin;
  };
  auto site_at = [&](std::uint32_t x, std::uint32_t y) {
    return y * spec.lx + x;
  };

  std::vector<PauliTerm> terms;
  // Hopping: for each open-boundary edge and spin species, modes a < b.
  for (std::uint32_t y = 0; y < spec.ly; ++y) {
    for (std::uint32_t x = 0; x < spec.lx; ++x) {
      const std::uint32_t s = site_at(x, y);
      std::vector<std::uint32_t> neighbours;
      if (x + 1 < spec.lx) neighbours.push_back(site_at(x + 1, y));
      if (y + 1 < spec.ly) neighbours.push_back(site_at(x, y + 1));
      for (const std::uint32_t s2 : neighbours) {
        for (std::uint32_t spin = 0; spin < 2; ++spin) {
          const std::uint32_t a = std::min(mode(s, spin), mode(s2, spin));
          const std::uint32_t b = std::max(mode(s, spin), mode(s2, spin));
          terms.push_back(PauliTerm{
              -0.5 * spec.t,
              hopping_string(num_modes, a, b, PauliString::Letter::X)});
          terms.push_back(PauliTerm{
              -0.5 * spec.t,
              hopping_string(num_modes, a, b, PauliString::Letter::Y)});
        }
      }
    }
  }
  // Onsite: U n_up n_down = U/4 (I - Z_up - Z_down + Z_up Z_down).
  if (spec.u != 0.0) {
    for (std::uint32_t s = 0; s < num_sites; ++s) {
      for (std::uint32_t spin = 0; spin < 2; ++spin) {
        PauliString p(num_modes);
        p.set_letter(mode(s, spin), PauliString::Letter::Z);
        terms.push_back(PauliTerm{-0.25 * spec.u, std::move(p)});
      }
      PauliString p(num_modes);
      p.set_letter(mode(s, 0), PauliString::Letter::Z);
      p.set_letter(mode(s, 1), PauliString::Letter::Z);
      terms.push_back(PauliTerm{0.25 * spec.u, std::move(p)});
    }
    // Merged identity contribution; dropping it would silently shift Z.
    terms.push_back(PauliTerm{0.25 * spec.u * static_cast<double>(num_sites),
                              PauliString(num_modes)});
  }
  return PauliHamiltonian(num_modes, std::move(terms));
}

}  // namespace pauliz
