#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include "pauliz/hamiltonian.hpp"
#include "pauliz/rng.hpp"

namespace pauliz {

/// exp(c P) = e^{|c|} [ p_identity * I + p_pauli * sign * P ]: the
/// probabilistic split that lets a non-unitary factor be implemented
/// "in the aggregate".
struct PauliExpSplit {
  double p_identity = 1.0;  // cosh(c) / e^{|c|}
  double p_pauli = 0.0;     // sinh|c| / e^{|c|}
  double sign = 1.0;        // Sigma(c), +1 for c >= 0
  double scale = 1.0;       // e^{|c|}
};

PauliExpSplit pauli_exp_split(double c);

enum class EstimateMode { Additive, Multiplicative, AdditiveComplex };

struct EstimateReport {
  std::complex<double> estimate;  // imaginary part is 0 outside DQC1 runs
  EstimateMode mode = EstimateMode::Additive;
  double eps_a = 0.0;
  double eps_ms = 0.0;
  double eps_mt = 0.0;
  double eps_m = 0.0;
  double delta = 0.0;
  std::uint64_t shots_used = 0;
  std::uint32_t rounds = 1;
  TrotterPlan plan;
  std::uint64_t seed = 0;
  int workers = 1;
  std::string wall_notes;
};

/// One Monte Carlo shot: walks the plan's nu * L branch choices in
/// term order, accumulating the drawn Pauli product, and returns
/// scale * 2^N * Re(normalized_trace(product)) * (product of drawn signs).
/// Identity terms are deterministic scalars and are folded analytically.
/// The expectation over the rng is Re tr(T_R).
double sample_shot(const PauliHamiltonian& h, const TrotterPlan& plan,
                   CounterRng& rng);

/// Largest possible |sample_shot| value: 2^N * e^{|b_r| Omega}.
double shot_bound(const PauliHamiltonian& h, const TrotterPlan& plan);

/// Hoeffding estimator: n = ceil(2 B^2 ln(2/delta) / eps_a^2) shots with
/// B = 2^N e^{|beta| Omega}; the mean lands within eps_a of Re tr(T_R)
/// with probability at least 1 - delta. Shot i always draws from rng
/// stream i, so results are identical for any worker count.
EstimateReport estimate_additive(const PauliHamiltonian& h,
                                 const TrotterPlan& plan, double eps_a,
                                 double delta, std::uint64_t seed,
                                 int workers = 1);

/// Additive-to-multiplicative wrapper: rounds r = 0, 1, ... run the additive
/// estimator at eps_a = eps_ms * z_max / 2^r with failure budget
/// delta / 2^{r+1}, accepting once the estimate clears
/// eps_a * (1 + 1/eps_ms). On acceptance
/// |Z_hat - Z_T| <= eps_ms * Z_T with probability at least 1 - delta.
EstimateReport estimate_multiplicative(const PauliHamiltonian& h,
                                       const TrotterPlan& plan, double eps_ms,
                                       double delta, double z_max,
                                       std::uint64_t seed, int workers = 1);

/// The headline estimator: splits eps_m symmetrically into sampling and
/// Trotter budgets, plans nu for the Trotter half, and runs the
/// multiplicative estimator, so that
/// P(|Z_hat - Z| <= eps_m * Z) >= 1 - delta.
EstimateReport estimate_partition(const PauliHamiltonian& h, double beta,
                                  double eps_m, double delta, double z_max,
                                  std::uint64_t seed, int workers = 1);

}  // namespace pauliz
