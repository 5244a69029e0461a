#pragma once

#include <cstdint>

#include "pauliz/circuit.hpp"
#include "pauliz/hamiltonian.hpp"
#include "pauliz/rng.hpp"
#include "pauliz/sampler.hpp"

namespace pauliz {

/// Statevector capacity of the one-clean-qubit simulator (register + clean).
inline constexpr std::uint32_t kMaxSimQubits = 14;

enum class TracePart { Re, Im };

/// Expectation mode evaluates the exact clean-qubit <X> or <Y> for each
/// sampled register basis state; measurement mode additionally samples the
/// +-1 outcome, matching the physical protocol.
enum class TraceMode { Expectation, Measurement };

/// One-clean-qubit trace estimation: the register input is maximally mixed,
/// simulated by drawing uniformly random basis states (or by enumerating all
/// of them when `enumerate_basis` is set, which makes expectation mode
/// exact). Returns the estimate of Re or Im of tr(V) / 2^N.
double dqc1_trace(const Circuit& v, TracePart part, std::uint64_t shots,
                  TraceMode mode, CounterRng& rng,
                  bool enumerate_basis = false);

/// Partition function at complex beta: plans nu for half the budget, then
/// per shot samples an identity-or-Pauli branch path through the imaginary-
/// gadgets, interleaves the real-time gadgets, and estimates Re and Im of
/// the controlled-circuit trace. Guarantee: |Z_hat - Z| <= eps_a with
/// probability >= 1 - delta (Trotter half plus Hoeffding sampling half).
EstimateReport dqc1_partition_complex(const PauliHamiltonian& h,
                                      InverseTemperature beta, double eps_a,
                                      double delta, std::uint64_t seed,
                                      int workers = 1);

}  // namespace pauliz
