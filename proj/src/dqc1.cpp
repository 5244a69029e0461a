#include "pauliz/dqc1.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "pauliz/errors.hpp"
#include "pauliz/gadgets.hpp"
#include "pauliz/statevector.hpp"

namespace pauliz {

namespace {

void check_sim_capacity(std::uint32_t register_qubits) {
  if (register_qubits + 1 > kMaxSimQubits) {
    throw CapacityError("one-clean-qubit simulation needs " +
                        std::to_string(register_qubits + 1) +
                        " qubits, capacity is " + std::to_string(kMaxSimQubits));
  }
}

// Runs the Fig.-1 circuit on register basis state |x>: clean qubit |0> (the
// most significant simulator qubit), H, controlled-V. Returns
// w = <x|V|x> / 2, so <X> = 2 Re w and <Y> = 2 Im w.
std::complex<double> clean_qubit_overlap(StateVector& work, const Circuit& v,
                                         std::uint64_t x) {
  work.set_basis_state(x);
  work.apply(Gate::h(0));
  work.apply(v, /*qubit_offset=*/1, /*extra_control=*/0);
  const std::uint64_t half = 1ULL << v.num_qubits();
  std::complex<double> w = 0.0;
  for (std::uint64_t r = 0; r < half; ++r) {
    w += std::conj(work.amplitude(r)) * work.amplitude(r + half);
  }
  return w;
}

double trace_shot(StateVector& work, const Circuit& v, std::uint64_t x,
                  TracePart part, TraceMode mode, CounterRng& rng) {
  if (mode == TraceMode::Expectation) {
    const std::complex<double> w = clean_qubit_overlap(work, v, x);
    return part == TracePart::Re ? 2.0 * w.real() : 2.0 * w.imag();
  }
  // Measurement mode: rotate the clean qubit into the X (or Y) eigenbasis
  // and sample the +-1 outcome.
  work.set_basis_state(x);
  work.apply(Gate::h(0));
  work.apply(v, 1, 0);
  if (part == TracePart::Im) work.apply(Gate::sdg(0));
  work.apply(Gate::h(0));
  const std::uint64_t half = 1ULL << v.num_qubits();
  double p0 = 0.0;
  for (std::uint64_t r = 0; r < half; ++r) {
    p0 += std::norm(work.amplitude(r));
  }
  return rng.next_unit() < p0 ? 1.0 : -1.0;
}

}  // namespace

double dqc1_trace(const Circuit& v, TracePart part, std::uint64_t shots,
                  TraceMode mode, CounterRng& rng, bool enumerate_basis) {
  check_sim_capacity(v.num_qubits());
  if (shots == 0) {
    throw std::invalid_argument("dqc1_trace needs at least one shot");
  }
  const std::uint64_t dim = 1ULL << v.num_qubits();
  StateVector work(v.num_qubits() + 1);
  double sum = 0.0;
  for (std::uint64_t i = 0; i < shots; ++i) {
    const std::uint64_t x = enumerate_basis ? (i % dim) : rng.next_below(dim);
    sum += trace_shot(work, v, x, part, mode, rng);
  }
  return sum / static_cast<double>(shots);
}

EstimateReport dqc1_partition_complex(const PauliHamiltonian& h,
                                      InverseTemperature beta, double eps_a,
                                      double delta, std::uint64_t seed,
                                      int workers) {
  check_sim_capacity(h.num_qubits());
  if (!(eps_a > 0.0)) throw std::invalid_argument("eps_a must be positive");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("delta must be in (0, 1)");
  }

  // Half the budget buys Trotter accuracy, half buys samples.
  const double eps_at = 0.5 * eps_a;
  const double eps_as = 0.5 * eps_a;
  const TrotterPlan plan = plan_trotter_additive(h, beta, eps_at);

  // Analytic factors and per-term sampling data.
  struct TermData {
    PauliString pauli;
    double p_pauli = 0.0;
    std::uint8_t negative = 0;
    Circuit real_gadget{1};
    bool has_real = false;
  };
  std::vector<TermData> terms;
  std::complex<double> det_factor = 1.0;
  double log_scale = 0.0;
  const auto nu_d = static_cast<double>(plan.nu);
  for (std::size_t j = 0; j < h.num_terms(); ++j) {
    const double c = plan.imag_exponents[j];
    const double d = plan.real_exponents[j];
    if (h.terms()[j].pauli.is_identity()) {
      // exp((c + i d) I) per step: a deterministic complex scalar.
      det_factor *= std::exp(std::complex<double>(nu_d * c, nu_d * d));
      continue;
    }
    TermData data{h.terms()[j].pauli};
    const PauliExpSplit split = pauli_exp_split(c);
    data.p_pauli = split.p_pauli;
    data.negative = split.sign < 0.0 ? 1 : 0;
    log_scale += nu_d * std::abs(c);
    if (d != 0.0) {
      // The plan's real-time factor is exp(i d P) = exp(-i (-d) P).
      data.real_gadget = build_real_gadget(-d, data.pauli);
      data.has_real = true;
    }
    terms.push_back(std::move(data));
  }
  const double scale =
      std::ldexp(std::exp(log_scale), static_cast<int>(h.num_qubits()));

  const double bound = std::ldexp(1.0, static_cast<int>(h.num_qubits())) *
                       std::exp(std::abs(beta.b_r) * plan.omega);
  // Each part gets eps_as / sqrt(2) at confidence delta / 2.
  const double shots_d =
      std::ceil(4.0 * bound * bound * std::log(4.0 / delta) / (eps_as * eps_as));
  if (!std::isfinite(shots_d) || shots_d > 9.0e18) {
    std::ostringstream msg;
    msg << "dqc1 sampling budget infeasible: would need ~" << shots_d
        << " shots per part";
    throw BudgetInfeasibleError(msg.str());
  }
  const auto shots = std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(shots_d));

  const std::uint64_t dim = 1ULL << h.num_qubits();
  const auto start = std::chrono::steady_clock::now();

  constexpr std::uint64_t kBlock = 256;
  const std::uint64_t num_blocks = (shots + kBlock - 1) / kBlock;
  std::vector<double> block_re(num_blocks, 0.0), block_im(num_blocks, 0.0);
  std::atomic<std::uint64_t> next_block{0};

  auto worker_loop = [&] {
    StateVector work(h.num_qubits() + 1);
    Circuit v(h.num_qubits());
    for (;;) {
      const std::uint64_t b = next_block.fetch_add(1);
      if (b >= num_blocks) return;
      const std::uint64_t begin = b * kBlock;
      const std::uint64_t end = std::min(begin + kBlock, shots);
      double sum_re = 0.0, sum_im = 0.0;
      for (std::uint64_t i = begin; i < end; ++i) {
        CounterRng rng(seed, i);
        v.clear();
        for (std::uint64_t step = 0; step < plan.nu; ++step) {
          for (const auto& t : terms) {
            if (rng.next_unit() < t.p_pauli) {
              v.append(Gate::pauli_product(t.pauli, t.negative ? 2 : 0));
            }
          }
          for (const auto& t : terms) {
            if (t.has_real) v.append(t.real_gadget);
          }
        }
        const std::uint64_t x_re = rng.next_below(dim);
        sum_re += trace_shot(work, v, x_re, TracePart::Re,
                             TraceMode::Expectation, rng);
        const std::uint64_t x_im = rng.next_below(dim);
        sum_im += trace_shot(work, v, x_im, TracePart::Im,
                             TraceMode::Expectation, rng);
      }
      block_re[b] = sum_re;
      block_im[b] = sum_im;
    }
  };

  if (workers <= 1 || num_blocks == 1) {
    worker_loop();
  } else {
    std::vector<std::thread> pool;
    const int n = std::min<std::uint64_t>(workers, num_blocks);
    for (int t = 0; t < n; ++t) pool.emplace_back(worker_loop);
    for (auto& t : pool) t.join();
  }

  double mean_re = 0.0, mean_im = 0.0;
  for (std::uint64_t b = 0; b < num_blocks; ++b) {
    mean_re += block_re[b];
    mean_im += block_im[b];
  }
  mean_re /= static_cast<double>(shots);
  mean_im /= static_cast<double>(shots);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  EstimateReport report;
  report.estimate =
      det_factor * scale * std::complex<double>(mean_re, mean_im);
  report.mode = EstimateMode::AdditiveComplex;
  report.eps_a = eps_a;
  report.delta = delta;
  report.shots_used = 2 * shots;  // one X and one Y run per sampled path
  report.rounds = 1;
  report.plan = plan;
  report.seed = seed;
  report.workers = workers;
  std::ostringstream notes;
  notes << shots << " paths (" << 2 * shots << " trace shots) in " << secs
        << " s";
  report.wall_notes = notes.str();
  return report;
}

}  // namespace pauliz
