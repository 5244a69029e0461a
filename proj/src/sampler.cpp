#include "pauliz/sampler.hpp"

#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "pauliz/errors.hpp"

namespace pauliz {

PauliExpSplit pauli_exp_split(double c) {
  if (!std::isfinite(c)) {
    throw std::invalid_argument("pauli_exp_split needs a finite exponent");
  }
  PauliExpSplit s;
  if (c == 0.0) return s;
  const double a = std::abs(c);
  s.scale = std::exp(a);
  // cosh(c)/e^{|c|} = (1 + e^{-2|c|})/2 avoids overflow for large |c|.
  s.p_identity = 0.5 * (1.0 + std::exp(-2.0 * a));
  s.p_pauli = 0.5 * (1.0 - std::exp(-2.0 * a));
  s.sign = c < 0.0 ? -1.0 : 1.0;
  return s;
}

namespace {

// Flattened hot-loop view of (H, plan): non-identity terms only, with the
// analytic contribution of identity terms folded into `scale`.
struct ShotKernel {
  std::size_t words = 0;
  std::size_t num_terms = 0;         // non-identity terms
  std::vector<std::uint64_t> x;      // term-major, `words` words per term
  std::vector<std::uint64_t> z;
  std::vector<double> p_pauli;
  std::vector<std::uint8_t> negative;  // 1 iff Sigma(c_j) = -1
  std::uint64_t nu = 1;
  double scale = 1.0;                // det. identity factor * 2^N * e^{sum nu|c_j|}

  ShotKernel(const PauliHamiltonian& h, const TrotterPlan& plan) {
    if (plan.imag_exponents.size() != h.num_terms()) {
      throw std::invalid_argument("plan does not match hamiltonian term count");
    }
    nu = plan.nu;
    words = (h.num_qubits() + 63) / 64;
    double log_scale = 0.0;
    for (std::size_t j = 0; j < h.num_terms(); ++j) {
      const double c = plan.imag_exponents[j];
      if (h.terms()[j].pauli.is_identity()) {
        // exp(c I) per step is the exact scalar e^{c}.
        log_scale += static_cast<double>(nu) * c;
        continue;
      }
      const auto& xw = h.terms()[j].pauli.x_words();
      const auto& zw = h.terms()[j].pauli.z_words();
      x.insert(x.end(), xw.begin(), xw.end());
      z.insert(z.end(), zw.begin(), zw.end());
      const PauliExpSplit split = pauli_exp_split(c);
      p_pauli.push_back(split.p_pauli);
      negative.push_back(split.sign < 0.0 ? 1 : 0);
      log_scale += static_cast<double>(nu) * std::abs(c);
    }
    num_terms = p_pauli.size();
    // 2^N enters exactly; only the aggregate e^{...} factor goes through exp.
    scale = std::ldexp(std::exp(log_scale), static_cast<int>(h.num_qubits()));
  }
};

double run_shot(const ShotKernel& k, CounterRng& rng,
                std::vector<std::uint64_t>& acc_x,
                std::vector<std::uint64_t>& acc_z) {
  acc_x.assign(k.words, 0);
  acc_z.assign(k.words, 0);
  int phase_exp = 0;
  int sign_parity = 0;
  for (std::uint64_t step = 0; step < k.nu; ++step) {
    const std::uint64_t* term_x = k.x.data();
    const std::uint64_t* term_z = k.z.data();
    for (std::size_t j = 0; j < k.num_terms; ++j) {
      if (rng.next_unit() < k.p_pauli[j]) {
        phase_exp += phase_exponent_delta(acc_x.data(), acc_z.data(), term_x,
                                          term_z, k.words);
        for (std::size_t w = 0; w < k.words; ++w) {
          acc_x[w] ^= term_x[w];
          acc_z[w] ^= term_z[w];
        }
        sign_parity ^= k.negative[j];
      }
      term_x += k.words;
      term_z += k.words;
    }
  }
  std::uint64_t nonzero = 0;
  for (std::size_t w = 0; w < k.words; ++w) {
    nonzero |= acc_x[w] | acc_z[w];
  }
  if (nonzero) return 0.0;
  // Re(i^k): 1, 0, -1, 0.
  phase_exp &= 3;
  if (phase_exp & 1) return 0.0;
  double value = (phase_exp == 0) ? k.scale : -k.scale;
  return sign_parity ? -value : value;
}

// Deterministic ordered reduction: shots are grouped into fixed blocks,
// each block is summed serially by whichever worker claims it, and block
// sums are combined in block order. The result is bit-identical for any
// worker count.
constexpr std::uint64_t kShotBlock = 4096;

double run_shot_blocks(const ShotKernel& kernel, std::uint64_t num_shots,
                       std::uint64_t seed, std::uint64_t stream_offset,
                       int workers) {
  const std::uint64_t num_blocks = (num_shots + kShotBlock - 1) / kShotBlock;
  std::vector<double> block_sums(num_blocks, 0.0);
  std::atomic<std::uint64_t> next_block{0};

  auto worker_loop = [&] {
    std::vector<std::uint64_t> acc_x(kernel.words), acc_z(kernel.words);
    for (;;) {
      const std::uint64_t b = next_block.fetch_add(1);
      if (b >= num_blocks) return;
      const std::uint64_t begin = b * kShotBlock;
      const std::uint64_t end = std::min(begin + kShotBlock, num_shots);
      double sum = 0.0;
      for (std::uint64_t i = begin; i < end; ++i) {
        CounterRng rng(seed, stream_offset + i);
        sum += run_shot(kernel, rng, acc_x, acc_z);
      }
      block_sums[b] = sum;
    }
  };

  if (workers <= 1 || num_blocks == 1) {
    worker_loop();
  } else {
    std::vector<std::thread> pool;
    const int n = std::min<std::uint64_t>(workers, num_blocks);
    pool.reserve(n);
    for (int t = 0; t < n; ++t) pool.emplace_back(worker_loop);
    for (auto& t : pool) t.join();
  }

  double total = 0.0;
  for (const double s : block_sums) total += s;
  return total / static_cast<double>(num_shots);
}

std::uint64_t hoeffding_shots(double bound, double eps_a, double delta) {
  const double n = std::ceil(2.0 * bound * bound * std::log(2.0 / delta) /
                             (eps_a * eps_a));
  if (!std::isfinite(n) || n > 9.0e18) {
    std::ostringstream msg;
    msg << "sampling budget infeasible: would need ~" << n << " shots";
    throw BudgetInfeasibleError(msg.str());
  }
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(n));
}

}  // namespace

double shot_bound(const PauliHamiltonian& h, const TrotterPlan& plan) {
  double sum_abs_c = 0.0;
  for (const double c : plan.imag_exponents) sum_abs_c += std::abs(c);
  return std::ldexp(1.0, static_cast<int>(h.num_qubits())) *
         std::exp(static_cast<double>(plan.nu) * sum_abs_c);
}

double sample_shot(const PauliHamiltonian& h, const TrotterPlan& plan,
                   CounterRng& rng) {
  const ShotKernel kernel(h, plan);
  std::vector<std::uint64_t> acc_x(kernel.words), acc_z(kernel.words);
  return run_shot(kernel, rng, acc_x, acc_z);
}

EstimateReport estimate_additive(const PauliHamiltonian& h,
                                 const TrotterPlan& plan, double eps_a,
                                 double delta, std::uint64_t seed,
                                 int workers) {
  if (!(eps_a > 0.0)) throw std::invalid_argument("eps_a must be positive");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("delta must be in (0, 1)");
  }
  const ShotKernel kernel(h, plan);
  const double bound = shot_bound(h, plan);
  const std::uint64_t shots = hoeffding_shots(bound, eps_a, delta);

  const auto start = std::chrono::steady_clock::now();
  const double mean = run_shot_blocks(kernel, shots, seed, 0, workers);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  EstimateReport report;
  report.estimate = mean;
  report.mode = EstimateMode::Additive;
  report.eps_a = eps_a;
  report.delta = delta;
  report.shots_used = shots;
  report.rounds = 1;
  report.plan = plan;
  report.seed = seed;
  report.workers = workers;
  std::ostringstream notes;
  notes << shots << " shots in " << secs << " s";
  report.wall_notes = notes.str();
  return report;
}

EstimateReport estimate_multiplicative(const PauliHamiltonian& h,
                                       const TrotterPlan& plan, double eps_ms,
                                       double delta, double z_max,
                                       std::uint64_t seed, int workers) {
  if (!(eps_ms > 0.0)) throw std::invalid_argument("eps_ms must be positive");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("delta must be in (0, 1)");
  }
  if (!(z_max > 0.0)) throw std::invalid_argument("z_max must be positive");

  const ShotKernel kernel(h, plan);
  const double bound = shot_bound(h, plan);
  const double accept_factor = 1.0 + 1.0 / eps_ms;
  const auto start = std::chrono::steady_clock::now();

  std::uint64_t shots_total = 0;
  std::uint64_t stream_offset = 0;
  double estimate = 0.0;
  std::uint32_t rounds = 0;
  for (std::uint32_t r = 0;; ++r) {
    if (r > 48) {
      throw BudgetInfeasibleError(
          "partition function too small relative to z_max: no acceptance "
          "after 48 halvings");
    }
    const double eps_a = eps_ms * z_max / std::ldexp(1.0, static_cast<int>(r));
    const double delta_r = delta / std::ldexp(1.0, static_cast<int>(r) + 1);
    const std::uint64_t shots = hoeffding_shots(bound, eps_a, delta_r);
    estimate = run_shot_blocks(kernel, shots, seed, stream_offset, workers);
    stream_offset += shots;
    shots_total += shots;
    rounds = r + 1;
    if (estimate >= eps_a * accept_factor) break;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  EstimateReport report;
  report.estimate = estimate;
  report.mode = EstimateMode::Multiplicative;
  report.eps_ms = eps_ms;
  report.delta = delta;
  report.shots_used = shots_total;
  report.rounds = rounds;
  report.plan = plan;
  report.seed = seed;
  report.workers = workers;
  std::ostringstream notes;
  notes << shots_total << " shots over " << rounds << " rounds in " << secs
        << " s";
  report.wall_notes = notes.str();
  return report;
}

EstimateReport estimate_partition(const PauliHamiltonian& h, double beta,
                                  double eps_m, double delta, double z_max,
                                  std::uint64_t seed, int workers) {
  const double eps_split = split_multiplicative_error(eps_m);
  const TrotterPlan plan = plan_trotter_multiplicative(h, beta, eps_split);
  EstimateReport report =
      estimate_multiplicative(h, plan, eps_split, delta, z_max, seed, workers);
  report.eps_m = eps_m;
  report.eps_mt = eps_split;
  return report;
}

}  // namespace pauliz
