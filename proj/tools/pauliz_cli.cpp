// pauliz: partition-function estimation for Pauli-decomposed Hamiltonians.
//
// Subcommands: estimate | plan | exact | experiment-correctness |
// experiment-sweep | reduce | gadget-check. Machine output (JSON/CSV) goes
// to stdout or --out; human diagnostics go to stderr. Exit codes: 2 input /
// schema errors, 3 infeasible budgets, 4 capacity limits.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pauliz/dqc1.hpp"
#include "pauliz/errors.hpp"
#include "pauliz/gadgets.hpp"
#include "pauliz/hamiltonian.hpp"
#include "pauliz/models.hpp"
#include "pauliz/oracle.hpp"
#include "pauliz/reduction.hpp"
#include "pauliz/sampler.hpp"
#include "pauliz/statevector.hpp"

namespace {

using nlohmann::json;
using namespace pauliz;

int default_workers() {
  if (const char* env = std::getenv("PAULIZ_WORKERS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::uint64_t random_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

InverseTemperature parse_beta(const std::string& text) {
  InverseTemperature beta;
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) {
      beta.b_r = std::stod(text);
    } else {
      beta.b_r = std::stod(text.substr(0, comma));
      beta.b_i = std::stod(text.substr(comma + 1));
    }
  } catch (const std::exception&) {
    throw SchemaError("cannot parse beta \"" + text + "\" (expected re[,im])");
  }
  if (!std::isfinite(beta.b_r) || !std::isfinite(beta.b_i)) {
    throw SchemaError("beta must be finite");
  }
  return beta;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      values.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw SchemaError("cannot parse grid value \"" + item + "\"");
    }
  }
  if (values.empty()) {
    throw SchemaError("empty grid \"" + text + "\"");
  }
  return values;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) {
    throw SchemaError("cannot open output file: " + out_path);
  }
  out << text;
}

const char* mode_name(EstimateMode mode) {
  switch (mode) {
    case EstimateMode::Additive: return "additive";
    case EstimateMode::Multiplicative: return "multiplicative";
    case EstimateMode::AdditiveComplex: return "additive-complex";
  }
  return "?";
}

json report_to_json(const EstimateReport& r) {
  json j;
  j["estimate_re"] = r.estimate.real();
  j["estimate_im"] = r.estimate.imag();
  j["mode"] = mode_name(r.mode);
  json budgets;
  if (r.eps_a > 0) budgets["eps_a"] = r.eps_a;
  if (r.eps_ms > 0) budgets["eps_ms"] = r.eps_ms;
  if (r.eps_mt > 0) budgets["eps_mt"] = r.eps_mt;
  if (r.eps_m > 0) budgets["eps_m"] = r.eps_m;
  budgets["delta"] = r.delta;
  j["budgets"] = budgets;
  j["shots_used"] = r.shots_used;
  j["rounds"] = r.rounds;
  j["nu"] = r.plan.nu;
  j["omega"] = r.plan.omega;
  j["frak_h"] = r.plan.frak_h;
  j["seed"] = r.seed;
  j["workers"] = r.workers;
  j["wall_notes"] = r.wall_notes;
  return j;
}

struct CommonOpts {
  std::string hamiltonian_path;
  std::string beta_text = "1.0";
  double eps_m = 0.098304;  // eps_ms = eps_mt = 0.048 after the symmetric split
  double eps_a = 0.0;
  double delta = 0.15;
  double zmax = 0.0;
  std::string zmax_policy;
  std::uint64_t seed = 0;
  int workers = 0;
  std::string out_path;
  std::string format = "json";
  bool check_exact = false;
  bool use_dqc1 = false;
};

double resolve_zmax(const CommonOpts& opts, const PauliHamiltonian& h,
                    InverseTemperature beta) {
  if (opts.zmax > 0.0) return opts.zmax;
  if (opts.zmax_policy == "exact2x") {
    return 2.0 * exact_partition(h, beta).real();
  }
  if (!opts.zmax_policy.empty()) {
    throw SchemaError("unknown zmax policy \"" + opts.zmax_policy + "\"");
  }
  // Fallback bound: Z <= 2^N e^{|beta| Omega}, always valid.
  const HamiltonianDiagnostics d = diagnostics(h);
  return std::ldexp(1.0, static_cast<int>(h.num_qubits())) *
         std::exp(std::abs(beta.b_r) * d.omega);
}

json config_to_json(const CommonOpts& opts, const std::string& subcommand) {
  json j;
  j["subcommand"] = subcommand;
  if (!opts.hamiltonian_path.empty()) j["hamiltonian"] = opts.hamiltonian_path;
  j["beta"] = opts.beta_text;
  j["eps_m"] = opts.eps_m;
  if (opts.eps_a > 0) j["eps_a"] = opts.eps_a;
  j["delta"] = opts.delta;
  if (opts.zmax > 0) j["zmax"] = opts.zmax;
  if (!opts.zmax_policy.empty()) j["zmax_policy"] = opts.zmax_policy;
  j["seed"] = opts.seed;
  j["workers"] = opts.workers;
  j["dqc1"] = opts.use_dqc1;
  return j;
}

int cmd_estimate(CommonOpts& opts) {
  const PauliHamiltonian h = parse_hamiltonian_file(opts.hamiltonian_path);
  const InverseTemperature beta = parse_beta(opts.beta_text);

  EstimateReport report;
  if (opts.use_dqc1) {
    if (!(opts.eps_a > 0.0)) {
      throw SchemaError("--dqc1 estimation needs --eps-a");
    }
    report = dqc1_partition_complex(h, beta, opts.eps_a, opts.delta, opts.seed,
                                    opts.workers);
  } else {
    if (!beta.is_real()) {
      throw SchemaError("complex beta needs --dqc1 (additive mode)");
    }
    const double zmax = resolve_zmax(opts, h, beta);
    report = estimate_partition(h, beta.b_r, opts.eps_m, opts.delta, zmax,
                                opts.seed, opts.workers);
  }

  if (opts.format == "csv") {
    std::ostringstream csv;
    csv << "estimate_re,estimate_im,mode,nu,omega,frak_h,shots,rounds,seed\n"
        << report.estimate.real() << "," << report.estimate.imag() << ","
        << mode_name(report.mode) << "," << report.plan.nu << ","
        << report.plan.omega << "," << report.plan.frak_h << ","
        << report.shots_used << "," << report.rounds << "," << report.seed
        << "\n";
    emit(csv.str(), opts.out_path);
    return 0;
  }
  json j;
  j["config"] = config_to_json(opts, "estimate");
  j["report"] = report_to_json(report);
  if (opts.check_exact && h.num_qubits() <= kMaxDenseQubits) {
    const std::complex<double> z = exact_partition(h, beta);
    j["exact"]["Z_re"] = z.real();
    j["exact"]["Z_im"] = z.imag();
    j["exact"]["rel_error"] = std::abs(report.estimate - z) / std::abs(z);
  }
  emit(j.dump(2) + "\n", opts.out_path);
  return 0;
}

int cmd_plan(CommonOpts& opts, const std::string& beta_grid_text,
             const std::string& eps_grid_text, bool additive, bool validate) {
  const PauliHamiltonian h = parse_hamiltonian_file(opts.hamiltonian_path);
  const HamiltonianDiagnostics d = diagnostics(h);
  const std::vector<double> betas = parse_grid(beta_grid_text);
  const std::vector<double> epsilons = parse_grid(eps_grid_text);
  if (validate && h.num_qubits() > kMaxDenseQubits) {
    throw CapacityError("--validate needs dense capacity (N <= " +
                        std::to_string(kMaxDenseQubits) + ")");
  }

  json rows = json::array();
  for (const double beta : betas) {
    for (const double eps : epsilons) {
      const TrotterPlan plan =
          additive ? plan_trotter_additive(h, {beta, 0.0}, eps)
                   : plan_trotter_multiplicative(h, beta, eps);
      json row = {{"beta", beta}, {"eps", eps}, {"nu", plan.nu}};
      if (validate) {
        const BoundReport check = validate_bounds(h, {beta, 0.0}, eps);
        row["validate"] = {{"additive_error", check.additive_error},
                           {"additive_ok", check.additive_ok},
                           {"additive_constant", check.additive_constant},
                           {"multiplicative_error", check.multiplicative_error},
                           {"multiplicative_ok", check.multiplicative_ok},
                           {"w_norm_pow_nu", check.w_norm_pow_nu},
                           {"trace_bound_ok", check.trace_bound_ok},
                           {"Z_exact", check.z_exact}};
      }
      rows.push_back(std::move(row));
    }
  }

  if (opts.format == "csv") {
    std::ostringstream csv;
    csv << "beta,eps,nu\n";
    for (const auto& row : rows) {
      csv << row["beta"].get<double>() << "," << row["eps"].get<double>() << ","
          << row["nu"].get<std::uint64_t>() << "\n";
    }
    emit(csv.str(), opts.out_path);
    return 0;
  }
  json j;
  j["config"] = config_to_json(opts, "plan");
  j["diagnostics"] = {{"omega", d.omega},
                      {"xi", d.xi},
                      {"frak_h", d.frak_h},
                      {"n_k", d.n_k},
                      {"L", d.num_terms},
                      {"N", d.num_qubits}};
  j["mode"] = additive ? "additive" : "multiplicative";
  j["table"] = rows;
  emit(j.dump(2) + "\n", opts.out_path);
  return 0;
}

int cmd_exact(CommonOpts& opts) {
  const PauliHamiltonian h = parse_hamiltonian_file(opts.hamiltonian_path);
  const InverseTemperature beta = parse_beta(opts.beta_text);
  const std::complex<double> z = exact_partition(h, beta);
  if (opts.format == "csv") {
    std::ostringstream csv;
    csv << "Z_re,Z_im,N,L\n"
        << z.real() << "," << z.imag() << "," << h.num_qubits() << ","
        << h.num_terms() << "\n";
    emit(csv.str(), opts.out_path);
    return 0;
  }
  json j;
  j["config"] = config_to_json(opts, "exact");
  j["Z_re"] = z.real();
  j["Z_im"] = z.imag();
  j["N"] = h.num_qubits();
  j["L"] = h.num_terms();
  emit(j.dump(2) + "\n", opts.out_path);
  return 0;
}

int cmd_experiment_correctness(CommonOpts& opts, int instances) {
  std::ostringstream csv;
  csv << "instance,seed,N,L,beta,Z_exact,Z_est,rel_error\n";
  for (int i = 0; i < instances; ++i) {
    const std::uint64_t instance_seed =
        CounterRng::mix64(opts.seed + 0x9E37 * static_cast<std::uint64_t>(i) + 1);
    CounterRng rng(instance_seed, 0);
    const PauliHamiltonian h = random_hamiltonian(rng);
    const double beta = rng.next_uniform(0.1, 2.0);
    const double z_exact = exact_partition(h, {beta, 0.0}).real();
    const EstimateReport report =
        estimate_partition(h, beta, opts.eps_m, opts.delta, 2.0 * z_exact,
                           instance_seed, opts.workers);
    const double rel =
        std::abs(report.estimate.real() - z_exact) / z_exact;
    csv << i << "," << instance_seed << "," << h.num_qubits() << ","
        << h.num_terms() << "," << beta << "," << z_exact << ","
        << report.estimate.real() << "," << rel << "\n";
    std::cerr << "instance " << i << ": N=" << h.num_qubits()
              << " L=" << h.num_terms() << " beta=" << beta
              << " rel_error=" << rel << "\n";
  }
  emit(csv.str(), opts.out_path);
  return 0;
}

int cmd_experiment_sweep(CommonOpts& opts, std::uint32_t lx, std::uint32_t ly,
                         double t, const std::string& beta_grid_text,
                         const std::string& u_grid_text) {
  const std::vector<double> beta_grid = parse_grid(beta_grid_text);
  const std::vector<double> u_grid = parse_grid(u_grid_text);
  std::ostringstream csv;
  csv << "beta_tilde,u_tilde,N,L,nu,omega,frak_h,xi,shots,rounds,"
         "wall_seconds,Z_exact,Z_est,rel_error\n";
  for (const double u_tilde : u_grid) {
    for (const double beta_tilde : beta_grid) {
      const HubbardSpec spec{lx, ly, t, u_tilde * t};
      const PauliHamiltonian h = hubbard_jordan_wigner(spec);
      const double beta = beta_tilde / t;
      const HamiltonianDiagnostics d = diagnostics(h);
      double z_exact = std::nan("");
      if (h.num_qubits() <= kMaxDenseQubits) {
        z_exact = exact_partition(h, {beta, 0.0}).real();
      }
      const double zmax = opts.zmax > 0.0
                              ? opts.zmax
                              : (std::isfinite(z_exact)
                                     ? 2.0 * z_exact
                                     : std::ldexp(1.0, h.num_qubits()) *
                                           std::exp(beta * d.omega));
      const auto start = std::chrono::steady_clock::now();
      const EstimateReport report = estimate_partition(
          h, beta, opts.eps_m, opts.delta, zmax, opts.seed, opts.workers);
      const double secs = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - start)
                              .count();
      const double rel = std::isfinite(z_exact)
                             ? std::abs(report.estimate.real() - z_exact) /
                                   z_exact
                             : std::nan("");
      csv << beta_tilde << "," << u_tilde << "," << h.num_qubits() << ","
          << h.num_terms() << "," << report.plan.nu << "," << d.omega << ","
          << d.frak_h << "," << d.xi << "," << report.shots_used << ","
          << report.rounds << "," << secs << "," << z_exact << ","
          << report.estimate.real() << "," << rel << "\n";
      std::cerr << "sweep point beta~=" << beta_tilde << " U~=" << u_tilde
                << ": nu=" << report.plan.nu << " shots=" << report.shots_used
                << " wall=" << secs << "s\n";
    }
  }
  emit(csv.str(), opts.out_path);
  return 0;
}

int cmd_reduce(CommonOpts& opts, const std::string& circuit_path,
               const std::string& sigma_text, double delta,
               const std::string& part_text, bool verify) {
  const Circuit circuit = parse_circuit_file(circuit_path);
  PauliString sigma(1);
  try {
    sigma = PauliString::parse(sigma_text);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
  if (sigma.num_qubits() != circuit.num_qubits()) {
    throw SchemaError("sigma length does not match circuit qubit count");
  }
  if (part_text != "Re" && part_text != "Im") {
    throw SchemaError("--part must be Re or Im");
  }
  const UDecomposition u{circuit, sigma, delta,
                         part_text == "Re" ? TracePart::Re : TracePart::Im};
  const HDecomposition h = reduce(u);

  std::ostringstream h_text;
  write_h_decomposition(h, h_text);
  json j = json::parse(h_text.str());
  if (verify) {
    if (circuit.num_qubits() > 10) {
      throw CapacityError("--verify is capped at 10 qubits");
    }
    const ReductionCheck check = verify_reduction(u);
    j["verify"] = {{"re_discrepancy", check.re_discrepancy},
                   {"im_discrepancy", check.im_discrepancy},
                   {"hermiticity_re", check.hermiticity_re},
                   {"hermiticity_im", check.hermiticity_im},
                   {"trace_sigma_u_re", check.trace_sigma_u.real()},
                   {"trace_sigma_u_im", check.trace_sigma_u.imag()}};
  }
  emit(j.dump(2) + "\n", opts.out_path);
  return 0;
}

int cmd_gadget_check(CommonOpts& opts, const std::string& pauli_text,
                     int samples) {
  PauliString p(1);
  try {
    p = PauliString::parse(pauli_text);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
  if (p.is_identity()) {
    throw SchemaError("gadget check needs a non-identity pauli");
  }
  if (p.num_qubits() > 10) {
    throw CapacityError("gadget check is capped at 10 qubits");
  }
  CounterRng rng(opts.seed, 0);
  const DenseOperator hp = dense(p);
  Eigen::SelfAdjointEigenSolver<DenseOperator> solver(hp);
  double max_real_err = 0.0, max_imag_err = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double theta = rng.next_uniform(-std::numbers::pi, std::numbers::pi);
    const double c = rng.next_uniform(-3.0, 3.0);

    const Circuit real_gadget = build_real_gadget(theta, p);
    const std::complex<double> i_unit(0.0, 1.0);
    const Eigen::VectorXcd real_phases =
        (-i_unit * theta * solver.eigenvalues().cast<std::complex<double>>())
            .array()
            .exp();
    const DenseOperator expected_real = solver.eigenvectors() *
                                        real_phases.asDiagonal() *
                                        solver.eigenvectors().adjoint();
    max_real_err = std::max(
        max_real_err,
        (dense(real_gadget) - expected_real).cwiseAbs().maxCoeff());

    const ImaginaryGadget gadget = build_imaginary_gadget(c, p);
    const DenseOperator weighted =
        gadget.split.p_identity * gadget.split.scale *
            dense(gadget.identity_branch) +
        gadget.split.p_pauli * gadget.split.scale * gadget.split.sign *
            dense(gadget.pauli_branch);
    const Eigen::VectorXd imag_scales =
        (solver.eigenvalues().array() * c).exp();
    const DenseOperator expected_imag = solver.eigenvectors() *
                                        imag_scales.asDiagonal() *
                                        solver.eigenvectors().adjoint();
    max_imag_err = std::max(
        max_imag_err, (weighted - expected_imag).cwiseAbs().maxCoeff());
  }
  json j;
  j["config"] = config_to_json(opts, "gadget-check");
  j["pauli"] = pauli_text;
  j["samples"] = samples;
  j["max_real_gadget_error"] = max_real_err;
  j["max_imaginary_gadget_error"] = max_imag_err;
  j["pass"] = max_real_err < 1e-10 && max_imag_err < 1e-10;
  emit(j.dump(2) + "\n", opts.out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partition-function estimation for Pauli-decomposed "
               "Hamiltonians"};
  app.require_subcommand(1);

  CommonOpts opts;
  int instances = 100;
  std::string beta_grid = "1.0";
  std::string eps_grid = "0.048";
  bool plan_validate = false;
  std::string u_grid = "0.25,1.25";
  std::string sweep_beta_grid = "0.25,1.25";
  bool plan_additive = false;
  std::uint32_t lx = 1, ly = 2;
  double hubbard_t = 1.0;
  std::string circuit_path, sigma_text, part_text = "Re";
  double reduce_delta = 0.01;
  bool verify = false;
  std::string gadget_pauli;
  int gadget_samples = 20;
  bool seed_given = false;

  auto add_common = [&](CLI::App* cmd, bool needs_hamiltonian) {
    if (needs_hamiltonian) {
      cmd->add_option("--hamiltonian", opts.hamiltonian_path,
                      "Hamiltonian JSON file")
          ->required();
    }
    cmd->add_option("--seed", opts.seed, "RNG seed (random if omitted)")
        ->each([&](const std::string&) { seed_given = true; });
    cmd->add_option("--workers", opts.workers,
                    "worker threads (default: PAULIZ_WORKERS or hardware)");
    cmd->add_option("--out", opts.out_path, "output file (default stdout)");
    cmd->add_option("--format", opts.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  auto* estimate = app.add_subcommand("estimate", "estimate Z = tr(exp(-bH))");
  add_common(estimate, true);
  estimate->add_option("--beta", opts.beta_text, "inverse temperature re[,im]");
  estimate->add_option("--eps-m", opts.eps_m, "total multiplicative error");
  estimate->add_option("--eps-a", opts.eps_a, "additive error (dqc1 mode)");
  estimate->add_option("--delta", opts.delta, "failure probability");
  estimate->add_option("--zmax", opts.zmax, "upper bound on Z");
  estimate->add_option("--zmax-policy", opts.zmax_policy,
                       "zmax policy: exact2x (dense 2Z, small N)");
  estimate->add_flag("--check-exact", opts.check_exact,
                     "append dense Z and relative error (N <= 12)");
  estimate->add_flag("--dqc1", opts.use_dqc1,
                     "complex-beta one-clean-qubit simulation (additive)");

  auto* plan = app.add_subcommand("plan", "diagnostics and step-count table");
  add_common(plan, true);
  plan->add_option("--beta-grid", beta_grid, "comma-separated betas");
  plan->add_option("--eps-grid", eps_grid, "comma-separated error budgets");
  plan->add_flag("--additive", plan_additive, "plan via the additive bound");
  plan->add_flag("--validate", plan_validate,
                 "append dense bound validation per grid point (N <= 12)");

  auto* exact = app.add_subcommand("exact", "dense partition function");
  add_common(exact, true);
  exact->add_option("--beta", opts.beta_text, "inverse temperature re[,im]");

  auto* correctness = app.add_subcommand(
      "experiment-correctness",
      "random-Hamiltonian correctness experiment (CSV)");
  add_common(correctness, false);
  correctness->add_option("--instances", instances, "instance count");
  correctness->add_option("--eps-m", opts.eps_m, "total multiplicative error");
  correctness->add_option("--delta", opts.delta, "failure probability");

  auto* sweep = app.add_subcommand(
      "experiment-sweep", "Hubbard beta~ / U~ sweep (CSV)");
  add_common(sweep, false);
  sweep->add_option("--lx", lx, "lattice x extent");
  sweep->add_option("--ly", ly, "lattice y extent");
  sweep->add_option("--t", hubbard_t, "hopping strength");
  sweep->add_option("--beta-grid", sweep_beta_grid, "beta~ grid");
  sweep->add_option("--u-grid", u_grid, "U~ grid");
  sweep->add_option("--eps-m", opts.eps_m, "total multiplicative error");
  sweep->add_option("--delta", opts.delta, "failure probability");
  sweep->add_option("--zmax", opts.zmax, "fixed upper bound on Z");

  auto* reduce_cmd = app.add_subcommand(
      "reduce", "unitary-to-Hermitian decomposition transform");
  add_common(reduce_cmd, false);
  reduce_cmd->add_option("--circuit", circuit_path, "circuit JSON file")
      ->required();
  reduce_cmd->add_option("--sigma", sigma_text, "Pauli string")->required();
  reduce_cmd->add_option("--delta", reduce_delta, "precision field");
  reduce_cmd->add_option("--part", part_text, "Re|Im");
  reduce_cmd->add_flag("--verify", verify, "append dense verification");

  auto* gadget = app.add_subcommand("gadget-check",
                                    "verify compiled gadgets against dense "
                                    "exponentials");
  add_common(gadget, false);
  gadget->add_option("--pauli", gadget_pauli, "Pauli string")->required();
  gadget->add_option("--samples", gadget_samples, "random parameter draws");

  CLI11_PARSE(app, argc, argv);

  // Seed is recorded in every report so runs can be reproduced exactly.
  if (!seed_given) opts.seed = random_seed();
  if (opts.workers <= 0) opts.workers = default_workers();

  try {
    if (*estimate) return cmd_estimate(opts);
    if (*plan) {
      return cmd_plan(opts, beta_grid, eps_grid, plan_additive,
                      plan_validate);
    }
    if (*exact) return cmd_exact(opts);
    if (*correctness) return cmd_experiment_correctness(opts, instances);
    if (*sweep) {
      return cmd_experiment_sweep(opts, lx, ly, hubbard_t, sweep_beta_grid,
                                  u_grid);
    }
    if (*reduce_cmd) {
      return cmd_reduce(opts, circuit_path, sigma_text, reduce_delta,
                        part_text, verify);
    }
    if (*gadget) return cmd_gadget_check(opts, gadget_pauli, gadget_samples);
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetInfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
