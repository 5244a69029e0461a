#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>

#include "pauliz/errors.hpp"
#include "pauliz/hamiltonian.hpp"
#include "pauliz/models.hpp"
#include "pauliz/oracle.hpp"
#include "test_util.hpp"

using namespace pauliz;

namespace {

PauliHamiltonian make(std::uint32_t n,
                      std::vector<std::pair<double, const char*>> spec) {
  std::vector<PauliTerm> terms;
  for (const auto& [coeff, text] : spec) {
    terms.push_back(PauliTerm{coeff, PauliString::parse(text)});
  }
  return PauliHamiltonian(n, std::move(terms));
}

}  // namespace

TEST_CASE("diagnostics on 0.5 X + 0.3 Z") {
  const auto h = make(1, {{0.5, "X"}, {0.3, "Z"}});
  const HamiltonianDiagnostics d = diagnostics(h);
  CHECK(d.omega == doctest::Approx(0.8));
  CHECK(d.xi == doctest::Approx(0.5));
  REQUIRE(d.n_k.size() == 1);
  CHECK(d.n_k[0] == 1);
  CHECK(d.frak_h == doctest::Approx(0.3));
}

TEST_CASE("commuting terms give frak_h = 0") {
  const auto h = make(2, {{1.0, "ZI"}, {2.0, "IZ"}});
  const HamiltonianDiagnostics d = diagnostics(h);
  CHECK(d.frak_h == 0.0);
  CHECK(d.n_k == std::vector<std::uint32_t>{0});
}

TEST_CASE("N_k matches brute-force dense commutator checks") {
  CounterRng rng(101, 0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<PauliTerm> terms;
    for (int j = 0; j < 4; ++j) {
      terms.push_back(
          PauliTerm{rng.next_uniform(-1, 1), testutil::random_pauli(rng, 3)});
    }
    const PauliHamiltonian h(3, terms);
    const HamiltonianDiagnostics d = diagnostics(h);
    for (std::size_t k = 1; k < terms.size(); ++k) {
      std::uint32_t expected = 0;
      const testutil::Matrix mk = testutil::kron_pauli(terms[k].pauli.str());
      for (std::size_t z = 0; z < k; ++z) {
        const testutil::Matrix mz = testutil::kron_pauli(terms[z].pauli.str());
        if (testutil::max_abs_diff(mz * mk, mk * mz) > 0.0) ++expected;
      }
      CHECK(d.n_k[k - 1] == expected);
    }
  }
}

TEST_CASE("N_k stays brute-force correct after permuting terms") {
  // The counts are order-dependent, so the check is recomputation against
  // brute force after the swap, not invariance.
  CounterRng rng(109, 0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<PauliTerm> terms;
    for (int j = 0; j < 4; ++j) {
      terms.push_back(
          PauliTerm{rng.next_uniform(-1, 1), testutil::random_pauli(rng, 2)});
    }
    const auto swap_at = static_cast<std::size_t>(rng.next_below(3));
    std::swap(terms[swap_at], terms[swap_at + 1]);
    const PauliHamiltonian h(2, terms);
    const HamiltonianDiagnostics d = diagnostics(h);
    double frak_h = 0.0;
    for (std::size_t k = 1; k < terms.size(); ++k) {
      std::uint32_t expected = 0;
      for (std::size_t z = 0; z < k; ++z) {
        if (!commutes(terms[z].pauli, terms[k].pauli)) ++expected;
      }
      CHECK(d.n_k[k - 1] == expected);
      frak_h += std::abs(terms[k].coeff) * expected;
    }
    CHECK(d.frak_h == doctest::Approx(frak_h));
  }
}

TEST_CASE("omega and frak_h are invariant under negating coefficients") {
  CounterRng rng(103, 0);
  std::vector<PauliTerm> terms;
  for (int j = 0; j < 4; ++j) {
    terms.push_back(
        PauliTerm{rng.next_uniform(-1, 1), testutil::random_pauli(rng, 2)});
  }
  const PauliHamiltonian h(2, terms);
  auto negated = terms;
  for (auto& t : negated) t.coeff = -t.coeff;
  const PauliHamiltonian h2(2, negated);
  CHECK(diagnostics(h).omega == doctest::Approx(diagnostics(h2).omega));
  CHECK(diagnostics(h).frak_h == doctest::Approx(diagnostics(h2).frak_h));
}

TEST_CASE("multiplicative step count arithmetic") {
  const auto h = make(1, {{0.5, "X"}, {0.3, "Z"}});
  const TrotterPlan plan = plan_trotter_multiplicative(h, 1.0, 0.048);
  CHECK(plan.nu == 6);  // ceil(0.24 / ln 1.048) = ceil(5.119)
  CHECK(plan.imag_exponents[0] == doctest::Approx(-0.5 / 6.0));
  CHECK(plan.imag_exponents[1] == doctest::Approx(-0.3 / 6.0));

  const auto commuting = make(2, {{1.0, "ZI"}, {2.0, "IZ"}});
  CHECK(plan_trotter_multiplicative(commuting, 1.0, 0.048).nu == 1);

  const TrotterPlan zero_beta = plan_trotter_multiplicative(h, 0.0, 0.048);
  CHECK(zero_beta.nu == 1);
  CHECK(zero_beta.imag_exponents[0] == 0.0);
  CHECK(zero_beta.imag_exponents[1] == 0.0);

  CHECK_THROWS_AS(plan_trotter_multiplicative(h, 1.0, 0.0),
                  std::invalid_argument);
}

TEST_CASE("multiplicative plan satisfies the step-count inequality") {
  CounterRng rng(107, 0);
  for (int trial = 0; trial < 30; ++trial) {
    CounterRng model_rng(200 + trial, 0);
    const PauliHamiltonian h = random_hamiltonian(model_rng);
    const double beta = rng.next_uniform(0.0, 2.0);
    const double eps = rng.next_uniform(0.01, 0.5);
    const TrotterPlan plan = plan_trotter_multiplicative(h, beta, eps);
    const HamiltonianDiagnostics d = diagnostics(h);
    CHECK(static_cast<double>(plan.nu) * std::log1p(eps) >=
          beta * beta * d.omega * d.frak_h - 1e-12);
  }
}

TEST_CASE("plan exponents sum back to |beta| Omega") {
  CounterRng rng(111, 0);
  for (int trial = 0; trial < 20; ++trial) {
    CounterRng model_rng(400 + trial, 0);
    const PauliHamiltonian h = random_hamiltonian(model_rng);
    const double beta = rng.next_uniform(0.1, 2.0);
    const TrotterPlan plan = plan_trotter_multiplicative(h, beta, 0.1);
    double sum_abs = 0.0;
    for (const double c : plan.imag_exponents) sum_abs += std::abs(c);
    CHECK(sum_abs * static_cast<double>(plan.nu) ==
          doctest::Approx(beta * plan.omega).epsilon(1e-12));
  }
}

TEST_CASE("multiplicative planner keeps the dense error in budget") {
  for (const std::uint64_t seed : {1ULL, 2ULL, 3ULL, 4ULL, 5ULL}) {
    CounterRng rng(seed, 0);
    const PauliHamiltonian h = random_hamiltonian(rng);
    const double beta = rng.next_uniform(0.1, 1.0);
    const TrotterPlan plan = plan_trotter_multiplicative(h, beta, 0.048);
    const double z = exact_partition(h, {beta, 0.0}).real();
    const std::complex<double> z_t = exact_trotter(h, plan).trace;
    CHECK(std::abs(z - z_t) <= 0.048 * z);
  }
}

TEST_CASE("additive step count arithmetic") {
  // One term, Omega = 1, b_r = 0, |beta| = 1, N = 1, eps = 0.5 -> nu = 4.
  const auto h = make(1, {{1.0, "X"}});
  const TrotterPlan plan = plan_trotter_additive(h, {0.0, 1.0}, 0.5);
  CHECK(plan.nu == 4);
  CHECK(plan.real_exponents[0] == doctest::Approx(-0.25));
  CHECK(plan.imag_exponents[0] == 0.0);

  const PauliHamiltonian empty(2, {});
  CHECK(plan_trotter_additive(empty, {1.0, 1.0}, 0.1).nu == 1);

  CHECK_THROWS_AS(plan_trotter_additive(h, {0.0, 1.0}, -1.0),
                  std::invalid_argument);
}

TEST_CASE("additive plan reports infeasible blowups") {
  const auto h = make(1, {{10.0, "X"}, {10.0, "Z"}});
  CHECK_THROWS_AS(plan_trotter_additive(h, {30.0, 0.0}, 1e-6),
                  BudgetInfeasibleError);
}

TEST_CASE("validated additive plan reaches the budget on a small instance") {
  CounterRng rng(300, 0);
  const PauliHamiltonian h = random_hamiltonian(rng, 2, 3);
  const InverseTemperature beta{0.4, 0.3};
  const double eps = 0.05;
  const ValidatedAdditivePlan vp =
      plan_trotter_additive_validated(h, beta, eps);
  CHECK(vp.achieved_error <= eps);
  // The unit-constant heuristic is usually already generous.
  CHECK(vp.doublings <= 4);
}

TEST_CASE("expected runtime heuristic") {
  const auto h = make(1, {{0.3, "Z"}});
  // z_hint = z_max kills the second log factor.
  CHECK(expected_runtime_estimate(h, 1.0, 0.1, 0.1, 5.0, 5.0) == 0.0);

  // N = 1, beta = 0: 4 / (1 * 4) * log2(2) * log2(2) = 1.
  CHECK(expected_runtime_estimate(h, 0.0, 1.0, 0.5, 4.0, 2.0) ==
        doctest::Approx(1.0));

  // Doubling eps_ms quarters the estimate.
  const double full = expected_runtime_estimate(h, 1.0, 0.1, 0.25, 8.0, 2.0);
  const double half = expected_runtime_estimate(h, 1.0, 0.2, 0.25, 8.0, 2.0);
  CHECK(half == doctest::Approx(full / 4.0));

  CHECK_THROWS_AS(expected_runtime_estimate(h, 1.0, -0.1, 0.25, 8.0, 2.0),
                  std::invalid_argument);
}

TEST_CASE("symmetric error split") {
  const double split = split_multiplicative_error(0.098);
  CHECK(split == doctest::Approx(0.04795).epsilon(1e-3));
  // Composition identity: eps_m = s + s + s^2.
  CHECK(2 * split + split * split == doctest::Approx(0.098));
  // 0.098304 splits to exactly 0.048 on each side.
  CHECK(split_multiplicative_error(0.098304) == doctest::Approx(0.048));
}

TEST_CASE("hamiltonian JSON round trip") {
  std::istringstream in(
      R"({"num_qubits":1,"terms":[{"coeff":0.5,"pauli":"Z"}]})");
  const PauliHamiltonian h = parse_hamiltonian(in);
  CHECK(h.num_qubits() == 1);
  REQUIRE(h.num_terms() == 1);
  CHECK(h.terms()[0].coeff == 0.5);
  CHECK(h.terms()[0].pauli.str() == "Z");

  CounterRng rng(401, 0);
  const PauliHamiltonian big = random_hamiltonian(rng, 3, 4);
  std::stringstream buffer;
  write_hamiltonian(big, buffer);
  CHECK(parse_hamiltonian(buffer) == big);
}

TEST_CASE("hamiltonian JSON schema violations") {
  auto parse_text = [](const char* text) {
    std::istringstream in(text);
    return parse_hamiltonian(in);
  };
  // Pauli length mismatch with num_qubits.
  CHECK_THROWS_AS(
      parse_text(R"({"num_qubits":3,"terms":[{"coeff":1,"pauli":"XY"}]})"),
      SchemaError);
  CHECK_THROWS_AS(parse_text(R"({"num_qubits":1})"), SchemaError);
  CHECK_THROWS_AS(parse_text(R"({"num_qubits":0,"terms":[]})"), SchemaError);
  CHECK_THROWS_AS(
      parse_text(R"({"num_qubits":1,"terms":[{"coeff":"x","pauli":"Z"}]})"),
      SchemaError);
  CHECK_THROWS_AS(
      parse_text(R"({"num_qubits":1,"terms":[{"coeff":1,"pauli":"Q"}]})"),
      SchemaError);
  CHECK_THROWS_AS(parse_text("not json"), SchemaError);
}

TEST_CASE("term order is preserved verbatim") {
  const auto h = make(2, {{0.3, "XY"}, {-0.2, "ZI"}, {0.1, "IZ"}});
  std::stringstream buffer;
  write_hamiltonian(h, buffer);
  const PauliHamiltonian back = parse_hamiltonian(buffer);
  REQUIRE(back.num_terms() == 3);
  CHECK(back.terms()[0].pauli.str() == "XY");
  CHECK(back.terms()[1].pauli.str() == "ZI");
  CHECK(back.terms()[2].pauli.str() == "IZ");
}

TEST_CASE("constructor rejects malformed hamiltonians") {
  std::vector<PauliTerm> wrong_width;
  wrong_width.push_back(PauliTerm{1.0, PauliString::parse("XX")});
  CHECK_THROWS_AS(PauliHamiltonian(3, wrong_width), std::invalid_argument);

  std::vector<PauliTerm> non_finite;
  non_finite.push_back(
      PauliTerm{std::nan(""), PauliString::parse("X")});
  CHECK_THROWS_AS(PauliHamiltonian(1, non_finite), std::invalid_argument);
}
