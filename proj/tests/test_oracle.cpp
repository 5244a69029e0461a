#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "pauliz/errors.hpp"
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

PauliHamiltonian random_h(std::uint64_t seed, std::uint32_t n, int terms) {
  CounterRng rng(seed, 0);
  std::vector<PauliTerm> list;
  for (int j = 0; j < terms; ++j) {
    list.push_back(
        PauliTerm{rng.next_uniform(-1, 1), testutil::random_pauli(rng, n)});
  }
  return PauliHamiltonian(n, std::move(list));
}

}  // namespace

TEST_CASE("dense hamiltonian examples") {
  const DenseOperator mz = dense(make(1, {{1.0, "Z"}}));
  CHECK(mz(0, 0) == std::complex<double>(1, 0));
  CHECK(mz(1, 1) == std::complex<double>(-1, 0));
  CHECK(mz(0, 1) == std::complex<double>(0, 0));

  const DenseOperator mx = dense(make(1, {{0.5, "X"}}));
  CHECK(mx(0, 1) == std::complex<double>(0.5, 0));
  CHECK(mx(1, 0) == std::complex<double>(0.5, 0));
  CHECK(mx(0, 0) == std::complex<double>(0, 0));
}

TEST_CASE("dense hamiltonians are hermitian") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const PauliHamiltonian h = random_h(seed, 3, 4);
    const DenseOperator m = dense(h);
    CHECK(testutil::max_abs_diff(m, m.adjoint()) == 0.0);
  }
}

TEST_CASE("exact partition closed forms") {
  const PauliHamiltonian empty(3, {});
  CHECK(exact_partition(empty, {1.3, 0.0}).real() == doctest::Approx(8.0));

  const auto hz = make(1, {{0.5, "Z"}});
  CHECK(exact_partition(hz, {1.0, 0.0}).real() ==
        doctest::Approx(2.0 * std::cosh(0.5)));

  // H = Z at beta = i pi / 2: the two phases cancel exactly.
  const auto z = exact_partition(make(1, {{1.0, "Z"}}),
                                 {0.0, std::numbers::pi / 2});
  CHECK(std::abs(z) < 1e-12);
}

TEST_CASE("exact partition is positive for real beta") {
  for (std::uint64_t seed = 20; seed < 30; ++seed) {
    const PauliHamiltonian h = random_h(seed, 2, 3);
    CounterRng rng(seed, 1);
    const double beta = rng.next_uniform(-2.0, 2.0);
    const std::complex<double> z = exact_partition(h, {beta, 0.0});
    CHECK(z.real() > 0.0);
    CHECK(std::abs(z.imag()) < 1e-10);
  }
}

TEST_CASE("partition function derivative at beta = 0") {
  // Z(0) = 2^N and dZ/dbeta(0) = -tr(H), checked by central differences.
  const PauliHamiltonian h = random_h(31, 3, 4);
  CHECK(exact_partition(h, {0.0, 0.0}).real() == doctest::Approx(8.0));

  const double step = 1e-4;
  const double derivative = (exact_partition(h, {step, 0.0}).real() -
                             exact_partition(h, {-step, 0.0}).real()) /
                            (2.0 * step);
  const double expected = -dense(h).trace().real();
  CHECK(derivative == doctest::Approx(expected).epsilon(1e-6));
}

TEST_CASE("trotter product is exact for commuting terms") {
  const auto h = make(2, {{0.7, "ZI"}, {-0.4, "IZ"}, {0.2, "ZZ"}});
  const double z = exact_partition(h, {0.9, 0.0}).real();
  for (const std::uint64_t nu : {1ULL, 3ULL, 8ULL}) {
    TrotterPlan plan = plan_trotter_multiplicative(h, 0.9, 0.1);
    CHECK(plan.nu == 1);  // frak_h = 0
    plan.nu = nu;
    for (std::size_t j = 0; j < h.num_terms(); ++j) {
      plan.imag_exponents[j] =
          -0.9 * h.terms()[j].coeff / static_cast<double>(nu);
    }
    CHECK(exact_trotter(h, plan).trace.real() == doctest::Approx(z));
  }
}

TEST_CASE("trotter error eventually shrinks with nu") {
  const auto h = make(1, {{0.5, "X"}, {0.3, "Z"}});
  const double z = exact_partition(h, {1.0, 0.0}).real();
  TrotterPlan plan = plan_trotter_multiplicative(h, 1.0, 0.048);
  double previous = 1e300;
  for (const std::uint64_t nu : {1ULL, 4ULL, 16ULL, 64ULL}) {
    plan.nu = nu;
    for (std::size_t j = 0; j < h.num_terms(); ++j) {
      plan.imag_exponents[j] =
          -h.terms()[j].coeff / static_cast<double>(nu);
    }
    const double err = std::abs(z - exact_trotter(h, plan).trace);
    CHECK(err < previous);
    previous = err;
  }
}

TEST_CASE("planned step count meets its budget on the running example") {
  const auto h = make(1, {{0.5, "X"}, {0.3, "Z"}});
  const TrotterPlan plan = plan_trotter_multiplicative(h, 1.0, 0.048);
  REQUIRE(plan.nu == 6);
  const double z = exact_partition(h, {1.0, 0.0}).real();
  const std::complex<double> z_t = exact_trotter(h, plan).trace;
  CHECK(std::abs(z - z_t) <= 0.048 * z);
}

TEST_CASE("exact_trotter matches an eigendecomposition oracle") {
  // One Trotter step of a single term is exp(c P) itself.
  const auto h = make(2, {{0.8, "XY"}});
  TrotterPlan plan = plan_trotter_multiplicative(h, 1.1, 0.5);
  const TrotterTrace tt = exact_trotter(h, plan);
  const testutil::Matrix expected = testutil::expm_hermitian(
      testutil::kron_pauli("XY"), std::complex<double>(-1.1 * 0.8, 0.0));
  CHECK(testutil::max_abs_diff(tt.op, expected) < 1e-12);
}

TEST_CASE("complex-beta trotter trace approaches the exact value") {
  const PauliHamiltonian h = random_h(77, 2, 3);
  const InverseTemperature beta{0.4, 0.5};
  const std::complex<double> z = exact_partition(h, beta);
  const TrotterPlan plan = plan_trotter_additive(h, beta, 0.05);
  const std::complex<double> z_t = exact_trotter(h, plan).trace;
  CHECK(std::abs(z - z_t) <= 0.05);
}

TEST_CASE("spectral norm") {
  CHECK(spectral_norm(DenseOperator::Identity(4, 4)) == doctest::Approx(1.0));

  DenseOperator d = DenseOperator::Zero(2, 2);
  d(0, 0) = 3.0;
  d(1, 1) = -4.0;
  CHECK(spectral_norm(d) == doctest::Approx(4.0));

  // Cross-check against power iteration on M^dagger M.
  CounterRng rng(55, 0);
  DenseOperator m(8, 8);
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      m(i, j) = {rng.next_uniform(-1, 1), rng.next_uniform(-1, 1)};
    }
  }
  const DenseOperator gram = m.adjoint() * m;
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(8);
  v.normalize();
  for (int it = 0; it < 2000; ++it) {
    v = gram * v;
    v.normalize();
  }
  const double lambda = std::real(v.dot(gram * v));
  CHECK(spectral_norm(m) ==
        doctest::Approx(std::sqrt(lambda)).epsilon(1e-8));
}

TEST_CASE("validate_bounds on a commuting hamiltonian") {
  const auto h = make(2, {{0.6, "ZI"}, {0.3, "IZ"}});
  const BoundReport report = validate_bounds(h, {0.8, 0.0}, 0.1);
  CHECK(report.real_beta_checks_run);
  CHECK(report.additive_ok);
  CHECK(report.multiplicative_ok);
  // W_nu is the identity: ||W||^nu - 1 = 0.
  CHECK(report.w_norm_pow_nu == doctest::Approx(1.0));
  CHECK(report.trace_bound_ok);
  CHECK(report.multiplicative_error == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("validate_bounds on random instances") {
  for (const std::uint64_t seed : {201ULL, 202ULL, 203ULL}) {
    const PauliHamiltonian h = random_h(seed, 3, 4);
    const BoundReport report = validate_bounds(h, {0.5, 0.0}, 0.1);
    CHECK(report.additive_ok);
    CHECK(report.multiplicative_ok);
    CHECK(report.trace_bound_ok);
  }
}

TEST_CASE("validate_bounds on a maximally anticommuting ordering") {
  // Pairwise anticommuting terms maximize every N_k.
  const auto h = make(2, {{0.9, "XI"}, {0.7, "YI"}, {0.5, "ZI"}});
  const HamiltonianDiagnostics d = diagnostics(h);
  CHECK(d.n_k == std::vector<std::uint32_t>{1, 2});
  const BoundReport report = validate_bounds(h, {1.0, 0.0}, 0.048);
  CHECK(report.multiplicative_ok);
  CHECK(report.trace_bound_ok);
}

TEST_CASE("dense capacity is enforced") {
  const PauliHamiltonian big(13, {});
  CHECK_THROWS_AS(dense(big), CapacityError);
  CHECK_THROWS_AS(exact_partition(big, {1.0, 0.0}), CapacityError);
}
