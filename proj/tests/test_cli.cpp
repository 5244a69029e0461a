#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

// End-to-end checks of the command-line tool: exit codes, output schemas,
// and reproducibility from a report's embedded seed. The binary path comes
// from the build system.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

using nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

int counter = 0;

RunResult run(const std::string& args) {
  const std::string out_path =
      "/tmp/pauliz_cli_out_" + std::to_string(counter++) + ".txt";
  const std::string command = std::string(PAULIZ_CLI_PATH) + " " + args +
                              " > " + out_path + " 2>/dev/null";
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WEXITSTATUS(status);
  std::ifstream in(out_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  result.stdout_text = buffer.str();
  std::remove(out_path.c_str());
  return result;
}

std::string write_file(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

}  // namespace

TEST_CASE("estimate produces a reproducible report") {
  const std::string h_path = write_file(
      "cli_h1.json", R"({"num_qubits":1,"terms":[{"coeff":0.5,"pauli":"Z"}]})");
  const std::string args = "estimate --hamiltonian " + h_path +
                           " --beta 1.0 --eps-m 0.098304 --delta 0.15 "
                           "--zmax-policy exact2x --seed 421 --check-exact";
  const RunResult first = run(args);
  REQUIRE(first.exit_code == 0);
  const json j = json::parse(first.stdout_text);
  CHECK(j["config"]["seed"] == 421);
  CHECK(j["report"]["mode"] == "multiplicative");
  const double z = 2.0 * std::cosh(0.5);
  CHECK(std::abs(j["report"]["estimate_re"].get<double>() - z) <
        0.098304 * z);
  CHECK(j["exact"]["Z_re"].get<double>() == doctest::Approx(z));

  // Re-running the embedded config reproduces the numbers exactly.
  const RunResult second = run(args + " --workers 1");
  const json j2 = json::parse(second.stdout_text);
  CHECK(j2["report"]["estimate_re"] == j["report"]["estimate_re"]);
  CHECK(j2["report"]["shots_used"] == j["report"]["shots_used"]);
}

TEST_CASE("schema errors exit with code 2") {
  const std::string bad = write_file("cli_bad.json", "{\"num_qubits\": 1}");
  CHECK(run("estimate --hamiltonian " + bad + " --beta 1.0").exit_code == 2);

  const std::string mismatch = write_file(
      "cli_mismatch.json",
      R"({"num_qubits":3,"terms":[{"coeff":1.0,"pauli":"XY"}]})");
  CHECK(run("exact --hamiltonian " + mismatch + " --beta 1.0").exit_code == 2);

  CHECK(run("estimate --hamiltonian /tmp/does_not_exist.json --beta 1.0")
            .exit_code == 2);
}

TEST_CASE("infeasible budgets exit with code 3") {
  const std::string h_path = write_file(
      "cli_hot.json",
      R"({"num_qubits":2,"terms":[{"coeff":3.0,"pauli":"XX"},{"coeff":2.0,"pauli":"ZI"}]})");
  const RunResult r = run("estimate --hamiltonian " + h_path +
                          " --beta 40.0 --eps-m 0.1 --zmax 1e30 --seed 1");
  CHECK(r.exit_code == 3);
}

TEST_CASE("capacity limits exit with code 4") {
  std::string pauli(13, 'I');
  pauli[0] = 'Z';
  const std::string h_path = write_file(
      "cli_big.json", R"({"num_qubits":13,"terms":[{"coeff":1.0,"pauli":")" +
                          pauli + R"("}]})");
  CHECK(run("exact --hamiltonian " + h_path + " --beta 1.0").exit_code == 4);
}

TEST_CASE("plan emits a grid-shaped table") {
  const std::string h_path = write_file(
      "cli_plan.json",
      R"({"num_qubits":1,"terms":[{"coeff":0.5,"pauli":"X"},{"coeff":0.3,"pauli":"Z"}]})");
  const RunResult r = run("plan --hamiltonian " + h_path +
                          " --beta-grid 0.5,1.0 --eps-grid 0.048,0.15,0.3");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.stdout_text);
  CHECK(j["diagnostics"]["omega"].get<double>() == doctest::Approx(0.8));
  CHECK(j["diagnostics"]["frak_h"].get<double>() == doctest::Approx(0.3));
  CHECK(j["table"].size() == 6);
  // The running example: beta = 1, eps = 0.048 -> nu = 6.
  bool found = false;
  for (const auto& row : j["table"]) {
    if (row["beta"] == 1.0 && row["eps"] == 0.048) {
      CHECK(row["nu"] == 6);
      found = true;
    }
  }
  CHECK(found);

  const RunResult csv = run("plan --hamiltonian " + h_path +
                            " --beta-grid 0.5,1.0 --eps-grid 0.048 "
                            "--format csv");
  const auto lines = split_lines(csv.stdout_text);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "beta,eps,nu");
}

TEST_CASE("plan --validate appends dense bound checks") {
  const std::string h_path = write_file(
      "cli_validate.json",
      R"({"num_qubits":1,"terms":[{"coeff":0.5,"pauli":"X"},{"coeff":0.3,"pauli":"Z"}]})");
  const RunResult r = run("plan --hamiltonian " + h_path +
                          " --beta-grid 1.0 --eps-grid 0.048 --validate");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.stdout_text);
  const json& v = j["table"][0]["validate"];
  CHECK(v["additive_ok"] == true);
  CHECK(v["multiplicative_ok"] == true);
  CHECK(v["trace_bound_ok"] == true);
  CHECK(v["Z_exact"].get<double>() ==
        doctest::Approx(2.0 * std::cosh(std::hypot(0.5, 0.3))));
}

TEST_CASE("commuting hamiltonian plans a single step") {
  const std::string h_path = write_file(
      "cli_commuting.json",
      R"({"num_qubits":2,"terms":[{"coeff":1.0,"pauli":"ZI"},{"coeff":2.0,"pauli":"IZ"}]})");
  const RunResult r =
      run("plan --hamiltonian " + h_path + " --beta-grid 1.0 --eps-grid 0.1");
  const json j = json::parse(r.stdout_text);
  CHECK(j["diagnostics"]["frak_h"] == 0.0);
  CHECK(j["table"][0]["nu"] == 1);
}

TEST_CASE("dqc1 estimation handles complex beta") {
  const std::string h_path = write_file(
      "cli_dqc1.json", R"({"num_qubits":1,"terms":[{"coeff":1.0,"pauli":"Z"}]})");
  const RunResult r = run("estimate --hamiltonian " + h_path +
                          " --beta 0.0,1.5707963267948966 --dqc1 --eps-a 0.5 "
                          "--delta 0.1 --seed 7");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.stdout_text);
  CHECK(j["report"]["mode"] == "additive-complex");
  // Z = 2 cos(pi/2) = 0.
  CHECK(std::abs(j["report"]["estimate_re"].get<double>()) < 0.5);

  // Complex beta without --dqc1 is a usage error.
  CHECK(run("estimate --hamiltonian " + h_path + " --beta 0.0,1.0")
            .exit_code == 2);
}

TEST_CASE("experiment-correctness emits the documented CSV") {
  const RunResult r =
      run("experiment-correctness --instances 3 --seed 11 --workers 2");
  REQUIRE(r.exit_code == 0);
  const auto lines = split_lines(r.stdout_text);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "instance,seed,N,L,beta,Z_exact,Z_est,rel_error");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::stringstream row(lines[i]);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(row, field, ',')) fields.push_back(field);
    REQUIRE(fields.size() == 8);
    const double rel = std::stod(fields[7]);
    CHECK(std::isfinite(rel));
  }
}

TEST_CASE("experiment-sweep rows follow the grids and monotonicity") {
  const RunResult r = run(
      "experiment-sweep --lx 1 --ly 2 --t 1.0 --beta-grid 0.1,0.5 "
      "--u-grid 0.25,1.25 --eps-m 0.5 --delta 0.25 --seed 3 --workers 2");
  REQUIRE(r.exit_code == 0);
  const auto lines = split_lines(r.stdout_text);
  REQUIRE(lines.size() == 5);

  struct Row {
    double beta, u, nu, omega;
  };
  std::vector<Row> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::stringstream row(lines[i]);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(row, field, ',')) fields.push_back(field);
    REQUIRE(fields.size() == 14);
    rows.push_back(Row{std::stod(fields[0]), std::stod(fields[1]),
                       std::stod(fields[4]), std::stod(fields[5])});
  }
  // nu never decreases in beta~ at fixed U~; omega never decreases in U~.
  for (const auto& a : rows) {
    for (const auto& b : rows) {
      if (a.u == b.u && a.beta < b.beta) CHECK(a.nu <= b.nu);
      if (a.beta == b.beta && a.u < b.u) CHECK(a.omega <= b.omega + 1e-12);
    }
  }
}

TEST_CASE("reduce transforms and verifies the S-gate instance") {
  const std::string c_path = write_file(
      "cli_s.json", R"({"num_qubits":1,"gates":[{"kind":"S","qubits":[0]}]})");
  const RunResult re = run("reduce --circuit " + c_path +
                           " --sigma Z --part Re --verify");
  REQUIRE(re.exit_code == 0);
  const json j = json::parse(re.stdout_text);
  REQUIRE(j["terms"].size() == 2);
  CHECK(j["terms"][0]["coeff_re"] == 0.5);
  CHECK(j["terms"][0]["coeff_im"] == 0.0);
  CHECK(j["terms"][1]["coeff_re"] == 0.5);
  CHECK(j["part"] == "Re");
  CHECK(j["verify"]["re_discrepancy"].get<double>() < 1e-12);
  CHECK(j["verify"]["trace_sigma_u_re"] == doctest::Approx(1.0));
  CHECK(j["verify"]["trace_sigma_u_im"] == doctest::Approx(-1.0));
  // The daggered second term must carry SDG.
  CHECK(j["terms"][1]["circuit"]["gates"][0]["kind"] == "SDG");

  const RunResult im = run("reduce --circuit " + c_path +
                           " --sigma Z --part Im --verify");
  const json j2 = json::parse(im.stdout_text);
  CHECK(j2["terms"][0]["coeff_im"] == -0.5);
  CHECK(j2["terms"][1]["coeff_im"] == 0.5);
  CHECK(j2["part"] == "Re");
  CHECK(j2["verify"]["im_discrepancy"].get<double>() < 1e-12);
}

TEST_CASE("gadget-check passes on a three-letter string") {
  const RunResult r = run("gadget-check --pauli XYZ --samples 10 --seed 5");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.stdout_text);
  CHECK(j["pass"] == true);
  CHECK(j["max_real_gadget_error"].get<double>() < 1e-10);
  CHECK(j["max_imaginary_gadget_error"].get<double>() < 1e-10);
}
