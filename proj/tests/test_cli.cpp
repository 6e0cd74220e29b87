#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "multdyn/precision.hpp"

using Json = nlohmann::json;

namespace {

struct CliRun {
  int exit_code = -1;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::string& args) {
  static int counter = 0;
  std::string base = "/tmp/multdyn_cli_test_" + std::to_string(counter++);
  std::string out_file = base + ".out";
  std::string err_file = base + ".err";
  std::string command = std::string(MULTDYN_CLI_PATH) + " " + args + " > " +
                        out_file + " 2> " + err_file;
  int status = std::system(command.c_str());
  CliRun run;
  run.exit_code = WEXITSTATUS(status);
  auto slurp = [](const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::remove(path.c_str());
    return ss.str();
  };
  run.out = slurp(out_file);
  run.err = slurp(err_file);
  return run;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("census subcommand") {
  CliRun run = run_cli("census -n 3 -m 2");
  REQUIRE(run.exit_code == 0);
  Json report = Json::parse(run.out);
  CHECK(report["command"] == "census");
  CHECK(report["result"]["nu"] == 6);
  CHECK(report["result"]["nu_hat"] == 6);
  CHECK(report["result"]["orbit_count"] == 3);
  CHECK(report["config"]["prec_bits"] == 256);
}

TEST_CASE("census csv output") {
  CliRun run = run_cli("--format csv census -n 3 -m 2");
  REQUIRE(run.exit_code == 0);
  CHECK(run.out == "nu,nu_hat,orbit_count\n6,6,3\n");
}

TEST_CASE("witness subcommand emits a certified report") {
  CliRun run = run_cli("witness -n 3 --periods 1,1 --indices 0,1");
  REQUIRE(run.exit_code == 0);
  Json report = Json::parse(run.out);
  CHECK(report["result"]["nondegenerate"] == true);
  multdyn::Real det_re =
      multdyn::real_from_string(report["result"]["det"][0].get<std::string>());
  CHECK(abs(abs(det_re) - multdyn::Real(12)) < multdyn::Real("1e-60"));
}

TEST_CASE("too many orbits exits with the validation code") {
  CliRun run = run_cli("witness -n 3 --periods 1,1,1 --indices 0,1,2");
  CHECK(run.exit_code == 2);
  Json err = Json::parse(run.err);
  CHECK(err["error"]["kind"] == "TooManyOrbits");
}

TEST_CASE("budget violations exit with the budget code") {
  CliRun run = run_cli("orbits -n 2 -m 25");
  CHECK(run.exit_code == 3);
  Json err = Json::parse(run.err);
  CHECK(err["error"]["kind"] == "BudgetExceeded");
}

TEST_CASE("closed-form derivative value") {
  CliRun run = run_cli("deriv -n 3 -m 1 -j 1 --residue 0");
  REQUIRE(run.exit_code == 0);
  Json report = Json::parse(run.out);
  multdyn::Real re =
      multdyn::real_from_string(report["result"]["value"][0].get<std::string>());
  CHECK(abs(re + 2) < multdyn::Real("1e-70"));
}

TEST_CASE("non-periodic residue is a validation error") {
  // Residue 0 mod 8 is a fixed point, not exact period 2.
  CliRun run = run_cli("deriv -n 3 -m 2 -j 0 --residue 0");
  CHECK(run.exit_code == 2);
  Json err = Json::parse(run.err);
  CHECK(err["error"]["kind"] == "NotPeriodic");
}

TEST_CASE("pdeg and ppoly agree") {
  CliRun deg = run_cli("pdeg -n 3 -j 1 -m 2");
  REQUIRE(deg.exit_code == 0);
  Json deg_report = Json::parse(deg.out);
  CHECK(deg_report["result"]["degree"] == 5);

  CliRun poly = run_cli("ppoly -n 3 -j 1 -m 2");
  REQUIRE(poly.exit_code == 0);
  Json poly_report = Json::parse(poly.out);
  CHECK(poly_report["result"]["degree"] == 5);
}

TEST_CASE("discriminant subcommand finds the quadratic degeneracies") {
  CliRun run = run_cli("discriminant -n 2 -m 2");
  REQUIRE(run.exit_code == 0);
  Json report = Json::parse(run.out);
  REQUIRE(report["result"]["parameters"].size() == 2);
  multdyn::Real first = multdyn::real_from_string(
      report["result"]["parameters"][0][0].get<std::string>());
  CHECK(abs(first + multdyn::Real("0.75")) < multdyn::Real("1e-10"));
}

TEST_CASE("monodromy subcommand tracks a loop file") {
  std::string path = "/tmp/multdyn_cli_loop.json";
  {
    std::ofstream out(path);
    out << R"({"n":2,"m":2,"base":["-0.55","0"],"segments":[)"
        << R"({"kind":"line","to":["-0.65","0"]},)"
        << R"({"kind":"circle","center":["-0.75","0"],"radius":"0.1","turns":1,"steps":48},)"
        << R"({"kind":"line","to":["-0.55","0"]}]})";
  }
  CliRun run = run_cli("monodromy -n 2 -m 2 --loop " + path);
  std::remove(path.c_str());
  REQUIRE(run.exit_code == 0);
  Json report = Json::parse(run.out);
  CHECK(report["result"]["orbit_count"] == 1);
  CHECK(report["result"]["point_perm"] == Json::array({1, 0}));
  CHECK(report["result"]["orbit_cycles"] == "(0)");
}

TEST_CASE("verify-gradient reports closed-form and fd agreement") {
  CliRun run = run_cli(
      "verify-gradient -n 2 --coeffs 0.1 --orbit-seed 0.11 --period 1 --indices 0");
  REQUIRE(run.exit_code == 0);
  Json report = Json::parse(run.out);
  multdyn::Real err = multdyn::real_from_string(
      report["result"]["max_rel_error"].get<std::string>());
  CHECK(err < multdyn::Real("1e-6"));
}

TEST_CASE("reports are deterministic") {
  CliRun a = run_cli("witness -n 4 --periods 2,2 --indices 0,2");
  CliRun b = run_cli("witness -n 4 --periods 2,2 --indices 0,2");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("unknown arguments fail validation") {
  CliRun run = run_cli("census -n 3");
  CHECK(run.exit_code == 2);
}

TEST_SUITE_END();
