#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "support/schema_check.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string bin_path() {
  const char* p = std::getenv("ARTHURKIT_BIN");
  REQUIRE(p != nullptr);
  return p;
}

std::string schema_dir() {
  const char* p = std::getenv("ARTHURKIT_SCHEMAS");
  REQUIRE(p != nullptr);
  return p;
}

RunResult run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = bin_path() + " " + args;
  cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json parse(const std::string& s) { return nlohmann::json::parse(s); }

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/arthurkit_test_") + name;
  std::ofstream out(path);
  out << content;
  return path;
}

void expect_valid(const nlohmann::json& j, const std::string& schema) {
  auto errors = schema_check::check(j, schema_dir(), schema);
  for (const auto& e : errors) UNSCOPED_INFO(e);
  CHECK(errors.empty());
}

}  // namespace

TEST_CASE("dual subcommand") {
  RunResult r = run("--format text dual --family C:B --partition \"[2,2]\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "[3,1,1]\n");

  RunResult rj = run("dual --family C:B --partition \"[2,2]\"");
  auto j = parse(rj.out);
  CHECK(j.at("dual") == nlohmann::json::array({3, 1, 1}));
  expect_valid(j, "dual_report.schema.json");

  // exponent-form literals are accepted
  RunResult re = run("--format text dual --family D:D --partition \"[3^2]\"");
  CHECK(re.out == "[2,2,1,1]\n");

  // domain error -> exit 1 with a machine-readable error on stderr
  RunResult bad = run("dual --family C:B --partition \"[3,1]\"", true);
  CHECK(bad.exit_code == 1);
  auto err = parse(bad.out);
  CHECK(err.at("error") == "domain");

  // usage error -> exit 2
  RunResult usage = run("dual --family C:B", true);
  CHECK(usage.exit_code == 2);
}

TEST_CASE("classify subcommand") {
  std::string param = write_temp("classify.json", R"({
    "summands": [{"tau": "sig", "b": 2}, {"tau": "1", "b": 1}],
    "pool": [
      {"id": "sig", "a": 2, "base": "plain", "duality": "symplectic", "is_character": false},
      {"id": "1", "a": 1, "base": "plain", "duality": "orthogonal", "is_character": true}
    ]})");
  RunResult r = run("classify --param " + param);
  REQUIRE(r.exit_code == 0);
  auto j = parse(r.out);
  REQUIRE(j.at("groups").size() == 1);
  CHECK(j.at("groups")[0].at("label") == "Sp_4");
  expect_valid(j, "classify_report.schema.json");
}

TEST_CASE("endoscopy subcommand") {
  RunResult re = run("endoscopy --group SOeven:2 --enumerate");
  REQUIRE(re.exit_code == 0);
  auto je = parse(re.out);
  REQUIRE(je.at("data").size() == 3);  // (0,4), (2,2) standard; (1,3) twisted
  for (const auto& d : je.at("data")) expect_valid(d, "endoscopy.schema.json");

  std::string tau = write_temp("endo_tau.json", R"({
    "id": "sig", "a": 2, "base": "plain", "duality": "symplectic", "is_character": false})");
  std::string rest = write_temp("endo_rest.json", R"({
    "summands": [{"tau": "rho", "b": 1}, {"tau": "1", "b": 1}],
    "pool": [
      {"id": "rho", "a": 2, "base": "plain", "duality": "orthogonal", "is_character": false},
      {"id": "1", "a": 1, "base": "plain", "duality": "orthogonal", "is_character": true}
    ]})");
  RunResult rd = run("endoscopy --group Sp:3 --tau " + tau + " --b 2 --param " + rest);
  REQUIRE(rd.exit_code == 0);
  auto jd = parse(rd.out);
  CHECK(jd.at("factors")[0].at("label") == "SO_4");
  CHECK(jd.at("factors")[1].at("label") == "Sp_2");
  CHECK(jd.at("conjecture_basis") == "eq-3.6");
  CHECK(jd.at("valid") == true);
  expect_valid(jd, "endoscopy.schema.json");
}

TEST_CASE("orbit subcommand matches the documented shape") {
  RunResult r = run("orbit --family C --partition \"[3^2,1^4]\"");
  REQUIRE(r.exit_code == 0);
  auto j = parse(r.out);
  CHECK(j.at("family") == "C");
  CHECK(j.at("coefficient") == "Bessel");
  CHECK(j.at("stabilizer").at("factors")[0].at("label") == "Sp_2");
  expect_valid(j, "orbit_report.schema.json");
}

TEST_CASE("beta subcommand") {
  RunResult r = run("beta --family SOodd --b 1");
  REQUIRE(r.exit_code == 0);
  auto j = parse(r.out);
  CHECK(j.at("factors").size() == 2);
  expect_valid(j, "beta_report.schema.json");

  RunResult rc = run("beta --family Sp --b 4 --case 1");
  auto jc = parse(rc.out);
  CHECK(jc.at("x_plus").size() == 2);  // {2, 1}
  expect_valid(jc, "beta_report.schema.json");

  RunResult rl = run("--format latex beta --family Sp --b 2");
  CHECK(rl.out.find("\\wedge^{2}") != std::string::npos);
  RunResult rl2 = run("beta --family Sp --b 2 --latex");
  CHECK(rl2.out == rl.out);

  RunResult rm = run("beta --family Mp --b 2", true);
  CHECK(rm.exit_code == 1);  // no Mp row in the rho table
}

TEST_CASE("poles subcommand") {
  RunResult r = run("poles --b 3 --case 3");
  REQUIRE(r.exit_code == 0);
  auto j = parse(r.out);
  REQUIRE(j.at("residual_points").size() == 2);
  CHECK(j.at("residual_points")[1].at("square_integrable") == false);
  expect_valid(j, "poles_report.schema.json");
}

TEST_CASE("compile subcommand") {
  RunResult r = run("compile --target Sp --a 2 --b 2 --c 2 --tau-type symplectic");
  REQUIRE(r.exit_code == 0);
  auto j = parse(r.out);
  CHECK(j.at("conjecture_tag") == "conj-5.2");
  CHECK(j.at("ambient").at("label") == "Sp_8");
  CHECK(j.at("coefficient") == "Bessel");
  CHECK(j.at("all_constraints_satisfied") == true);
  expect_valid(j, "construction_case.schema.json");

  RunResult ru = run(
      "compile --target U --tau-type conjugate --a 2 --b 1 --c 1 --eta -1 --kappa 1");
  auto ju = parse(ru.out);
  CHECK(ju.at("endoscopy").at("signs") == nlohmann::json::array({-1, 1}));

  RunResult bad = run("compile --target SOodd --a 2 --b 1 --c 2 --tau-type symplectic", true);
  CHECK(bad.exit_code == 1);
}

TEST_CASE("tower and triangle subcommands") {
  std::string param = write_temp("tower.json", R"({
    "summands": [{"tau": "sigma", "b": 1}],
    "pool": [{"id": "sigma", "a": 4, "base": "plain", "duality": "symplectic",
              "is_character": false}]})");
  RunResult r = run("tower --base SOodd:2 --param " + param +
                    " --tau-type symplectic --tau-id t2 --a 2 --steps 2");
  REQUIRE(r.exit_code == 0);
  auto j = parse(r.out);
  REQUIRE(j.size() == 2);
  CHECK(j[0].at("group").at("label") == "SO_7");
  expect_valid(j, "tower.schema.json");

  RunResult rd = run("--format dot tower --base SOodd:2 --param " + param +
                     " --tau-type symplectic --tau-id t2 --a 2 --steps 2");
  CHECK(rd.out.find("digraph tower") == 0);

  RunResult rt = run("triangle --a 2 --l 1");
  auto jt = parse(rt.out);
  CHECK(jt.at("vertices")[0].at("group").at("label") == "Sp_8");
  expect_valid(jt, "triangle.schema.json");

  RunResult rtd = run("--format dot triangle --a 2 --l 0");
  CHECK(rtd.out.find("FJ") != std::string::npos);
  RunResult rtd2 = run("triangle --a 2 --l 0 --dot");
  CHECK(rtd2.out == rtd.out);
}

TEST_CASE("jordan subcommand") {
  std::string param = write_temp("jordan_param.json", R"({
    "summands": [{"tau": "sig", "b": 3}, {"tau": "sig", "b": 1}],
    "pool": [{"id": "sig", "a": 2, "base": "plain", "duality": "symplectic",
              "is_character": false}]})");
  RunResult r = run("jordan --param " + param);
  REQUIRE(r.exit_code == 0);
  auto j = parse(r.out);
  CHECK(j.at("entries").at("sig").size() == 2);
  CHECK(j.at("jordan_blocks").at("sig") == nlohmann::json::array({3, 1}));
  expect_valid(j, "jordan_profile.schema.json");

  std::string profile = write_temp("jordan_profile.json", R"({
    "entries": {"sig": [2, 1]},
    "dims": [{"id": "sig", "a": 2, "base": "plain", "duality": "symplectic",
              "is_character": false}]})");
  RunResult rr = run("jordan --reconstruct " + profile + " --N 8");
  REQUIRE(rr.exit_code == 0);
  auto jr = parse(rr.out);
  CHECK(jr.at("parameter").at("summands").size() == 2);

  RunResult bad = run("jordan --reconstruct " + profile + " --N 9", true);
  CHECK(bad.exit_code == 1);

  // the --param output feeds --reconstruct directly
  std::string piped = write_temp("jordan_piped.json", r.out);
  RunResult round = run("jordan --reconstruct " + piped + " --N 8");
  REQUIRE(round.exit_code == 0);
  CHECK(parse(round.out).at("parameter").at("summands").size() == 2);
}

TEST_CASE("audit subcommand is green and byte-identical across runs") {
  RunResult r1 = run("--format text audit");
  REQUIRE(r1.exit_code == 0);
  CHECK(r1.out.find("FAIL") == std::string::npos);
  CHECK(r1.out.find("summary:") != std::string::npos);

  RunResult r2 = run("--format text audit");
  CHECK(r1.out == r2.out);

  RunResult j1 = run("audit");
  auto ja = parse(j1.out);
  CHECK(ja.at("total_failures") == 0);
  expect_valid(ja, "audit_report.schema.json");
}

TEST_CASE("outputs are byte-identical across runs") {
  for (const std::string& args :
       {std::string("orbit --family C --partition \"[3^2,1^4]\""),
        std::string("compile --target Sp --a 2 --b 2 --c 2 --tau-type symplectic"),
        std::string("endoscopy --group SOeven:3 --enumerate"),
        std::string("beta --family U --u-size 7 --b 5 --case 3")}) {
    RunResult r1 = run(args);
    RunResult r2 = run(args);
    CHECK(r1.exit_code == 0);
    CHECK(r1.out == r2.out);
  }
}

TEST_CASE("audit honors config file bounds") {
  std::string cfg = write_temp("config.json", R"({
    "endoscopy_max_n": 6, "jordan_max_n": 6, "kernel_max_a": 3,
    "collapse_max_total": 10, "grading_max_total": 12})");
  RunResult r = run("audit --config " + cfg);
  REQUIRE(r.exit_code == 0);
  auto j = parse(r.out);
  CHECK(j.at("total_failures") == 0);
}
