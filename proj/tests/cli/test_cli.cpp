// End-to-end tests driving the installed CLI binary. The path arrives from
// CMake as KAL_CLI_PATH.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "kal/json_io.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string out_path = "/tmp/kal_cli_stdout.txt";
  const std::string prefix = env.empty() ? std::string() : env + " ";
  const std::string cmd =
      prefix + std::string(KAL_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
  const int status = std::system(cmd.c_str());
  std::ifstream f(out_path);
  std::stringstream ss;
  ss << f.rdbuf();
  return {WEXITSTATUS(status), ss.str()};
}

std::string slurp(const std::string& path) { return kal::read_text_file(path); }

} // namespace

TEST_CASE("nw: small family") {
  const auto res = run("nw --prime 3 --degree 1 --out /tmp/kal_nw3.json");
  CHECK(res.exit_code == 0);
  CHECK(res.stdout_text.find("count=9") != std::string::npos);
  CHECK(res.stdout_text.find("verdict=PASS") != std::string::npos);
  const auto j = kal::load_json("/tmp/kal_nw3.json");
  CHECK(j["sets"].size() == 9);
  std::remove("/tmp/kal_nw3.json");
}

TEST_CASE("nw: non-prime is a usage error") {
  CHECK(run("nw --prime 4").exit_code == 2);
  CHECK(run("nw --prime 9").exit_code == 2);
}

TEST_CASE("nw: missing required option") {
  CHECK(run("nw").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
}

TEST_CASE("certify/check/report round trip with tampering") {
  const std::string cert = "/tmp/kal_cli_cert.json";
  const auto res = run("certify --prime 11 --epsilon 1/16 --relaxed --pairs sample:200 "
                       "--seed 42 --jobs 2 --out " + cert);
  CHECK(res.exit_code == 0);
  CHECK(res.stdout_text.find(
            "LOWERBOUND p=11 eps=1/16 witnesses=121 pairs=200 verdict=PASS") !=
        std::string::npos);

  CHECK(run("check --in " + cert + " --jobs 2").exit_code == 0);
  CHECK(run("report --in " + cert).exit_code == 0);

  // Tamper one digit of a witness optimum and re-check.
  std::string text = slurp(cert);
  const auto pos = text.find("\"optimum\": \"8/1\"");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 16, "\"optimum\": \"7/1\"");
  kal::write_text_file(cert, text);
  const auto tampered = run("check --in " + cert);
  CHECK(tampered.exit_code == 1);
  CHECK(tampered.stdout_text.find("verdict=FAIL") != std::string::npos);

  // Malformed JSON is a usage error, not a verdict.
  kal::write_text_file(cert, "{ not json");
  CHECK(run("check --in " + cert).exit_code == 2);
  std::remove(cert.c_str());
}

TEST_CASE("certify: strict regime violations exit 2") {
  CHECK(run("certify --prime 13 --epsilon 1/10").exit_code == 2);
  CHECK(run("certify --prime 13 --epsilon 1/16 --pairs sample:10").exit_code == 2); // no seed
  CHECK(run("certify --prime 13 --epsilon 0.1").exit_code == 2);
}

TEST_CASE("certify: relaxed off-regime run records a FAIL verdict") {
  const auto res = run("certify --prime 11 --epsilon 1/2 --relaxed --degree 1 "
                       "--pairs sample:20 --seed 1");
  CHECK(res.exit_code == 1);
  CHECK(res.stdout_text.find("verdict=FAIL") != std::string::npos);
}

TEST_CASE("determinism: same seed, byte-identical certificates") {
  const std::string a = "/tmp/kal_det_a.json";
  const std::string b = "/tmp/kal_det_b.json";
  CHECK(run("certify --prime 11 --epsilon 1/16 --relaxed --pairs sample:100 --seed 7 --out " +
            a).exit_code == 0);
  CHECK(run("certify --prime 11 --epsilon 1/16 --relaxed --pairs sample:100 --seed 7 --jobs 2 "
            "--out " + b).exit_code == 0);
  CHECK(slurp(a) == slurp(b));
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("round: random instance with oracle chain") {
  const auto res = run("round --n 3 --epsilon 1/2 --trials 3 --seed 5 --exhaustive --van-vyve "
                       "--out /tmp/kal_round.json");
  CHECK(res.exit_code == 0);
  CHECK(res.stdout_text.find("verdict=PASS") != std::string::npos);
  const auto j = kal::load_json("/tmp/kal_round.json");
  REQUIRE(j.is_array());
  CHECK(j.size() == 3);
  CHECK(j[0].contains("ctilde"));
  CHECK(j[0].contains("max_q"));
  std::remove("/tmp/kal_round.json");
}

TEST_CASE("round: explicit zero objective is trivially PASS") {
  kal::KnapsackInstance inst;
  inst.weights = {kal::Rational(1), kal::Rational(2)};
  inst.capacity = kal::Rational(2);
  kal::save_json("/tmp/kal_round_inst.json", kal::to_json(inst));
  const auto res =
      run("round --instance /tmp/kal_round_inst.json --epsilon 1/4 --objective 0,0");
  CHECK(res.exit_code == 0);
  std::remove("/tmp/kal_round_inst.json");
}

TEST_CASE("round: lowerbound instance with claim2 objective") {
  const auto res = run("round --lowerbound-prime 13 --lowerbound-epsilon 1/16 --epsilon 1/2 "
                       "--claim2");
  CHECK(res.exit_code == 0);
  CHECK(res.stdout_text.find("checks=1 failures=0") != std::string::npos);
}

TEST_CASE("extension subcommand") {
  const auto res = run("extension --n 9 --epsilon 1/4 --trials 10 --seed 7 --relaxed "
                       "--out /tmp/kal_ext.json");
  CHECK(res.exit_code == 0);
  CHECK(res.stdout_text.find("b0=9 b1=1") != std::string::npos);
  const auto j = kal::load_json("/tmp/kal_ext.json");
  CHECK(j["vars"].back() == "lambda");
  CHECK(run("report --in /tmp/kal_ext.json").exit_code == 0);
  std::remove("/tmp/kal_ext.json");

  CHECK(run("extension --n 10 --epsilon 1/4 --trials 1 --seed 1").exit_code == 2);
}

TEST_CASE("node budget exhaustion exits 3 (KAL_BUDGET_NODES)") {
  // Denominators whose LCM pushes the cleared capacity past the DP bound,
  // forcing branch-and-bound; a 2-node budget cannot finish 8 items.
  kal::KnapsackInstance inst;
  for (long den : {3, 5, 7, 11, 13, 16, 17, 19}) inst.weights.emplace_back(1, den);
  inst.capacity = kal::Rational(2);
  kal::save_json("/tmp/kal_budget_inst.json", kal::to_json(inst));
  const auto res = run("round --instance /tmp/kal_budget_inst.json --epsilon 1/4 "
                       "--objective 1,1,1,1,1,1,1,1",
                       "KAL_BUDGET_NODES=2");
  CHECK(res.exit_code == 3);

  // A generous budget succeeds on the same input.
  const auto ok = run("round --instance /tmp/kal_budget_inst.json --epsilon 1/4 "
                      "--objective 1,1,1,1,1,1,1,1",
                      "KAL_BUDGET_NODES=100000");
  CHECK(ok.exit_code == 0);
  std::remove("/tmp/kal_budget_inst.json");
}

TEST_CASE("csv summaries accumulate rows") {
  const std::string csv = "/tmp/kal_cli.csv";
  std::remove(csv.c_str());
  CHECK(run("nw --prime 3 --degree 1 --csv " + csv).exit_code == 0);
  CHECK(run("nw --prime 5 --degree 1 --csv " + csv).exit_code == 0);
  const std::string text = slurp(csv);
  CHECK(text.find("command,p/n,epsilon,checks,failures,wall_ms") == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 3);
  std::remove(csv.c_str());
}
