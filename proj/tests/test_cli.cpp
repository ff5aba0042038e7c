#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

using Json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

/** Run the CLI with the given argument string; stderr is discarded. */
RunResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd =
      env + (env.empty() ? "" : " ") + LIMITLAB_CLI_PATH + " " + args +
      " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json parse_output(const RunResult& r) {
  const Json doc = Json::parse(r.out, nullptr, false);
  REQUIRE_FALSE(doc.is_discarded());
  return doc;
}

std::string error_code(const RunResult& r) {
  const Json doc = parse_output(r);
  REQUIRE(doc.contains("error"));
  return doc["error"]["code"].get<std::string>();
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/" + name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("edge density of the level-one blow-up") {
  const RunResult r =
      run_cli("density --pattern K2 --host C4^1 --count");
  CHECK(r.exit_code == 0);
  const Json doc = parse_output(r);
  CHECK(doc["tind"] == "2/3");
  CHECK(doc["p"] == "2/3");
  CHECK(doc["count"] == "8");
}

TEST_CASE("limit densities of cliques and anticliques") {
  const RunResult r = run_cli("limits phi-c4 --n 3");
  CHECK(r.exit_code == 0);
  const Json doc = parse_output(r);
  CHECK(doc["clique"] == "4/15");
  CHECK(doc["anticlique"] == "1/15");
}

TEST_CASE("property decision from a named family and from a file") {
  const RunResult named = run_cli("aehp --forbidden P4,C4,K2");
  CHECK(named.exit_code == 0);
  const Json doc = parse_output(named);
  CHECK(doc["holds"] == true);
  CHECK(doc["ehp_corollary"] == true);
  CHECK(doc["witness_index"] == 2);  // 1-based position of the 4-cycle

  const std::string path = write_temp("family.g6", "Ch\n");  // one induced path
  const RunResult from_file = run_cli("aehp --forbidden " + path);
  CHECK(from_file.exit_code == 0);
  CHECK(parse_output(from_file)["holds"] == false);
}

TEST_CASE("membership subcommand") {
  CHECK(parse_output(run_cli("aehp member --graph C4"))["member"] == true);
  CHECK(parse_output(run_cli("aehp member --graph P4"))["member"] == false);
}

TEST_CASE("output bytes are deterministic run to run") {
  const std::string cmd = "sample report --graphon c4:1 --sizes 30 "
                          "--patterns K2,K3 --samples 5 --seed 11";
  const RunResult a = run_cli(cmd);
  const RunResult b = run_cli(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.out.empty());
}

TEST_CASE("pretty printing changes layout, not content") {
  const RunResult plain = run_cli("density --pattern K3 --host C5");
  const RunResult pretty = run_cli("density --pattern K3 --host C5 --pretty");
  CHECK(plain.exit_code == 0);
  CHECK(pretty.exit_code == 0);
  CHECK(plain.out != pretty.out);
  CHECK(parse_output(plain) == parse_output(pretty));
}

TEST_CASE("errors arrive as typed JSON with exit code 2") {
  const RunResult missing = run_cli("density --pattern K2");
  CHECK(missing.exit_code == 2);
  CHECK(error_code(missing) == "bad-request");

  const RunResult no_file = run_cli("density --pattern K2 --host ./no/file.g6");
  CHECK(no_file.exit_code == 2);
  CHECK(error_code(no_file) == "file-not-found");

  const RunResult bad_literal = run_cli("density --pattern K2 --host '!!!x'");
  CHECK(bad_literal.exit_code == 2);
  CHECK(error_code(bad_literal) == "parse-error");

  const RunResult unknown_flag = run_cli("density --no-such-flag");
  CHECK(unknown_flag.exit_code == 2);
  CHECK(error_code(unknown_flag) == "bad-request");

  const RunResult empty = run_cli("");
  CHECK(empty.exit_code == 2);
  CHECK(error_code(empty) == "bad-request");
}

TEST_CASE("vertex budgets apply from flag and environment") {
  const RunResult flagged =
      run_cli("structure blowup --base C4 --level 2 --budget 10");
  CHECK(flagged.exit_code == 2);
  CHECK(error_code(flagged) == "budget-exceeded");

  const RunResult env_limited =
      run_cli("structure blowup --base C4 --level 2", "LIMITLAB_BUDGET=10");
  CHECK(env_limited.exit_code == 2);
  CHECK(error_code(env_limited) == "budget-exceeded");

  const RunResult fits = run_cli("structure blowup --base C4 --level 2");
  CHECK(fits.exit_code == 0);
  const Json doc = parse_output(fits);
  CHECK(doc["n"] == 16);
  CHECK(doc["edge_count"] == 80);
}

TEST_CASE("help exits cleanly") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("stability --help").exit_code == 0);
}

TEST_CASE("witness files round-trip through the verifier") {
  const RunResult found =
      run_cli("stability half-graph --graph Hhat3 --order 3");
  CHECK(found.exit_code == 0);
  const Json doc = parse_output(found);
  REQUIRE(doc["status"] == "found");
  const std::string path =
      write_temp("witness.json", doc["witness"].dump());
  const RunResult verified =
      run_cli("stability verify --graph Hhat3 --witness " + path);
  CHECK(verified.exit_code == 0);
  const Json vdoc = parse_output(verified);
  CHECK(vdoc["kind"] == "half-graph");
  CHECK(vdoc["valid"] == true);
}

TEST_CASE("sample reports can stream as CSV") {
  const RunResult r = run_cli(
      "sample report --graphon constant:1/2 --sizes 20 --patterns K2 "
      "--samples 4 --seed 9 --csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("size,pattern,mean,std_dev,std_error,exact,flagged", 0) ==
        0);
  // Header plus one row per (size, pattern) pair.
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 2);
}

TEST_CASE("prefix density of the built-in countable example") {
  const RunResult r = run_cli("glue density --n 511");
  CHECK(r.exit_code == 0);
  const Json doc = parse_output(r);
  CHECK(doc["members"] == 497);
  CHECK(doc["density"] == "17608/18615");
}

TEST_CASE("gluing oracle prefixes from the command line") {
  const RunResult r =
      run_cli("glue --checkpoints 1,2,4,8,16 --name union-of-log-cliques");
  CHECK(r.exit_code == 0);
  const Json doc = parse_output(r);
  CHECK(doc["glued"] == Json::array({1}));
  REQUIRE(doc["checkpoints"].is_array());
  CHECK(doc["checkpoints"].size() == 4);
  for (const Json& cp : doc["checkpoints"]) CHECK(cp["sym_diff"] == 0);
}

TEST_CASE("format conversion reports the canonical encoding") {
  const RunResult r = run_cli("density convert --graph Cl");
  CHECK(r.exit_code == 0);
  const Json doc = parse_output(r);
  CHECK(doc["n"] == 4);
  CHECK(doc["edge_count"] == 4);
  CHECK(doc["graph6"] == "Cl");
  CHECK(doc.contains("canonical_graph6"));
}

TEST_CASE("embedding a non-member fails with the typed error") {
  const RunResult r = run_cli("structure embed --graph P4");
  CHECK(r.exit_code == 2);
  CHECK(error_code(r) == "not-a-member");
}

TEST_CASE("extraction and goodness check from the command line") {
  const RunResult r =
      run_cli("extract --graph Hhat3 --epsilon 1/4");
  CHECK(r.exit_code == 0);
  const Json doc = parse_output(r);
  REQUIRE(doc.contains("part"));
  REQUIRE(doc["part"].is_array());
  CHECK(doc["part"].size() >= 1);

  std::string subset;
  for (const Json& v : doc["part"]) {
    if (!subset.empty()) subset += ",";
    subset += std::to_string(v.get<int>());
  }
  const RunResult check = run_cli("extract check --graph Hhat3 --subset " +
                                  subset + " --epsilon 1/4");
  CHECK(check.exit_code == 0);
  CHECK(parse_output(check)["good"] == true);
}
