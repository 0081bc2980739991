// End-to-end checks of the installed command surface: spawns the real
// binary and inspects JSON output and exit codes.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct ExecResult {
  int exit_code = -1;
  json body;
};

ExecResult run_cli(const std::string& args) {
  std::string cmd = std::string(SCHINZEL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  ExecResult r;
  r.exit_code = WEXITSTATUS(status);
  if (!out.empty()) r.body = json::parse(out, nullptr, false);
  return r;
}

}  // namespace

TEST_CASE("cli delta matches the documented output") {
  ExecResult r = run_cli("delta --ring Z y y+2");
  CHECK(r.exit_code == 0);
  REQUIRE(r.body.is_object());
  CHECK(r.body["schema"] == 1);
  CHECK(r.body["result"]["delta"] == "2");
  CHECK(r.body["result"]["cofactors"] == json::array({"-1", "1"}));
  CHECK(r.body["verification"]["verified"] == true);
}

TEST_CASE("cli exit codes are stable") {
  // 2: precondition violation (AV2 fails)
  ExecResult r = run_cli("find-coprime --ring Z y^2-y+2 y^2-y");
  CHECK(r.exit_code == 2);
  CHECK(r.body["error"]["failing_prime"] == "2");

  // 1: parse error
  r = run_cli("delta --ring Z \"y^2 +\" y");
  CHECK(r.exit_code == 1);
  CHECK(r.body["error"]["type"] == "parse");

  // 1: bad ring selector
  r = run_cli("delta --ring K y y+2");
  CHECK(r.exit_code == 1);

  // 3: budget exhaustion (lattice dimension cap)
  r = run_cli("min-delta --ring Z --degree-bound 4000 y y+2");
  CHECK(r.exit_code == 3);
  CHECK(r.body["error"]["type"] == "budget");

  // 2: common factor
  r = run_cli("delta --ring Z y 2y");
  CHECK(r.exit_code == 2);
  CHECK(r.body["error"]["type"] == "common-factor");
}

TEST_CASE("cli goldbach and table mode") {
  ExecResult r = run_cli("goldbach-mod-n --two-n 8 --mod 3 --want 2");
  CHECK(r.exit_code == 0);
  CHECK(r.body["result"]["witnesses"].size() == 2);
  CHECK(r.body["verification"]["all_witnesses_certified"] == true);

  // table mode is not JSON
  std::string cmd = std::string(SCHINZEL_CLI_PATH) + " delta --ring Z --table y y+2 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  CHECK(out.find("result.delta = 2") != std::string::npos);
}

TEST_CASE("cli env budget scale is honored") {
  std::string cmd = "SCHINZEL_BUDGET_SCALE=1/2 " + std::string(SCHINZEL_CLI_PATH) +
                    " delta --ring Z y y+2 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  json body = json::parse(out);
  CHECK(body["budget_report"]["scan_cap"] == 500);
  CHECK(body["budget_report"]["scale"] == "1/2");
}

TEST_CASE("cli selftest runs the fixture corpus") {
  ExecResult r = run_cli("selftest");
  CHECK(r.exit_code == 0);
  CHECK(r.body["result"]["failures"] == json::array());
  CHECK(r.body["result"]["fixtures_run"].get<int>() >= 18);
  CHECK(r.body["result"]["swan_sweep"] == "pass");
  CHECK(r.body["result"]["parser_roundtrip"] == "pass");
}
