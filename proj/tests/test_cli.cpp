// Black-box checks of the command-line tool: exit codes and output shape.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(PROJCB_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("map command") {
  auto json = run("map --mode init --m 3 --n 3 --format json");
  CHECK(json.exit_code == 0);
  auto j = nlohmann::json::parse(json.out);
  CHECK(j.at("squares").size() == 7);

  CHECK(run("map --mode term --m 12 --n 5 --format svg").exit_code == 0);
  CHECK(run("map --mode diagonals --m 6 --n 4").exit_code == 0);

  // invalid dims and portrait orientation are usage errors
  CHECK(run("map --mode init --m 0 --n 3").exit_code == 2);
  auto portrait = run("map --mode init --m 3 --n 5");
  CHECK(portrait.exit_code == 2);
  CHECK(portrait.out.find("transpose") != std::string::npos);
}

TEST_CASE("path command") {
  auto ha = run("path --kind ha --m 4 --n 3 --a 1");
  CHECK(ha.exit_code == 0);
  CHECK(ha.out.find("NNNNNENNNNN") != std::string::npos);

  auto spec = run("path --spec --m 3 --n 3 --init 0,2 --term 1,0 --east \"\"");
  CHECK(spec.exit_code == 0);
  CHECK(spec.out.find("NNNNNENN") != std::string::npos);

  auto bad = run("path --kind exceptional --m 4");
  CHECK(bad.exit_code == 1);
  auto j = nlohmann::json::parse(bad.out);
  CHECK(j.at("error").at("kind") == "HypothesisViolation");

  auto none = run("path --spec --m 3 --n 3 --init 2,0 --term 1,0 --east \"\"");
  CHECK(none.exit_code == 1);
}

TEST_CASE("enumerate command") {
  auto dfs = run("enumerate --m 3 --n 3 --method dfs --count-only");
  CHECK(dfs.exit_code == 0);
  auto diag = run("enumerate --m 3 --n 3 --method diagonal --count-only");
  CHECK(diag.exit_code == 0);

  auto count_of = [](const std::string& text) {
    auto header = nlohmann::json::parse(text.substr(0, text.find('\n')));
    return header.at("count").get<int>();
  };
  CHECK(count_of(dfs.out) == count_of(diag.out));
  CHECK(count_of(dfs.out) > 0);

  auto cycle = run("enumerate --m 2 --n 2");
  CHECK(cycle.exit_code == 0);
  CHECK(cycle.out.find("hamiltonian_cycle") != std::string::npos);

  CHECK(run("enumerate --m 9 --n 9 --method dfs").exit_code == 3);
}

TEST_CASE("verify command") {
  auto v = run("verify --suite n12 --max-m 4 --max-n 4");
  CHECK(v.exit_code == 0);
  CHECK(v.out.find("PASS") != std::string::npos);
  CHECK(v.out.find("FAIL") == std::string::npos);

  CHECK(run("verify --suite nonsense").exit_code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run("").exit_code == 2);
  CHECK(run("map --mode init --m 3").exit_code == 2);  // missing --n
  CHECK(run("frobnicate").exit_code == 2);
}
