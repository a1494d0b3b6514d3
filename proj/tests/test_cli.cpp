#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "test_util.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("PENTAGON_CLI");
  REQUIRE(bin != nullptr);
  std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string cert_path() { return testutil::data_path("erdos-pentagon.cert.json"); }

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("verify subcommand") {
  RunResult r = run_cli("verify " + cert_path());
  CHECK(r.code == 0);
  CHECK(r.out.find("bound: 24/625") != std::string::npos);
  CHECK(r.out.find("#VERDICT pass") != std::string::npos);

  RunResult j = run_cli("verify --json " + cert_path());
  CHECK(j.code == 0);
  CHECK(j.out.find("\"bound\": \"24/625\"") != std::string::npos);

  // byte stability
  CHECK(run_cli("verify " + cert_path()).out == r.out);
}

TEST_CASE("enumerate subcommand") {
  RunResult r = run_cli("enumerate --order 5 --forbid k3");
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 14);
  CHECK(r.out.find("D??\n") == 0);  // edgeless first in the deterministic order
}

TEST_CASE("flags subcommand") {
  RunResult r = run_cli("flags --type sigma0 --m 4 --forbid k3");
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 8);
  CHECK(run_cli("flags --type sigma1 --m 4 --forbid k3").out.find("labels=1,2,3") !=
        std::string::npos);
}

TEST_CASE("erdos-check subcommand") {
  RunResult r = run_cli("erdos-check --graph petersen");
  CHECK(r.code == 0);
  CHECK(r.out.find("12 ≤ 32: below") != std::string::npos);

  RunResult demo = run_cli("erdos-check --graph c5 --demo");
  CHECK(demo.code == 0);
  CHECK(demo.out.find("1 ≤ 1: tight") != std::string::npos);
  CHECK(demo.out.find("24/625") != std::string::npos);
}

TEST_CASE("bound, blowup, trend subcommands") {
  CHECK(run_cli("bound --order 5 --forbid k3 --target c5").out == "1\n");
  RunResult b = run_cli("blowup --base c5 --factor 2");
  CHECK(b.code == 0);
  CHECK(count_lines(b.out) == 1);
  RunResult t = run_cli("trend --base c5 --target c5 --n-max 3");
  CHECK(t.out.find("1 1\n") != std::string::npos);
  CHECK(t.out.find("2 8/63\n") != std::string::npos);
  RunResult f = run_cli("blowup --base c5 --factors 2,1,1,1,1");
  CHECK(f.code == 0);
}

TEST_CASE("expressions subcommand") {
  RunResult r = run_cli("expressions " + cert_path());
  CHECK(r.code == 0);
  CHECK(r.out.find("(120p11) / 120") != std::string::npos);
  CHECK(r.out.find("(20q56 + 20r24 + 120) / 120") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("no-such-command").code == 2);
  CHECK(run_cli("enumerate").code == 2);            // missing required options
  CHECK(run_cli("verify /nonexistent.json").code == 2);
  CHECK(run_cli("--help").code == 0);
}

TEST_CASE("verification failure exits 1") {
  // claimed bound tightened beyond the certificate's reach
  std::string tmp = "/tmp/pentagon_cli_tight.json";
  std::string cmd = "sed 's#\"claimed_bound\": \"24/625\"#\"claimed_bound\": \"1/27\"#' " +
                    cert_path() + " > " + tmp;
  REQUIRE(std::system(cmd.c_str()) == 0);
  RunResult r = run_cli("verify " + tmp);
  CHECK(r.code == 1);
  CHECK(r.out.find("#VERDICT fail") != std::string::npos);
  std::remove(tmp.c_str());
}
