#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(XISIGMA_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  while (const auto got = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string model(const std::string& name) { return std::string(XISIGMA_SOURCE_DIR) + "/models/" + name + ".yaml"; }
std::string fixture(const std::string& name) {
  return std::string(XISIGMA_SOURCE_DIR) + "/tests/fixtures/" + name + ".yaml";
}

}  // namespace

TEST_CASE("atoms") {
  const auto r = cli("--model " + model("finite") + " atoms");
  CHECK(r.code == 0);
  CHECK(r.out.find("5 atoms") != std::string::npos);
}

TEST_CASE("spectrum listing and graph") {
  auto r = cli("--model " + model("nat") + " spectrum --list");
  CHECK(r.code == 0);
  CHECK(r.out.find("FreeCofinite") != std::string::npos);
  CHECK(r.out.find("Principal(9)") != std::string::npos);
  r = cli("--model " + model("convergent-sequence") + " spectrum --dot");
  CHECK(r.code == 0);
  CHECK(r.out.find("doublecircle") != std::string::npos);
  CHECK(r.out.find("ω") != std::string::npos);
}

TEST_CASE("check exit codes") {
  CHECK(cli("--model " + model("omega") + " check all").code == 0);
  auto r = cli("--model " + model("cofinite") + " check open-halos");
  CHECK(r.code == 0);
  CHECK(r.out.find("SKIP open-halos") != std::string::npos);
  r = cli("--model " + fixture("broken-norm") + " check quasi-norm-axioms");
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL quasi-norm-axioms") != std::string::npos);
  r = cli("--model " + fixture("empty") + " check all");
  CHECK(r.code == 2);
  CHECK(r.out.find("empty model document") != std::string::npos);
  CHECK(cli("--model /nonexistent.yaml atoms").code == 2);
  CHECK(cli("--model " + model("nat") + " frobnicate").code == 2);
  r = cli("--model " + model("convergent-sequence") + " check semi-robinson");
  CHECK(r.code == 0);
  CHECK(r.out.find("pattern:") != std::string::npos);
}

TEST_CASE("json report and seed override") {
  const auto a = cli("--model " + model("nat") + " --json-report check meas-ext");
  CHECK(a.code == 0);
  CHECK(a.out.find("\"status\": \"PASS\"") != std::string::npos);
  const auto b = cli("--model " + model("nat") + " --seed 99 export");
  CHECK(b.out.find("seed: 99") != std::string::npos);
}

TEST_CASE("lift") {
  const auto r = cli("--model " + model("nat") + " lift");
  CHECK(r.code == 0);
  CHECK(r.out.find("∞:1/1024") != std::string::npos);
  CHECK(r.out.find("support") != std::string::npos);
  CHECK(cli("--model " + fixture("broken-norm") + " lift").code == 2);
}
