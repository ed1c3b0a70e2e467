#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>

#include <sys/wait.h>

#include "h2cert/cli.hpp"

using namespace h2cert;

namespace {

using Args = std::vector<std::string>;

Json report_of(const CliOutcome& o) { return Json::parse(o.out); }

Json stripped(Json report) {
  report.erase("elapsedMs");
  return report;
}

// One representative invocation per subcommand, with small bounds.
const std::vector<Args>& scripted() {
  static const std::vector<Args> runs{
      {"series-eval", "--op", "mul", "--f", "1+x+x^2+x^3+x^4", "--g", "1+x+x^2+x^3+x^4", "--order", "5"},
      {"series-eval", "--op", "invert", "--f", "1+x", "--order", "6", "--mod", "3", "--exp", "2"},
      {"series-eval", "--op", "mul-poly", "--f", "1+y+y^2", "--nx", "2", "--ny", "3"},
      {"series-eval", "--op", "phi", "--q", "t^-1", "--order", "3"},
      {"rank", "--mod", "2", "--source", "explicit-F", "--nx", "120", "--ny", "120"},
      {"rank", "--source", "series", "--f", "2*x*y + 6*x^2*y^2", "--nx", "3", "--ny", "3"},
      {"decompose", "--mod", "3", "--rank", "3", "--nx", "90", "--ny", "90"},
      {"sieve-find", "--p", "2", "--n", "2", "--d", "4", "--nx", "300", "--ny", "300", "--deg", "6"},
      {"sieve-verify", "--m", "65", "--p", "3", "--n", "3", "--d", "4"},
      {"sieve-experiment", "--seed", "3", "--runs", "2"},
      {"powers-indep", "--u", "x", "--v", "-1-x", "--p", "5", "--n", "8"},
      {"build-f", "--nx", "40", "--ny", "40", "--antisym"},
      {"divisibility", "--p", "3", "--nx", "120", "--ny", "120"},
      {"specker", "--p", "2", "--k", "3", "--n", "6"},
      {"continuum", "--r=-1,0,1/2,1", "--n", "1024", "--primes", "2"},
      {"coinvariants", "--model", "completion", "--window", "5"},
      {"h2hat-quotient", "--n", "3"},
      {"ce-h2", "--n", "5"},
      {"acceptance", "--scale", "small"},
  };
  return runs;
}

std::string run_binary(const std::string& command_line, int& status) {
  std::string out;
  FILE* pipe = popen(command_line.c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), n);
  const int raw = pclose(pipe);
  status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

}  // namespace

TEST(Cli, SpecExamples) {
  const auto sieve = run_cli({"sieve-find", "--p", "2", "--n", "2", "--d", "4", "--nx", "300", "--ny", "300", "--deg", "6"});
  ASSERT_EQ(sieve.exit_code, 0) << sieve.err;
  const Json r = report_of(sieve);
  EXPECT_EQ(r["schemaVersion"], 1);
  EXPECT_EQ(r["result"]["certificate"]["m"], 69);
  EXPECT_TRUE(r["verified"].get<bool>());

  const auto rank = run_cli({"rank", "--mod", "2", "--source", "explicit-F", "--nx", "250", "--ny", "250"});
  ASSERT_EQ(rank.exit_code, 0) << rank.err;
  EXPECT_EQ(report_of(rank)["result"]["rank"], 2);

  const auto usage = run_cli({"sieve-find", "--d"});
  EXPECT_EQ(usage.exit_code, 2);
  EXPECT_TRUE(usage.out.empty());
  EXPECT_NE(usage.err.find("--d"), std::string::npos);
}

TEST(Cli, ExitCodeMatrix) {
  struct Case {
    Args args;
    int code;
  };
  const std::vector<Case> cases{
      {{"ce-h2", "--n", "3"}, 0},
      {{"sieve-verify", "--m", "69", "--p", "2", "--n", "2", "--d", "4"}, 0},
      {{"sieve-verify", "--m", "69", "--p", "2", "--n", "2", "--d", "4", "--shift", "1"}, 1},
      {{"sieve-verify", "--m", "69", "--p", "2", "--n", "2", "--d", "4", "--corrupt-a", "3", "--corrupt-b", "70"}, 1},
      {{"powers-indep", "--u", "x", "--v", "2*x", "--p", "3", "--n", "1", "--no-check"}, 1},
      {{"sieve-find", "--p", "2", "--n", "2", "--d", "4", "--source", "series", "--f", "0", "--nx", "40", "--ny", "40"}, 0},
      {{}, 2},
      {{"no-such-command"}, 2},
      {{"sieve-find", "--d"}, 2},
      {{"sieve-find", "--p", "2", "--n", "2"}, 2},
      {{"rank", "--nx", "ten"}, 2},
      {{"rank", "--bogus", "1"}, 2},
      {{"powers-indep", "--u", "2", "--v", "1"}, 2},
      {{"sieve-find", "--p", "4", "--n", "2", "--d", "4"}, 2},
      {{"sieve-experiment", "--alpha", "1", "--beta", "1"}, 2},
      {{"series-eval", "--op", "invert", "--f", "2+x"}, 2},
      {{"series-eval", "--op", "frobnicate"}, 2},
      {{"coinvariants", "--window", "1"}, 2},
      {{"decompose", "--mod", "2", "--rank", "5", "--nx", "50", "--ny", "50"}, 2},
      {{"continuum", "--r", "1/0"}, 2},
  };
  for (const auto& c : cases) {
    const auto o = run_cli(c.args);
    std::string joined;
    for (const auto& a : c.args) joined += a + " ";
    EXPECT_EQ(o.exit_code, c.code) << joined << "\n" << o.err;
    if (c.code == 2) EXPECT_TRUE(o.out.empty()) << joined;
    else EXPECT_NO_THROW(Json::parse(o.out)) << joined;
  }
}

TEST(Cli, EveryCommandIsScripted) {
  std::set<std::string> covered;
  for (const auto& args : scripted()) covered.insert(args.front());
  for (const auto& name : cli_commands()) EXPECT_TRUE(covered.count(name)) << name;
}

TEST(Cli, ReplayReproducesResults) {
  for (const auto& args : scripted()) {
    const auto first = run_cli(args);
    ASSERT_EQ(first.exit_code, 0) << args.front() << "\n" << first.err;
    const Json report = report_of(first);
    const auto again = run_cli(replay_args(report));
    ASSERT_EQ(again.exit_code, 0) << args.front() << "\n" << again.err;
    EXPECT_EQ(stripped(report_of(again)).dump(), stripped(report).dump()) << args.front();
  }
}

TEST(Cli, QuietSilencesProgressOnly) {
  const Args args{"rank", "--mod", "3", "--nx", "60", "--ny", "60"};
  const auto loud = run_cli(args);
  auto quiet_args = args;
  quiet_args.push_back("--quiet");
  const auto quiet = run_cli(quiet_args);
  EXPECT_FALSE(loud.err.empty());
  EXPECT_TRUE(quiet.err.empty());
  EXPECT_EQ(stripped(report_of(loud)), stripped(report_of(quiet)));
  const auto failing = run_cli({"powers-indep", "--u", "2", "--v", "1", "--quiet"});
  EXPECT_EQ(failing.exit_code, 2);
  EXPECT_FALSE(failing.err.empty());
}

TEST(Cli, CertificateFileRoundTrip) {
  const auto found = run_cli({"sieve-find", "--p", "3", "--n", "3", "--d", "4", "--quiet"});
  ASSERT_EQ(found.exit_code, 0);
  const std::string path = ::testing::TempDir() + "h2cert_cert.json";
  std::ofstream(path) << found.out;
  EXPECT_EQ(run_cli({"sieve-verify", "--cert", path}).exit_code, 0);
  EXPECT_EQ(run_cli({"sieve-verify", "--cert", path, "--shift", "1"}).exit_code, 1);
  EXPECT_EQ(run_cli({"sieve-verify", "--cert", path + ".missing"}).exit_code, 2);
}

TEST(Cli, BinaryHonoursTheContract) {
  const char* binary = std::getenv("H2CERT_CLI");
  if (binary == nullptr) GTEST_SKIP() << "H2CERT_CLI not set";
  int status = -1;
  const std::string out = run_binary(std::string(binary) + " ce-h2 --n 4 --quiet", status);
  EXPECT_EQ(status, 0);
  const Json r = Json::parse(out);
  EXPECT_EQ(r["command"], "ce-h2");
  EXPECT_TRUE(r["result"]["rankIdentity"].get<bool>());
  const std::string bad = run_binary(std::string(binary) + " sieve-find --d 2>/dev/null", status);
  EXPECT_EQ(status, 2);
  EXPECT_TRUE(bad.empty());
  run_binary(std::string(binary) + " sieve-verify --m 69 --p 2 --n 2 --d 4 --shift 1 --quiet", status);
  EXPECT_EQ(status, 1);
}
