#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "jgl/catalog.hpp"
#include "jgl/serialize.hpp"

using namespace jgl;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

std::string cli() {
  const char* p = std::getenv("JGL_CLI");
  return p ? p : "jgl";
}

std::string data(const std::string& name) {
  const char* d = std::getenv("JGL_TEST_DATA");
  return (fs::path(d ? d : "tests/data") / name).string();
}

/// Runs the CLI with stderr folded into the captured output.
Result run(const std::string& args) {
  std::string cmd = "'" + cli() + "' " + args + " 2>&1";
  Result r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json report(const Result& r) { return Json::parse(r.out); }

}  // namespace

TEST(Cli, VerifyCatalogFixture) {
  auto r = run("verify --input " + data("rectangular_1_2.json"));
  ASSERT_EQ(r.code, 0) << r.out;
  Json d = report(r);
  EXPECT_EQ(d["status"], "pass");
  EXPECT_EQ(d["ring"], "f5");
  EXPECT_EQ(d["checks"].size(), 4u);
}

TEST(Cli, VerifyBrokenFixture) {
  auto r = run("verify --input " + data("one_sided_1_2.json"));
  ASSERT_EQ(r.code, 1) << r.out;
  Json d = report(r);
  EXPECT_EQ(d["status"], "fail");
  EXPECT_EQ(d["checks"][0]["name"], "LJP1+");
  EXPECT_TRUE(d["checks"][0].contains("witness"));
}

TEST(Cli, MalformedCoefficientIsRejected) {
  auto r = run("verify --input " + data("bad_coefficient.json"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("/tplus/0/4"), std::string::npos) << r.out;
}

TEST(Cli, CatalogMatchesLibrary) {
  auto r = run("catalog rectangular --params 2 1 --ring q");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(pair_from_json(report(r)), catalog::rectangular_pair(2, 1, Ring::rational()));
  EXPECT_EQ(run("catalog octonionic").code, 2);
}

TEST(Cli, OrbitOfSl2) {
  auto r = run("orbit --algebra sl2 --ring f5");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(report(r)["result"]["orbit_size"], 6);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("--bogus").code, 2);
  EXPECT_EQ(run("verify").code, 2);
  EXPECT_EQ(run("flags roundtrip").code, 2);
  EXPECT_EQ(run("suite --name nope").code, 2);
  EXPECT_EQ(run("--ring f4 orbit --algebra sl2").code, 2);
}

TEST(Cli, SeededRunsSucceed) {
  auto r = run("--seed 7 flags roundtrip --n 4 --count 20");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(report(r)["checks"][0]["details"]["seed"], 7);
}

TEST(Cli, MidpointOverF5) {
  const std::string args = R"(geom pr --x '{"rep":[["1"],["0"]]}' --alpha '{"rep":[["1","0"]]}' --y '{"rep":[["1"],["1"]]}')";
  auto r = run(args + " --r 3");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(report(r)["result"]["rep"], Json::parse(R"([["1"],["3"]])"));
  // F_p scalars are residues, not fractions
  EXPECT_EQ(run(args + " --r 1/2").code, 2);
}

TEST(Cli, TextFormat) {
  auto r = run("--report-format text verify --input " + data("rectangular_1_2.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS LJP1+"), std::string::npos) << r.out;
}

TEST(Cli, OutputFileAndDeterminism) {
  fs::path dir = fs::temp_directory_path() / ("jgl-cli-test-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  std::string first;
  for (int k = 0; k < 3; ++k) {
    fs::path out = dir / "r.json";
    auto r = run("states pure --m 2 --out '" + out.string() + "'");
    ASSERT_EQ(r.code, 0) << r.out;
    std::ifstream in(out, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    if (k == 0) first = s.str();
    EXPECT_EQ(s.str(), first);
  }
  EXPECT_FALSE(first.empty());
  fs::remove_all(dir);
}

TEST(Cli, SuiteList) {
  auto r = run("suite --list");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("affine-failure"), std::string::npos);
}
