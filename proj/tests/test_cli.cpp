#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rankone/cli.hpp"

using namespace rankone;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, TheoremPasses) {
  const auto r = run({"--q", "8", "--family", "sz", "--no-timing", "theorem"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["tool"], "rankone");
  EXPECT_EQ(j["config"]["seed"], 1);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["elapsed_ms"], 0.0);
}

TEST(Cli, NoTimingIsByteIdentical) {
  const std::vector<std::string> a{"--q", "3", "--family", "pgu3", "--no-timing", "distance", "--method", "both"};
  EXPECT_EQ(run(a).out, run(a).out);
  const std::vector<std::string> s{"--no-timing", "suite", "smoke"};
  const auto s1 = run(s), s2 = run(s);
  EXPECT_EQ(s1.code, 0) << s1.err;
  EXPECT_EQ(s1.out, s2.out);
}

TEST(Cli, VerifySuzukiSystem) {
  const auto r = run({"--q", "8", "verify", "--lemma", "system-sz"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  ASSERT_EQ(j["results"]["reports"].size(), 7u);
  for (const auto& s : j["results"]["reports"]) EXPECT_EQ(s["count"], 4);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"--bogus", "theorem"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--q", "8", "verify", "--lemma", "nope"}).code, 2);
  EXPECT_EQ(run({"--q", "8", "--modulus", "1,x", "verify", "--lemma", "system-sz"}).code, 2);
  EXPECT_EQ(run({"--q", "8", "--family", "sz", "--out", "/nonexistent/dir/r.json", "theorem"}).code, 2);
  EXPECT_EQ(run({"--q", "3", "geometry", "minkowski", "--perm", "0,0,1,2"}).code, 2);
}

TEST(Cli, InfeasibleExitsThree) {
  EXPECT_EQ(run({"--q", "11", "--family", "pgu3", "distance", "--method", "brute"}).code, 3);
  EXPECT_EQ(run({"--q", "6", "--family", "pgl2", "build"}).code, 3);
  EXPECT_EQ(run({"--q", "16", "--family", "sz", "theorem"}).code, 3);
}

TEST(Cli, FailedCheckExitsOne) {
  const auto path = std::filesystem::temp_directory_path() / "rankone_bad_gens.json";
  {
    std::ofstream f(path);
    std::vector<int> id(28);
    for (int i = 0; i < 28; ++i) id[i] = i;
    f << json{{"generators", {id}}}.dump();
  }
  EXPECT_EQ(run({"--q", "3", "--family", "ree", "--generators", path.string(), "build"}).code, 1);
  std::filesystem::remove(path);
}

TEST(Cli, OutFileAndCsv) {
  const auto path = std::filesystem::temp_directory_path() / "rankone_report.json";
  const auto r = run({"--q", "4", "--family", "pgu3", "--out", path.string(), "--no-timing", "theorem"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  const auto j = json::parse(f);
  EXPECT_EQ(j["results"]["lower"], 62);
  std::filesystem::remove(path);

  const auto c = run({"--q", "3", "--format", "csv", "geometry", "cr", "--ambient", "pg3"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_FALSE(c.out.empty());
  EXPECT_EQ(c.out.find('{'), std::string::npos);
}

TEST(Cli, ModulusIsParsedAndEchoed) {
  EXPECT_EQ(cli::parse_modulus("1,1,0,1"), (std::vector<unsigned>{1, 1, 0, 1}));
  EXPECT_FALSE(cli::parse_modulus(""));
  EXPECT_THROW(cli::parse_modulus("1,,2"), cli::UsageError);
  const auto r = run({"--q", "8", "--modulus", "1,0,1,1", "--no-timing", "verify", "--lemma", "system-sz"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["config"]["modulus"], "1,0,1,1");
  EXPECT_EQ(j["results"]["field"]["modulus"], json({1, 0, 1, 1}));
  EXPECT_EQ(run({"--q", "8", "--modulus", "1,0,0,1", "verify", "--lemma", "system-sz"}).code, 3);
}

TEST(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("theorem"), std::string::npos);
}
