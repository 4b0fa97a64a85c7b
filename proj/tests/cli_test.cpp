#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "tau/cli/cli.hpp"
#include "tau/cli/report.hpp"
#include "tau/verify/acceptance.hpp"

namespace tau::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("tau-cli-test." + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / name;
}

TEST(Cli, SeriesToStdout) {
  const Outcome r = run({"series", "--limit", "5"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "TAUCACHE 1\n5\n1 1\n2 -24\n3 252\n4 -1472\n5 4830\n");
}

TEST(Cli, TauAndCache) {
  EXPECT_EQ(run({"tau", "63001"}).out, "-80561663527802406257321747\n");
  EXPECT_EQ(run({"tau", "6"}).out, "-6048\n");
  EXPECT_EQ(run({"tau", "1"}).out, "1\n");

  const fs::path cache = scratch("t.cache");
  fs::remove(cache);
  // tau(100) = tau(4) tau(25) = -1472 * (4830^2 - 5^11)
  EXPECT_EQ(run({"tau", "100", "--cache", cache.string()}).out, "37534859200\n");
  ASSERT_TRUE(fs::exists(cache));
  EXPECT_EQ(run({"tau", "2", "--cache", cache.string()}).out, "-24\n");
  EXPECT_EQ(run({"series", "--limit", "200", "--out", cache.string()}).code, kExitOk);
  // tau(200) = tau(8) tau(25) = 84480 * -25499225
  EXPECT_EQ(run({"tau", "200", "--cache", cache.string()}).out, "-2154174528000\n");

  std::ofstream(cache) << "TAUCACHE 9\n1\n1 1\n";
  const Outcome bad = run({"tau", "2", "--cache", cache.string()});
  EXPECT_EQ(bad.code, kExitDomain);
  EXPECT_NE(bad.err.find("version"), std::string::npos);
}

TEST(Cli, PrimePowerClassifyPoly) {
  EXPECT_EQ(run({"prime-power", "2", "2"}).out, "-1472\n");
  EXPECT_EQ(run({"prime-power", "3", "2"}).out, "-113643\n");
  EXPECT_EQ(run({"prime-power", "4", "2"}).code, kExitDomain);
  EXPECT_EQ(run({"classify", "59"}).out, "PrincipalForm a=6 b=1\n");
  EXPECT_EQ(run({"classify", "5"}).out, "NonResidue\n");
  EXPECT_EQ(run({"classify", "23"}).out, "IsTwentyThree\n");
  EXPECT_EQ(run({"classify", "9"}).code, kExitDomain);
  EXPECT_EQ(run({"poly", "--k", "2"}).out, "y^2 - 3*x*y + x^2\n");
  const Outcome roots = run({"poly", "--k", "3", "--roots", "--digits", "30"});
  EXPECT_NE(roots.out.find("alpha_1 = 3.2469796037"), std::string::npos);
  EXPECT_NE(roots.out.find("min_gap = 1.3568958678"), std::string::npos);
}

TEST(Cli, CongruenceTable) {
  const Outcome r = run({"congruence-table", "--pmax", "100"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("mismatches: 0"), std::string::npos);
  const Outcome j = run({"congruence-table", "--pmax", "50", "--json"});
  const json doc = json::parse(j.out);
  EXPECT_EQ(doc["command"], "congruence-table");
  EXPECT_EQ(doc["payload"]["rows"].size(), 15u);
}

TEST(Cli, SearchFormatsAndDeterminism) {
  const std::vector<std::string> args = {"search", "--pmax", "300", "--kmax", "2", "--vmax", "1e40", "--json"};
  const Outcome a = run(args);
  const Outcome b = run(args);
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(verify::strip_timestamp(a.out), verify::strip_timestamp(b.out));
  const json doc = json::parse(a.out);
  EXPECT_EQ(doc["tool_version"], kToolVersion);
  const auto hits = hits_from_document(doc);
  EXPECT_FALSE(hits.empty());
  bool lehmer = false;
  for (const auto& h : hits) lehmer |= h.p == 251 && h.k == 1 && h.verdict == Verdict::ProbablePrime;
  EXPECT_TRUE(lehmer);

  const Outcome csv = run({"search", "--pmax", "300", "--kmax", "2", "--vmax", "1e40", "--csv"});
  EXPECT_EQ(csv.out, hits_to_csv(hits));
  EXPECT_EQ(run({"search", "--pmax", "300", "--kmax", "2", "--vmax", "1e40", "--csv", "--json"}).code, kExitUsage);
  EXPECT_EQ(run({"search", "--pmax", "10", "--kmax", "1", "--vmax", "1eX"}).code, kExitDomain);
}

TEST(Cli, CensusFromSearchOutput) {
  const fs::path hits = scratch("hits.json");
  {
    std::ofstream out(hits);
    out << run({"search", "--pmax", "300", "--kmax", "2", "--vmax", "1e40", "--json"}).out;
  }
  const Outcome r = run({"census", "--from", hits.string(), "--cap", "1e27"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["payload"]["counts"][1], 1);
  EXPECT_EQ(doc["payload"]["total_prime_hits"], 1);
  EXPECT_EQ(run({"census", "--from", scratch("missing.json").string(), "--cap", "10"}).code, kExitDomain);
}

TEST(Cli, SmallestPrimeAndBounds) {
  EXPECT_EQ(run({"smallest-prime", "--limit", "5"}).out, "none\n");
  const Outcome b = run({"bounds", "--N", "1e12", "--scan-to", "100"});
  ASSERT_EQ(b.code, kExitOk) << b.err;
  const json doc = json::parse(b.out);
  EXPECT_EQ(doc["payload"]["density_fraction"]["numerator"], 9);
  EXPECT_EQ(doc["payload"]["M"], 11);
  EXPECT_EQ(doc["payload"]["crossover_B_minus_A"]["first_positive_M"], 52);
  EXPECT_EQ(doc["payload"]["crossover_B_minus_A_times_k_count"]["first_positive_M"], 76);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"series"}).code, kExitUsage);
  EXPECT_EQ(run({"series", "--limit", "5", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, VerifyBoundsSuite) {
  const Outcome r = run({"verify", "--suite", "bounds"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_NE(r.out.find("PASS [12]"), std::string::npos);
}

}  // namespace
}  // namespace tau::cli
