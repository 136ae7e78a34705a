#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace braid2d::cli {
namespace {

const std::string kData = BRAID2D_TEST_DATA;

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "braid2d");
  std::ostringstream out;
  std::ostringstream err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

TEST(Cli, ValidateOkAndErrors) {
  auto r = run_cli({"validate", data("b_star.b2d")});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_NE(r.out.find("ok "), std::string::npos);

  r = run_cli({"validate", data("not_closed.b2d")});
  EXPECT_EQ(r.status, kExitDomainError);
  EXPECT_NE(r.out.find("BoundaryNotTrivial"), std::string::npos);

  r = run_cli({"validate", data("non_simple.b2d")});
  EXPECT_EQ(r.status, kExitDomainError);
  EXPECT_NE(r.out.find("line 2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("NonSimpleEntry"), std::string::npos);

  r = run_cli({"--json", "validate", data("non_simple.b2d")});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j[0]["error"], "NonSimpleEntry");
  EXPECT_EQ(j[0]["entry"], 1);
}

TEST(Cli, ValidateDirectory) {
  const auto r = run_cli({"validate", kData});
  EXPECT_EQ(r.status, kExitDomainError);
  EXPECT_NE(r.out.find("ok " + data("b_star.b2d")), std::string::npos);
  EXPECT_NE(r.out.find("error " + data("not_closed.b2d")), std::string::npos);
}

TEST(Cli, InvariantsOfBStar) {
  auto r = run_cli({"invariants", data("b_star.b2d"), "--hom-n", "3,4"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_NE(r.out.find("label: B*"), std::string::npos);
  EXPECT_NE(r.out.find("euler_characteristic: 2"), std::string::npos);
  EXPECT_NE(r.out.find("components: 1"), std::string::npos);
  EXPECT_NE(r.out.find("genus: [0]"), std::string::npos);
  EXPECT_NE(r.out.find("abelianization_rank: 1"), std::string::npos);
  EXPECT_NE(r.out.find("homs_to_S3: 6"), std::string::npos);
  EXPECT_NE(r.out.find("homs_to_S4: 24"), std::string::npos);

  r = run_cli({"invariants", data("torus_nested.b2d"), "--json"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["euler_characteristic"], 0);
  EXPECT_EQ(j["genus"], nlohmann::json::array({1}));
  EXPECT_EQ(j["hom_counts"]["S3"], 6);
}

TEST(Cli, NormalForm) {
  auto r = run_cli({"normal-form", "--degree", "3", "--word", "1,-2"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_EQ(r.out, "D^-1 [1,3,2] [2,3,1]\n");
  r = run_cli({"normal-form", data("b_star.b2d")});
  EXPECT_EQ(r.out, "degree 2\n  D^1\n  D^-1\n");
  r = run_cli({"normal-form", "--word", "1"});
  EXPECT_EQ(r.status, kExitUsageError);
}

TEST(Cli, ApplyStabilizeToEmpty) {
  auto r = run_cli({"apply", data("empty1.b2d"), "--script", "S"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_EQ(r.out, "degree 2\nband () 1 +1\nband () 1 -1\n");

  r = run_cli({"apply", data("b_star.b2d"), "--script", "S H2 C-1"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("degree 3\nlabel B*\n", 0), 0u);

  r = run_cli({"apply", data("b_star.b2d"), "--script", "H2"});
  EXPECT_EQ(r.status, kExitDomainError);
  EXPECT_NE(r.err.find("InapplicableMove"), std::string::npos);

  r = run_cli({"apply", data("b_star.b2d"), "--script", "Q"});
  EXPECT_EQ(r.status, kExitDomainError);
}

TEST(Cli, EquivDegreeTwo) {
  auto r = run_cli({"equiv", data("torus_alternating.b2d"), data("torus_nested.b2d")});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_NE(r.out.find("verdict: Equivalent"), std::string::npos);
  EXPECT_NE(r.out.find("trace: H"), std::string::npos);

  r = run_cli({"equiv", data("b_star.b2d"), data("torus_nested.b2d"), "--json"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "Distinct");
  EXPECT_EQ(j["invariant"], "euler_characteristic");

  r = run_cli({"equiv", data("torus_alternating.b2d"), data("torus_nested.b2d"), "--max-depth", "0"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_NE(r.out.find("verdict: Unknown"), std::string::npos);
}

TEST(Cli, ApplyThenEquivIsEquivalent) {
  const auto dir = std::filesystem::temp_directory_path() / "braid2d_cli_test";
  std::filesystem::create_directories(dir);
  const auto r = run_cli({"apply", data("conjugated3.b2d"), "--script", "C+2 H1 H2'"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto moved = (dir / "moved.b2d").string();
  std::ofstream(moved) << r.out;
  const auto e = run_cli({"equiv", data("conjugated3.b2d"), moved});
  EXPECT_NE(e.out.find("verdict: Equivalent"), std::string::npos) << e.out;
  std::filesystem::remove_all(dir);
}

TEST(Cli, EnumerateAndCensus) {
  auto r = run_cli({"enumerate", "--degree", "2", "--branches", "4", "--count"});
  EXPECT_EQ(r.out, "6\n");
  r = run_cli({"enumerate", "--degree", "2", "--branches", "2"});
  EXPECT_EQ(r.out, "degree 2\nlabel enum-1\nband () 1 +1\nband () 1 -1\n\n"
                   "degree 2\nlabel enum-2\nband () 1 -1\nband () 1 +1\n");

  r = run_cli({"census", "--degree", "2", "--branches", "6", "--moves", "hurwitz", "--max-depth", "30"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_NE(r.out.find("tuples: 20  classes: 1"), std::string::npos) << r.out;

  r = run_cli({"--json", "census", "--dir", kData + "/../data", "--max-depth", "3"});
  // The directory holds invalid documents too.
  EXPECT_EQ(r.status, kExitDomainError);
}

TEST(Cli, CensusOverDirectoryUsesLabels) {
  const auto dir = std::filesystem::temp_directory_path() / "braid2d_census_test";
  std::filesystem::create_directories(dir);
  for (const char* name : {"b_star.b2d", "torus_alternating.b2d", "torus_nested.b2d", "empty1.b2d"}) {
    std::filesystem::copy_file(data(name), dir / name, std::filesystem::copy_options::overwrite_existing);
  }
  const auto r = run_cli({"--json", "census", "--dir", dir.string(), "--max-depth", "3"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["tuples"], 4);
  ASSERT_EQ(j["classes"].size(), 2u);
  EXPECT_EQ(j["classes"][0]["members"], nlohmann::json::array({"B*", "empty1.b2d"}));
  EXPECT_EQ(j["classes"][1]["members"], nlohmann::json::array({"alternating", "nested"}));
  std::filesystem::remove_all(dir);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).status, kExitUsageError);
  EXPECT_EQ(run_cli({"frobnicate"}).status, kExitUsageError);
  EXPECT_EQ(run_cli({"invariants"}).status, kExitUsageError);
  EXPECT_EQ(run_cli({"invariants", data("missing.b2d")}).status, kExitUsageError);
  EXPECT_EQ(run_cli({"invariants", data("b_star.b2d"), "--hom-n", "9"}).status, kExitUsageError);
  EXPECT_EQ(run_cli({"equiv", data("b_star.b2d"), data("b_star.b2d"), "--moves", "teleport"}).status,
            kExitUsageError);
  EXPECT_EQ(run_cli({"--help"}).status, kExitOk);
}

}  // namespace
}  // namespace braid2d::cli
