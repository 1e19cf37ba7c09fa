#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli/cli.hpp"
#include "cli/manifest.hpp"
#include "dcdsum/constructions.hpp"
#include "dcdsum/set_io.hpp"

namespace fs = std::filesystem;
using dcdsum::cli::run;

namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("dcdsum_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    previous_ = fs::current_path();
    fs::current_path(dir_);
  }
  void TearDown() override {
    fs::current_path(previous_);
    fs::remove_all(dir_);
  }

  int invoke(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return run(args, out_, err_);
  }

  static void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

  static std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  static nlohmann::json load_json(const std::string& path) { return nlohmann::json::parse(slurp(path)); }

  fs::path dir_;
  fs::path previous_;
  std::ostringstream out_;
  std::ostringstream err_;
};

}  // namespace

TEST_F(CliTest, AnalyzeSingleton) {
  write("single.txt", "0\n");
  ASSERT_EQ(invoke({"analyze", "--a", "single.txt", "--b", "single.txt"}), dcdsum::cli::kExitOk) << err_.str();
  const auto j = nlohmann::json::parse(out_.str());
  EXPECT_EQ(j["|A+B|"], 1);
  EXPECT_EQ(j["|A-B|"], 1);
  EXPECT_EQ(j["E_2"], 1);
  EXPECT_DOUBLE_EQ(j["E_1.5"].get<double>(), 1.0);
  EXPECT_EQ(j["maxMultiplicity"], 1);
  EXPECT_TRUE(fs::exists("dcdsum-analyze.manifest.json"));
}

TEST_F(CliTest, AnalyzeWritesJsonCsvAndManifest) {
  write("a.txt", "0\n1\n3\n");
  ASSERT_EQ(invoke({"analyze", "--a", "a.txt", "--b", "a.txt", "--json", "out.json", "--csv", "hist.csv"}), 0)
      << err_.str();
  const auto j = load_json("out.json");
  EXPECT_EQ(j["|A+B|"], 6);
  EXPECT_EQ(j["E_2"], 15);
  EXPECT_NEAR(j["E_1.5"].get<double>(), 11.48528137423857, 1e-12);
  EXPECT_EQ(slurp("hist.csv"), "multiplicity,count\n1,3\n2,3\n");

  const auto m = load_json("out.json.manifest.json");
  EXPECT_EQ(m["command"], "analyze");
  EXPECT_EQ(m["inputHashes"]["a.txt"].get<std::string>().rfind("sha256:", 0), 0u);
  EXPECT_EQ(m["outputs"].size(), 2u);
  EXPECT_EQ(m["toolVersion"], dcdsum::cli::tool_version());
}

TEST_F(CliTest, MalformedFileIsInputError) {
  write("bad.txt", "1\n2\nx\n");
  EXPECT_EQ(invoke({"analyze", "--a", "bad.txt", "--b", "bad.txt"}), dcdsum::cli::kExitInputError);
  EXPECT_NE(err_.str().find(":3:"), std::string::npos) << err_.str();

  write("dup.txt", "5\n6\n5\n");
  EXPECT_EQ(invoke({"crossings", "--a", "dup.txt", "--b", "dup.txt"}), dcdsum::cli::kExitInputError);
  EXPECT_NE(err_.str().find("duplicate"), std::string::npos);

  EXPECT_EQ(invoke({"analyze", "--a", "missing.txt", "--b", "missing.txt"}), dcdsum::cli::kExitInputError);
  EXPECT_EQ(invoke({"nonsense"}), dcdsum::cli::kExitInputError);
  EXPECT_EQ(invoke({"construct", "coprime", "--t", "0"}), dcdsum::cli::kExitInputError);
}

TEST_F(CliTest, CrossingsGoldenOutput) {
  write("a.txt", "0\n1\n3\n");
  write("b.txt", "0\n1\n");
  ASSERT_EQ(invoke({"crossings", "--a", "a.txt", "--b", "b.txt", "--oracle"}), 0) << err_.str();
  EXPECT_EQ(out_.str(),
            "{\n  \"crossings\": 1,\n  \"intersections\": 1,\n  \"maxTranslatePairCrossings\": 1,\n"
            "  \"degreeSequence\": [\n    3,\n    2,\n    1,\n    1,\n    1\n  ]\n}\n");
}

TEST_F(CliTest, CheckAllPassesOnDcdInput) {
  write("a.txt", "0\n1\n3\n7\n12\n");
  write("b.txt", "0\n2\n3\n9\n");
  ASSERT_EQ(invoke({"check", "all", "--a", "a.txt", "--b", "b.txt", "--json", "reports.json"}), 0) << err_.str();
  const auto reports = load_json("reports.json");
  ASSERT_TRUE(reports.is_array());
  ASSERT_FALSE(reports.empty());
  for (const auto& r : reports) {
    for (const char* key : {"name", "relation", "mode", "preconditionMet", "satisfied", "lhs", "rhs", "ratio",
                            "note", "context"}) {
      EXPECT_TRUE(r.contains(key)) << key;
    }
  }
  EXPECT_TRUE(fs::exists("reports.json.manifest.json"));
}

TEST_F(CliTest, CheckAllOnNonDcdStillExitsZero) {
  write("a.txt", "0\n1\n2\n3\n");
  EXPECT_EQ(invoke({"check", "all", "--a", "a.txt", "--b", "a.txt"}), 0) << err_.str();
}

TEST_F(CliTest, ConstructSidonSeedThenAnalyze) {
  ASSERT_EQ(invoke({"construct", "sidon-seed", "--seed", "paper", "--k", "1", "--out", "seed"}), 0) << err_.str();
  const auto sidecar = load_json("seed.json");
  EXPECT_EQ(sidecar["sizes"]["|A|"], 43);
  EXPECT_EQ(sidecar["stats"]["|A+A|"], 694);
  EXPECT_EQ(sidecar["stats"]["distinctBSums"], 28);
  EXPECT_TRUE(sidecar["stats"]["isDcd"].get<bool>());
  EXPECT_TRUE(fs::exists("seed.json.manifest.json"));

  ASSERT_EQ(invoke({"analyze", "--a", "seed_A.txt", "--b", "seed_A.txt"}), 0) << err_.str();
  const auto j = nlohmann::json::parse(out_.str());
  EXPECT_EQ(j["|A|"], 43);
  EXPECT_EQ(j["|A+B|"], 694);
  EXPECT_TRUE(j["aIsDcd"].get<bool>());
}

TEST_F(CliTest, ConstructSidonSeedFromFileWithBase) {
  write("seed.txt", "0\n1\n3\n");
  ASSERT_EQ(invoke({"construct", "sidon-seed", "--seed", "seed.txt", "--k", "2", "--base", "100"}), 0)
      << err_.str();
  const auto j = nlohmann::json::parse(out_.str());
  EXPECT_EQ(j["sizes"]["|A|"], 49);
  EXPECT_EQ(j["stats"]["|A+A|"], 752);
  EXPECT_EQ(j["params"]["base"], 100);
  EXPECT_EQ(invoke({"construct", "sidon-seed", "--seed", "seed.txt", "--k", "1", "--paper-tour"}),
            dcdsum::cli::kExitInputError);
}

TEST_F(CliTest, ConstructCoprime) {
  ASSERT_EQ(invoke({"construct", "coprime", "--t", "1", "--out", "cp"}), 0) << err_.str();
  const auto j = load_json("cp.json");
  EXPECT_EQ(j["params"]["n"], 56);
  EXPECT_EQ(j["sizes"]["|A|"], 55);
  EXPECT_EQ(j["sizes"]["|A+B|"], 1648);
  EXPECT_TRUE(j["checks"]["everySumDivisible"].get<bool>());
  EXPECT_EQ(dcdsum::read_set_file("cp_A.txt"), dcdsum::coprime_construction(1).a);
  EXPECT_EQ(dcdsum::read_set_file("cp_B.txt"), dcdsum::coprime_construction(1).b);
}

TEST_F(CliTest, SidonCommands) {
  ASSERT_EQ(invoke({"sidon", "search", "--size", "3", "--max", "3"}), 0) << err_.str();
  auto j = nlohmann::json::parse(out_.str());
  EXPECT_EQ(j["count"], 2);
  EXPECT_EQ(j["sets"][0], nlohmann::json::array({0, 1, 3}));

  ASSERT_EQ(invoke({"sidon", "optimize", "--json", "opt.json"}), 0) << err_.str();
  j = load_json("opt.json");
  EXPECT_NEAR(j["xStar"].get<double>(), 6.99618, 1e-3);
  EXPECT_NEAR(j["fStar"].get<double>(), 0.114058, 1e-5);
  EXPECT_TRUE(j.contains("iterations"));
}

TEST_F(CliTest, ReproducePaperIsDeterministic) {
  ASSERT_EQ(invoke({"reproduce-paper", "--json", "r1.json", "--csv", "r1.csv"}), 0) << out_.str();
  ASSERT_EQ(invoke({"reproduce-paper", "--json", "r2.json"}), 0);
  EXPECT_EQ(slurp("r1.json"), slurp("r2.json"));
  const auto j = load_json("r1.json");
  EXPECT_TRUE(j["allMatch"].get<bool>());
  bool saw_seed = false;
  for (const auto& row : j["rows"]) {
    if (row["id"] == "seed.sums") {
      saw_seed = true;
      EXPECT_EQ(row["computed"], 28);
    }
  }
  EXPECT_TRUE(saw_seed);
  EXPECT_EQ(slurp("r1.csv").rfind("id,published,computed,match\n", 0), 0u);
}

TEST_F(CliTest, HelpExitsZero) {
  EXPECT_EQ(invoke({"--help"}), 0);
  EXPECT_NE(out_.str().find("reproduce-paper"), std::string::npos);
}
