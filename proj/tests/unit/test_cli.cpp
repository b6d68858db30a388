#include "commands.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

namespace simplexvol::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::initializer_list<std::string> args) {
  std::vector<std::string> storage{"simplexvol"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& s : storage) {
    argv.push_back(s.c_str());
  }
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("simplexvol_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& contents) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << contents;
    return p.string();
  }

  fs::path dir_;
};

TEST_F(CliTest, SpectrumPetersen) {
  const Invocation r = invoke({"spectrum", "--n", "4", "--k", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["schema_version"], "1");
  EXPECT_EQ(doc["eigenvalues"], json::array({3, 1, -2}));
  EXPECT_EQ(doc["multiplicities"], json::array({1, 5, 4}));
  EXPECT_EQ(doc["det"], "48");
  EXPECT_EQ(doc["annihilation"], true);
}

TEST_F(CliTest, SpectrumLargeDeterminantIsDecimalString) {
  const Invocation r = invoke({"spectrum", "--n", "12", "--k", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  // (1/2) * 10^13 * 11
  EXPECT_EQ(json::parse(r.out)["det"], "55000000000000");
}

TEST_F(CliTest, CounterexamplePasses) {
  const Invocation r = invoke({"counterexample", "--n", "4", "--x", "0.5", "--tol", "1e-10"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["passed"], true);
  EXPECT_DOUBLE_EQ(doc["t_minus"].get<double>(), 1.5);
  EXPECT_DOUBLE_EQ(doc["t_plus"].get<double>(), 2.5);
  EXPECT_EQ(doc["instances"]["minus"]["squared_lengths"].size(), 10u);
  EXPECT_EQ(doc["instances"]["plus"]["vertices"].size(), 5u);
}

TEST_F(CliTest, CounterexampleOutsideRangeIsUsageError) {
  const Invocation r = invoke({"counterexample", "--n", "4", "--x", "0.9"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST_F(CliTest, VolumeOfThreeFourFiveTriangle) {
  const std::string tri = write("tri.json", R"({"n": 2, "squared_lengths": [9, 16, 25]})");
  const Invocation r = invoke({"volume", "--input", tri});
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_DOUBLE_EQ(doc["volume"].get<double>(), 6.0);
  EXPECT_EQ(doc["squared_volume_exact"], "36");
}

TEST_F(CliTest, VolumeOfFace) {
  const std::string path = write("reg.json", R"({"n": 3, "squared_lengths": [1, 1, 1, 1, 1, 1]})");
  const Invocation r = invoke({"volume", "--input", path, "--face", "1,2,4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(json::parse(r.out)["volume"].get<double>(), std::sqrt(3.0) / 4.0, 1e-15);
}

TEST_F(CliTest, UnrealizableIsVerificationFailure) {
  const std::string path = write("bad.json", R"({"n": 2, "squared_lengths": [1, 1, 9]})");
  const Invocation r = invoke({"realizable", "--input", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json::parse(r.out)["realizable"], false);
  EXPECT_EQ(invoke({"volume", "--input", path}).code, 1);
}

TEST_F(CliTest, FacesJsonAndCsv) {
  const std::string path = write("reg.json", R"({"n": 4, "squared_lengths": [1,1,1,1,1,1,1,1,1,1]})");
  const Invocation j = invoke({"faces", "--input", path, "--face-dim", "2"});
  ASSERT_EQ(j.code, 0) << j.err;
  const json doc = json::parse(j.out);
  ASSERT_EQ(doc["faces"].size(), 10u);
  EXPECT_EQ(doc["faces"][0]["complement"], json::array({1, 2}));
  EXPECT_EQ(doc["faces"][0]["vertices"], json::array({3, 4, 5}));

  const Invocation c = invoke({"faces", "--input", path, "--face-dim", "2", "--format", "csv"});
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(c.out.substr(0, c.out.find('\n')), "complement,vertices,volume");
  EXPECT_EQ(std::count(c.out.begin(), c.out.end(), '\n'), 11);
}

TEST_F(CliTest, JacobianRegularPoint) {
  const Invocation r = invoke({"jacobian", "--n", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["rank"], 15);
  EXPECT_LE(doc["max_abs_deviation"].get<double>(), 1e-9);
}

TEST_F(CliTest, JacobianFromFile) {
  const std::string path = write("s.json", R"({"n": 3, "squared_lengths": [1.0, 1.2, 0.9, 1.1, 1.3, 1.05]})");
  const Invocation r = invoke({"jacobian", "--input", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["reference"], "finite_difference");
}

TEST_F(CliTest, SweepCsvHeaderAndRows) {
  const Invocation r = invoke({"sweep", "--n", "5", "--points", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
            "n,x,t_minus,t_plus,max_facevol_reldiff,vol_minus,vol_plus,vol_reldiff");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
}

TEST_F(CliTest, InvertFromSimplexFile) {
  const std::string path = write("s.json", R"({"n": 3, "squared_lengths": [1.0, 1.2, 0.9, 1.1, 1.3, 1.05]})");
  const Invocation r = invoke({"invert", "--input", path});
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  ASSERT_EQ(doc["solutions"].size(), 1u);
  EXPECT_EQ(doc["solutions"][0]["converged"], true);
}

TEST_F(CliTest, InvertBasinProbeIsReproducible) {
  const Invocation pair = invoke({"counterexample", "--n", "4", "--x", "0.5"});
  const json minus = json::parse(pair.out)["instances"]["minus"];
  json input{{"n", 4}, {"squared_lengths", minus["squared_lengths"]}};
  const std::string path = write("target.json", input.dump());
  const Invocation a = invoke({"invert", "--input", path, "--starts", "12", "--seed", "7"});
  const Invocation b = invoke({"invert", "--input", path, "--starts", "12", "--seed", "7"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_GE(json::parse(a.out)["solutions"].size(), 1u);
}

TEST_F(CliTest, InvertRejectsWrongTargetSize) {
  const std::string path = write("t.json", R"({"n": 4, "face_volumes": [1, 2, 3]})");
  EXPECT_EQ(invoke({"invert", "--input", path}).code, 2);
}

TEST_F(CliTest, RepeatedRunsAreByteIdentical) {
  const Invocation a = invoke({"counterexample", "--n", "6", "--x", "0.3"});
  const Invocation b = invoke({"counterexample", "--n", "6", "--x", "0.3"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"bogus"}).code, 2);
  const Invocation missing = invoke({"spectrum", "--n", "4"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_EQ(std::count(missing.err.begin(), missing.err.end(), '\n'), 1);
  EXPECT_EQ(invoke({"spectrum", "--n", "4", "--k", "1"}).code, 2);
  EXPECT_EQ(invoke({"volume", "--input", (dir_ / "absent.json").string()}).code, 2);
  const std::string junk = write("junk.json", "{not json");
  EXPECT_EQ(invoke({"volume", "--input", junk}).code, 2);
  EXPECT_EQ(invoke({"spectrum", "--n", "4", "--k", "2", "--format", "xml"}).code, 2);
}

TEST_F(CliTest, OutputFileWrittenOnlyOnSuccess) {
  const fs::path good = dir_ / "spec.json";
  EXPECT_EQ(invoke({"spectrum", "--n", "4", "--k", "2", "--output", good.string()}).code, 0);
  EXPECT_TRUE(fs::exists(good));

  const fs::path bad = dir_ / "never.json";
  EXPECT_EQ(invoke({"spectrum", "--n", "4", "--k", "9", "--output", bad.string()}).code, 2);
  EXPECT_EQ(invoke({"spectrum", "--n", "4", "--output", bad.string()}).code, 2);
  EXPECT_FALSE(fs::exists(bad));
}

TEST_F(CliTest, OutputDirectoryFromEnvironment) {
  ::setenv("SIMPLEXVOL_OUTPUT_DIR", dir_.c_str(), 1);
  const Invocation r = invoke({"sweep", "--n", "4", "--points", "2", "--output", "sweep.csv"});
  ::unsetenv("SIMPLEXVOL_OUTPUT_DIR");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_TRUE(fs::exists(dir_ / "sweep.csv"));
}

TEST_F(CliTest, HelpListsFlags) {
  const Invocation r = invoke({"invert", "--help"});
  EXPECT_EQ(r.code, 0);
  for (const char* flag : {"--input", "--starts", "--seed", "--tol", "--max-iters", "--format", "--output"}) {
    EXPECT_NE(r.out.find(flag), std::string::npos) << flag;
  }
}

}  // namespace
}  // namespace simplexvol::cli
