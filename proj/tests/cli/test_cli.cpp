#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

std::string read(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("motifminer_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    std::ofstream(dir_ / "run.json") << R"({"simulation": {"days": 2}, "plan": {"instances": 4}})";
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Runs the CLI with `args`; stdout and stderr land in files under the test directory.
  int run(const std::string& args) {
    const std::string cmd = std::string("\"") + MOTIFMINER_CLI + "\" " + args + " > \"" +
                            (dir_ / "stdout.txt").string() + "\" 2> \"" + (dir_ / "stderr.txt").string() +
                            "\"";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  std::string out() const { return read(dir_ / "stdout.txt"); }
  std::string err() const { return read(dir_ / "stderr.txt"); }
  std::string path(const std::string& name) const { return "\"" + (dir_ / name).string() + "\""; }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, SimulateExtractEvaluate) {
  const std::string cfg = " --config " + path("run.json");
  ASSERT_EQ(run("simulate --seed 3 --out-dir " + path("sim") + cfg), 0) << err();
  for (const char* f : {"injected.csv", "schema.json", "truth.json", "manifest.json"})
    EXPECT_TRUE(fs::exists(dir_ / "sim" / f)) << f;

  ASSERT_EQ(run("extract --seed 3 --input " + path("sim/injected.csv") + " --schema " +
                path("sim/schema.json") + " --dump-collisions --out-dir " + path("ex") + cfg),
            0)
      << err();
  EXPECT_NE(out().find("classes"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir_ / "ex" / "motifs.json"));
  EXPECT_EQ(read(dir_ / "ex" / "collisions.csv").rfind("i,j,count\n", 0), 0u);

  ASSERT_EQ(run("evaluate --seed 3 --motifs " + path("ex/motifs.json") + " --truth " + path("sim/truth.json") +
                " --out-dir " + path("ev") + cfg),
            0)
      << err();
  EXPECT_TRUE(fs::exists(dir_ / "ev" / "report.json"));
  EXPECT_FALSE(out().empty());
}

TEST_F(Cli, RerunsAreByteIdentical) {
  const std::string cfg = " --config " + path("run.json");
  ASSERT_EQ(run("simulate --seed 8 --out-dir " + path("a") + cfg), 0) << err();
  ASSERT_EQ(run("simulate --seed 8 --out-dir " + path("b") + cfg), 0) << err();
  EXPECT_EQ(read(dir_ / "a" / "injected.csv"), read(dir_ / "b" / "injected.csv"));
  EXPECT_EQ(read(dir_ / "a" / "truth.json"), read(dir_ / "b" / "truth.json"));

  const std::string ex = "extract --seed 8 --input " + path("a/injected.csv") + " --schema " +
                         path("a/schema.json") + cfg;
  ASSERT_EQ(run(ex + " --out-dir " + path("x") + " --threads 1"), 0) << err();
  ASSERT_EQ(run(ex + " --out-dir " + path("y") + " --threads 4"), 0) << err();
  EXPECT_EQ(read(dir_ / "x" / "motifs.json"), read(dir_ / "y" / "motifs.json"));
}

TEST_F(Cli, DistanceOfASeriesToItselfIsZero) {
  ASSERT_EQ(run("simulate --seed 2 --out-dir " + path("sim") + " --config " + path("run.json")), 0) << err();
  ASSERT_EQ(run("distance --seed 2 " + path("sim/motif.csv") + " " + path("sim/motif.csv") + " --schema " +
                path("sim/schema.json")),
            0)
      << err();
  EXPECT_EQ(out(), "lcss 0\ndtw 0\n");
}

TEST_F(Cli, MissingSeedIsAnError) {
  EXPECT_EQ(run("simulate --out-dir " + path("sim") + " --config " + path("run.json")), 1);
  EXPECT_NE(err().find("\"error\""), std::string::npos);
  EXPECT_NE(err().find("seed"), std::string::npos);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_NE(err().find("\"usage\""), std::string::npos);
}
