// Copyright 2026 The entropic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Drives the built executable through std::system.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / ("entropic_cli_" + std::to_string(::getpid()) + "_" + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Returns the exit code; stdout goes to out.txt, stderr to err.txt.
  int run(const std::string& args) {
    const std::string cmd = "\"" + std::string(ENTROPIC_CLI_PATH) + "\" " + args + " > \"" +
                            (dir_ / "out.txt").string() + "\" 2> \"" + (dir_ / "err.txt").string() + "\"";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string read(const fs::path& p) const {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
  }

  std::string out() const { return read(dir_ / "out.txt"); }
  std::string err() const { return read(dir_ / "err.txt"); }

  fs::path write(const std::string& name, const std::string& text) const {
    const auto p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p;
  }

  std::string first_line(const fs::path& p) const {
    std::ifstream f(p);
    std::string line;
    std::getline(f, line);
    return line;
  }

  fs::path dir_;
};

const char* kSmall = R"({
  "systems": [
    {"id": "q", "type": "quantum", "tri": true,
     "hamiltonian": [[0, 1], [1, 0]], "reference_state": [[0.75, 0], [0, 0.25]]},
    {"id": "ring", "type": "classical", "reference_state": [0.25, 0.5, 0.25]}
  ],
  "sweep": {"alpha": [0, 0.5, 1], "p": [2, "inf"], "t": [1]}
})";

TEST_F(Cli, VerifyPasses) {
  EXPECT_EQ(run("verify"), 0) << out() << err();
  EXPECT_NE(out().find("0 failed"), std::string::npos) << out();
}

TEST_F(Cli, HelpAndVersion) {
  EXPECT_EQ(run("--help"), 0);
  EXPECT_NE(out().find("functionals"), std::string::npos);
  EXPECT_EQ(run("--version"), 0);
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("nonsense"), 2);
}

TEST_F(Cli, PrintConfigRoundTrips) {
  ASSERT_EQ(run("print-config"), 0);
  const auto cfg = write("default.jsonc", out());
  EXPECT_EQ(run("functionals -c \"" + cfg.string() + "\" -o \"" + (dir_ / "run").string() + "\""), 0) << err();
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run("functionals -c \"" + write("bad.json", "{\"systems\": [").string() + "\""), 2);
  EXPECT_NE(err().find("entropic:"), std::string::npos);
  EXPECT_EQ(run("functionals -c \"" + (dir_ / "missing.json").string() + "\""), 2);
  const std::string invalid = R"({"systems": [{"type": "classical", "reference_state": [0.5, 0.5]}],
                                  "sweep": {"alpha": [0.5], "p": [0.5], "t": [1]}})";
  EXPECT_EQ(run("functionals -c \"" + write("invalid.json", invalid).string() + "\""), 4);
  EXPECT_NE(err().find("sweep.p[0]"), std::string::npos) << err();
  EXPECT_EQ(run("verify --tol bogus=1"), 4);
  EXPECT_EQ(run("functionals --format xml"), 2);
}

TEST_F(Cli, FailedCheckRowGivesExitOne) {
  const auto cfg = write("small.json", kSmall);
  EXPECT_EQ(run("functionals -c \"" + cfg.string() + "\" --tol kawasaki=1e-300 --tol symmetry=1e-300"), 1);
}

TEST_F(Cli, OutputFilesAndHeaders) {
  const auto cfg = write("small.json", kSmall);
  const auto o = dir_ / "run";
  for (const char* cmd : {"functionals", "fcs", "classical"}) {
    ASSERT_EQ(run(std::string(cmd) + " -c \"" + cfg.string() + "\" -o \"" + o.string() + "\""), 0) << cmd << err();
  }
  EXPECT_EQ(first_line(o / "functionals_curves.csv"), "system_id,p,t,alpha,value");
  EXPECT_EQ(first_line(o / "functionals_checks.csv"), "system_id,p,t,alpha,value,check,pass");
  EXPECT_EQ(first_line(o / "fcs_distributions.csv"), "system_id,t,atom,weight,measure");
  EXPECT_EQ(first_line(o / "classical_distributions.csv"), "system_id,t,atom,weight,measure");
  EXPECT_TRUE(fs::exists(o / "functionals.json"));
  EXPECT_TRUE(fs::exists(o / "classical.json"));

  ASSERT_EQ(run("fcs -c \"" + cfg.string() + "\" --format json"), 0);
  EXPECT_EQ(out().rfind("{", 0), 0u) << out();
}

TEST_F(Cli, IdenticalConfigsGiveIdenticalBytes) {
  const auto cfg = write("small.json", kSmall);
  for (const char* d : {"a", "b"}) {
    for (const char* cmd : {"functionals", "fcs", "classical", "model"}) {
      ASSERT_EQ(run(std::string(cmd) + " -c \"" + cfg.string() + "\" -o \"" + (dir_ / d).string() + "\""), 0);
    }
  }
  std::size_t compared = 0;
  for (const auto& entry : fs::directory_iterator(dir_ / "a")) {
    EXPECT_EQ(read(entry.path()), read(dir_ / "b" / entry.path().filename())) << entry.path();
    ++compared;
  }
  EXPECT_GE(compared, 8u);
}

TEST_F(Cli, SeedOverrideChangesRandomSystems) {
  ASSERT_EQ(run("functionals --format csv"), 0);
  const std::string base = out();
  ASSERT_EQ(run("functionals --format csv --seed 1"), 0);
  EXPECT_EQ(out(), base);  // the default random system already uses seed 1
  ASSERT_EQ(run("functionals --format csv --seed 2"), 0);
  EXPECT_NE(out(), base);
}

TEST_F(Cli, ModelDescribesCanonical) {
  ASSERT_EQ(run("model"), 0);
  EXPECT_NE(out().find("beta_left"), std::string::npos) << out();
}

TEST_F(Cli, ShippedExampleConfigRuns) {
  const fs::path cfg = fs::path(ENTROPIC_SOURCE_DIR) / "configs" / "canonical.jsonc";
  ASSERT_TRUE(fs::exists(cfg));
  EXPECT_EQ(run("functionals -c \"" + cfg.string() + "\""), 0) << err();
  EXPECT_EQ(run("verify -c \"" + cfg.string() + "\""), 0) << out();
}

}  // namespace
