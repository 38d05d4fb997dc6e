#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

const std::string kData = SYMPLECTO_TEST_DATA;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("symplecto_cli_" + std::to_string(std::random_device{}()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Runs the CLI with SYMPLECTO_OUTPUT_DIR pointing at the per-test directory;
  // stderr is discarded so `out` is exactly the command's stdout.
  RunResult run(const std::string& args) const {
    const std::string cmd = "SYMPLECTO_OUTPUT_DIR='" + dir_.string() + "' '" SYMPLECTO_CLI "' " +
                            args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  std::string read(const fs::path& p) const {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_F(Cli, TorusBiSpotValue) {
  const auto r = run("curvature torus-bi --pair 1,0,0,1");
  ASSERT_EQ(r.exit_code, 0);
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0][0], "formula");
  EXPECT_EQ(rows[1][0], "TORUS_BI");
  EXPECT_NEAR(std::stod(rows[1][6]), 0.0063326, 1e-7);
}

TEST_F(Cli, ResonantTorusRightExitsThree) {
  EXPECT_EQ(run("curvature torus-right --pair 1,0,1,0").exit_code, 3);
}

TEST_F(Cli, MalformedPairExitsTwo) {
  EXPECT_EQ(run("curvature torus-bi --pair 1,0,0").exit_code, 2);
  EXPECT_EQ(run("curvature torus-bi --pair a,b,c,d").exit_code, 2);
}

TEST_F(Cli, GeneralFromJsonFiles) {
  const auto r = run("curvature general --hamiltonians " + kData + "/cos_x.json " + kData +
                     "/cos_y.json --metric right");
  ASSERT_EQ(r.exit_code, 0);
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1][0], "RIGHT_GENERAL");
  EXPECT_NEAR(std::stod(rows[1][6]), -1.0 / (8 * M_PI * M_PI), 1e-15);
  const auto bi = run("curvature general --hamiltonians " + kData + "/cos_x.json " + kData +
                      "/cos_y.json --metric bi");
  ASSERT_EQ(bi.exit_code, 0);
  EXPECT_NEAR(std::stod(parse_csv(bi.out)[1][6]), 1.0 / (16 * M_PI * M_PI), 1e-16);
}

TEST_F(Cli, GeneralRejectsBadInput) {
  EXPECT_EQ(run("curvature general --hamiltonians " + kData + "/bad_phase.json " + kData +
                "/cos_y.json")
                .exit_code,
            2);
  EXPECT_EQ(run("curvature general --hamiltonians " + kData + "/cos_x.json " + kData +
                "/cos_x.json")
                .exit_code,
            3);
}

TEST_F(Cli, SweepIsDeterministicAcrossThreadCounts) {
  ASSERT_EQ(run("curvature sweep --max-wavenumber 2 --threads 1 --out a.csv").exit_code, 0);
  ASSERT_EQ(run("curvature sweep --max-wavenumber 2 --threads 3 --out b.csv").exit_code, 0);
  const auto a = read(dir_ / "a.csv");
  EXPECT_EQ(a, read(dir_ / "b.csv"));
  const auto rows = parse_csv(a);
  ASSERT_GT(rows.size(), 1u);
  EXPECT_EQ((rows.size() - 1) % 4, 0u);
  EXPECT_TRUE(fs::exists(dir_ / "a.csv.manifest.json"));
}

TEST_F(Cli, SimulateDefaultRunConservesEnergy) {
  const auto r = run("simulate --init " + kData + "/cos_x_cos_2y.json --grid 64 --steps 1000");
  ASSERT_EQ(r.exit_code, 0);
  const auto rows = parse_csv(read(dir_ / "trajectory.csv"));
  ASSERT_GE(rows.size(), 3u);
  const std::vector<std::string> header{"t", "L", "I2", "I3", "I4", "max_vorticity"};
  EXPECT_EQ(rows[0], header);
  const double l0 = std::stod(rows[1][1]);
  const double l1 = std::stod(rows.back()[1]);
  EXPECT_NEAR(std::stod(rows.back()[0]), 1.0, 1e-12);
  EXPECT_LT(std::abs(l1 - l0) / l0, 1e-6);
  EXPECT_TRUE(fs::exists(dir_ / "trajectory.csv.manifest.json"));
  EXPECT_EQ(run("verify --only 1 --manifest " + (dir_ / "trajectory.csv.manifest.json").string())
                .exit_code,
            0);
}

TEST_F(Cli, SimulateStationaryFlow) {
  ASSERT_EQ(run("simulate --init " + kData + "/taylor_green.json --grid 32 --steps 100 --out tg.csv")
                .exit_code,
            0);
  const auto rows = parse_csv(read(dir_ / "tg.csv"));
  for (std::size_t i = 2; i < rows.size(); ++i) {
    EXPECT_NEAR(std::stod(rows[i][1]), std::stod(rows[1][1]), 1e-13);
  }
}

TEST_F(Cli, TamperedOutputFailsManifestCheck) {
  ASSERT_EQ(run("curvature torus-bi --pair 1,2,2,1 --out k.csv").exit_code, 0);
  std::ofstream(dir_ / "k.csv", std::ios::app) << "tampered\n";
  EXPECT_EQ(run("verify --only 1 --manifest " + (dir_ / "k.csv.manifest.json").string()).exit_code, 1);
}

TEST_F(Cli, SimulateMissingInitExitsTwo) {
  EXPECT_EQ(run("simulate --init /nonexistent/f0.json").exit_code, 2);
}

TEST_F(Cli, SimulateOutOfBandInitExitsTwo) {
  std::ofstream(dir_ / "high.json") << R"([{"n":[20],"m":[0],"phase":"cos","coeff":1}])";
  EXPECT_EQ(run("simulate --grid 32 --init " + (dir_ / "high.json").string()).exit_code, 2);
}

TEST_F(Cli, SimulateBlowUpExitsFour) {
  std::ofstream(dir_ / "big.json") << R"([{"n":[1],"m":[0],"phase":"cos","coeff":100},
    {"n":[0],"m":[2],"phase":"cos","coeff":100},{"n":[1],"m":[1],"phase":"sin","coeff":50}])";
  const auto r = run("simulate --grid 32 --dt 10 --steps 500 --out blow.csv --init " +
                     (dir_ / "big.json").string());
  EXPECT_EQ(r.exit_code, 4);
  EXPECT_TRUE(fs::exists(dir_ / "blow.csv"));
}

TEST_F(Cli, Wigner3j) {
  const auto r = run("sphere wigner3j 1 1 0 0 0 0");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "-0.5773502692\n");
}

TEST_F(Cli, SphereConstantsTable) {
  const auto r = run("sphere constants --lmax 1");
  ASSERT_EQ(r.exit_code, 0);
  const auto rows = parse_csv(r.out);
  const std::vector<std::string> header{"n", "m", "k", "l", "i", "j", "re(C)", "im(C)"};
  EXPECT_EQ(rows[0], header);
  EXPECT_GT(rows.size(), 1u);
}

TEST_F(Cli, SphereCurvatureConvergence) {
  const auto r = run("sphere curvature --pair 1,0,1,1 --lmax 3");
  ASSERT_EQ(r.exit_code, 0);
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_NEAR(std::stod(rows.back()[rows.back().size() - 2]), 0.0298415518297, 1e-12);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run("verify --bogus").exit_code, 2);
  EXPECT_EQ(run("verify --quick --full").exit_code, 2);
  EXPECT_EQ(run("nosuchcommand").exit_code, 2);
  EXPECT_EQ(run("--help").exit_code, 0);
}
