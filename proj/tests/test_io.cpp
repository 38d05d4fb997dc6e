#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <random>

#include "symplecto/io/manifest.hpp"
#include "symplecto/io/serialization.hpp"
#include "symplecto/verify/generators.hpp"

using namespace symplecto;
using trig::TrigPolynomial;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("symplecto_io_" + std::to_string(std::random_device{}()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

}  // namespace

TEST(TrigJson, ListAndObjectFormsAgree) {
  const auto a = io::parse_trig_json(R"([{"n":[1],"m":[0],"phase":"cos","coeff":1.0},
                                          {"n":[0],"m":[-2],"phase":"sin","coeff":0.5}])");
  const auto b = io::parse_trig_json(
      R"({"q":1,"terms":[{"n":[0],"m":[2],"phase":"sin","coeff":-0.5},{"n":[-1],"m":[0],"phase":"cos","coeff":1}]})");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, TrigPolynomial::cos1(1, 0) + TrigPolynomial::sin1(0, 2, -0.5));
}

TEST(TrigJson, DuplicateTermsAreSummed) {
  const auto a = io::parse_trig_json(R"([{"n":[1],"m":[1],"phase":"cos","coeff":0.25},
                                          {"n":[-1],"m":[-1],"phase":"cos","coeff":0.5}])");
  EXPECT_EQ(a, TrigPolynomial::cos1(1, 1, 0.75));
}

TEST(TrigJson, MalformedInputRejected) {
  EXPECT_THROW(io::parse_trig_json("not json"), std::invalid_argument);
  EXPECT_THROW(io::parse_trig_json(R"([{"n":[1],"m":[0],"phase":"tan","coeff":1}])"),
               std::invalid_argument);
  EXPECT_THROW(io::parse_trig_json(R"([{"n":[1,0],"m":[0],"phase":"cos","coeff":1}])"),
               std::invalid_argument);
  EXPECT_THROW(io::parse_trig_json(R"({"q":2,"terms":[{"n":[1],"m":[0],"phase":"cos","coeff":1}]})"),
               std::invalid_argument);
  EXPECT_THROW(io::parse_trig_json(R"([{"n":[1],"m":[0],"phase":"cos"}])"), std::invalid_argument);
}

TEST(TrigJson, RoundTripIsExact) {
  verify::Rng rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = verify::random_trig(rng, 1 + trial % 3, 6, 5);
    EXPECT_EQ(io::parse_trig_json(io::to_trig_json(f)), f);
  }
}

TEST(TrigJson, LoadMissingFileThrows) {
  EXPECT_THROW(io::load_trig_json("/nonexistent/f.json"), std::runtime_error);
}

TEST(Csv, DoublesRoundTrip) {
  for (double v : {0.1, -1.0 / 3.0, 6.02214076e23, 5e-324, 0.0063325739776461}) {
    EXPECT_EQ(std::strtod(io::format_double(v).c_str(), nullptr), v);
  }
}

TEST(Csv, SortedRowsAndHeader) {
  io::CsvWriter w({"a", "b"});
  w.add_row({"2", "x"});
  w.add_row({"1", "y"});
  w.sort_rows();
  EXPECT_EQ(w.str(), "a,b\n1,y\n2,x\n");
  EXPECT_EQ(w.rows(), 2u);
  EXPECT_THROW(w.add_row({"only one"}), std::logic_error);
}

TEST(Files, WriteAndReadBack) {
  TempDir dir;
  const auto p = dir.path() / "sub" / "out.txt";
  io::write_text_file(p, "hello\n");
  EXPECT_EQ(io::read_text_file(p), "hello\n");
  EXPECT_FALSE(fs::exists(p.string() + ".tmp"));
}

TEST(Manifest, Sha256KnownVectors) {
  EXPECT_EQ(io::sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(io::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Manifest, JsonRoundTrip) {
  const char* argv[] = {"symplecto", "simulate", "--steps", "10"};
  auto m = io::make_manifest(4, argv);
  m.config = {{"dt", 0.001}, {"grid", 64}};
  m.seed = 7;
  const auto back = io::RunManifest::from_json(m.to_json());
  EXPECT_EQ(back.command_line, m.command_line);
  EXPECT_EQ(back.config, m.config);
  EXPECT_EQ(back.seed, 7u);
  EXPECT_EQ(back.version, m.version);
  EXPECT_FALSE(back.timestamp.empty());
}

TEST(Manifest, DetectsTamperingAndMissingFiles) {
  TempDir dir;
  const auto out = dir.path() / "traj.csv";
  const auto other = dir.path() / "other.csv";
  io::write_text_file(out, "t,L\n0,1\n");
  io::write_text_file(other, "x\n");
  const char* argv[] = {"symplecto"};
  auto m = io::make_manifest(1, argv);
  m.add_output(out, dir.path());
  m.add_output(other, dir.path());
  m.add_output(out, dir.path());
  ASSERT_EQ(m.outputs.size(), 2u);
  EXPECT_EQ(m.outputs[0].path, "traj.csv");
  const auto mpath = dir.path() / "traj.csv.manifest.json";
  io::write_manifest(m, mpath);
  EXPECT_TRUE(io::verify_manifest(mpath).empty());

  io::write_text_file(out, "t,L\n0,2\n");
  EXPECT_EQ(io::verify_manifest(mpath).size(), 1u);
  fs::remove(other);
  EXPECT_EQ(io::verify_manifest(mpath).size(), 2u);
}
