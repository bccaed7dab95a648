#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "oalpha/cli.hpp"
#include "oalpha/error.hpp"
#include "oalpha/harness.hpp"
#include "oalpha/io.hpp"

using namespace oalpha;
namespace fs = std::filesystem;

namespace {

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("oalpha_io_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& body) const {
    std::ofstream(path(name)) << body;
    return path(name);
  }
  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  fs::path dir_;
};

int run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "oalpha");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return cli_main(static_cast<int>(argv.size()), argv.data());
}

VerificationReport sample_report() {
  VerificationReport r;
  r.suite_name = "unit";
  r.alphas = {kPi / 3};
  r.z = ZChoice::minus_i;
  r.grid = GridSpec::centered(4096, 16.0);
  r.seed = 99;
  r.tolerances = default_tolerances();
  CheckResult a;
  a.check_id = "pitt(0.25)";
  a.alpha = kPi / 3;
  a.z = ZChoice::minus_i;
  a.lhs = 0.1 + 0.2;
  a.rhs = 1.0 / 3.0;
  a.margin = a.rhs - a.lhs;
  a.constant_paper = 2.0 / 7.0;
  a.status = CheckStatus::pass;
  CheckResult b = a;
  b.check_id = "beurling";
  b.lhs = std::numeric_limits<double>::infinity();
  b.constant_paper.reset();
  b.constant_observed = -1e-300;
  b.status = CheckStatus::error;
  b.note = "grid \"too\" small";
  r.results = {a, b};
  return r;
}

}  // namespace

using Csv = TempDir;
using Json = TempDir;
using Cli = TempDir;

TEST_F(Csv, ThreeRowFile) {
  const SampledSignal s = read_signal_csv(write("a.csv", "t,re,im\n-1,1,0\n0,2,-1\n1,0.5,0.25\n"));
  EXPECT_EQ(s.grid.n, 3u);
  EXPECT_DOUBLE_EQ(s.grid.dx, 1.0);
  EXPECT_DOUBLE_EQ(s.grid.x_min, -1.0);
  EXPECT_EQ(s.values[1], cplx(2.0, -1.0));
}

TEST_F(Csv, RoundTripIsExact) {
  const SampledSignal f = gen_random_smooth(5, 1, 2.0, GridSpec::centered(256, 8.0)).front();
  write_samples_csv(f, path("f.csv"), "t");
  const SampledSignal g = read_signal_csv(path("f.csv"));
  EXPECT_EQ(g.values, f.values);
  EXPECT_EQ(g.grid.n, f.grid.n);
  EXPECT_DOUBLE_EQ(g.grid.x_min, f.grid.x_min);
  EXPECT_NEAR(g.grid.dx, f.grid.dx, 1e-15);
}

TEST_F(Csv, SpectrumHeader) {
  const Spectrum s = read_spectrum_csv(write("s.csv", "s,re,im\n0,1,1\n0.5,1,1\n"));
  EXPECT_EQ(s.grid.n, 2u);
}

TEST_F(Csv, Errors) {
  EXPECT_THROW(read_signal_csv(write("nu.csv", "t,re,im\n0,1,0\n1,1,0\n3,1,0\n")), NonUniformGridError);
  try {
    read_signal_csv(write("mi.csv", "t,re\n0,1\n1,1\n"));
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("'im'"), std::string::npos) << e.what();
  }
  EXPECT_THROW(read_signal_csv(write("bad.csv", "t,re,im\n0,1,x\n1,1,0\n")), ParseError);
  EXPECT_THROW(read_signal_csv(write("short.csv", "t,re,im\n0,1\n1,1,0\n")), ParseError);
  EXPECT_THROW(read_signal_csv(write("empty.csv", "")), EmptyFileError);
  EXPECT_THROW(read_signal_csv(write("header.csv", "t,re,im\n")), EmptyFileError);
  EXPECT_THROW(read_signal_csv(path("missing.csv")), IoError);
  EXPECT_THROW(read_signal_csv(write("dec.csv", "t,re,im\n1,1,0\n0,1,0\n")), NonUniformGridError);
}

TEST_F(Csv, PlotColumns) {
  const Spectrum s{GridSpec{2, 0.0, 1.0}, {cplx(3.0, 4.0), cplx(0.0, -1.0)}};
  write_plot_csv(s, path("p.csv"));
  EXPECT_EQ(slurp(path("p.csv")), "s,re,im,abs\n0,3,4,5\n1,0,-1,1\n");
}

TEST_F(Json, EmptyResults) {
  VerificationReport r = sample_report();
  r.results.clear();
  const std::string text = report_to_json(r);
  const auto j = nlohmann::json::parse(text);
  EXPECT_TRUE(j.at("results").is_array());
  EXPECT_TRUE(j.at("results").empty());
  EXPECT_EQ(report_from_json(text), r);
}

TEST_F(Json, RoundTripAndKeyOrder) {
  const VerificationReport r = sample_report();
  write_report_json(r, path("r.json"));
  EXPECT_EQ(read_report_json(path("r.json")), r);

  const std::string text = slurp(path("r.json"));
  std::size_t last = 0;
  for (const char* key : {"\"suite\"", "\"engine_version\"", "\"alpha\"", "\"z\"", "\"grid\"", "\"tolerances\"",
                          "\"results\"", "\"check_id\"", "\"lhs\"", "\"rhs\"", "\"margin\"", "\"constant_paper\"",
                          "\"constant_observed\"", "\"status\""}) {
    const std::size_t at = text.find(key, last);
    ASSERT_NE(at, std::string::npos) << key;
    last = at;
  }
  EXPECT_NE(text.find("0.30000000000000004"), std::string::npos);
  const auto j = nlohmann::json::parse(text);
  EXPECT_EQ(j.at("grid").at("t_max").get<double>(), 16.0);
  EXPECT_EQ(j.at("results").at(1).at("lhs"), "inf");
  EXPECT_TRUE(j.at("results").at(1).at("constant_paper").is_null());
  for (const auto& res : j.at("results")) {
    const std::string s = res.at("status");
    EXPECT_TRUE(s == "pass" || s == "fail" || s == "constant_discrepancy" || s == "error");
  }
}

TEST_F(Json, MultipleAnglesSerializeAsArray) {
  VerificationReport r = sample_report();
  r.alphas = {kPi / 6, kPi / 4};
  const auto j = nlohmann::json::parse(report_to_json(r));
  EXPECT_TRUE(j.at("alpha").is_array());
  EXPECT_EQ(report_from_json(report_to_json(r)), r);
}

TEST_F(Json, Errors) {
  EXPECT_THROW(report_from_json("{"), ParseError);
  EXPECT_THROW(report_from_json("{\"suite\": 1}"), ParseError);
  EXPECT_THROW(write_report_json(sample_report(), path("no/such/dir/r.json")), IoError);
}

TEST(Alpha, Parsing) {
  EXPECT_DOUBLE_EQ(parse_alpha("pi/4"), kPi / 4);
  EXPECT_DOUBLE_EQ(parse_alpha("pi"), kPi);
  EXPECT_DOUBLE_EQ(parse_alpha("3pi/4"), 3 * kPi / 4);
  EXPECT_DOUBLE_EQ(parse_alpha("3*pi/4"), 3 * kPi / 4);
  EXPECT_DOUBLE_EQ(parse_alpha("0.5"), 0.5);
  EXPECT_NEAR(parse_alpha("-pi/4"), 7 * kPi / 4, 1e-15);
  EXPECT_NEAR(parse_alpha("7"), 7 - 2 * kPi, 1e-15);
  EXPECT_THROW(parse_alpha("abc"), InputError);
  EXPECT_THROW(parse_alpha("pi/0"), InputError);
  EXPECT_THROW(parse_alpha("1.0x"), InputError);
  EXPECT_THROW(make_params(parse_alpha("-pi/4"), ZChoice::plus_i), AngleOutOfRange);
}

TEST_F(Cli, TransformInvertRoundTrip) {
  const SampledSignal f = gen_chirped_gaussian(1.0, 0.7, 0.2, GridSpec::centered(512, 16.0));
  write_samples_csv(f, path("f.csv"), "t");
  ASSERT_EQ(run_cli({"transform", "--alpha", "pi/4", "--z", "+i", "--in", path("f.csv"), "--out", path("F.csv"),
                     "--plot", path("P.csv")}),
            0);
  EXPECT_TRUE(fs::exists(path("P.csv")));
  ASSERT_EQ(run_cli({"invert", "--alpha", "pi/4", "--z", "+i", "--in", path("F.csv"), "--out", path("g.csv")}), 0);
  const SampledSignal g = read_signal_csv(path("g.csv"));
  ASSERT_EQ(g.size(), f.size());
  for (std::size_t k = 0; k < f.size(); ++k) EXPECT_NEAR(std::abs(g.values[k] - f.values[k]), 0.0, 1e-10);
}

TEST_F(Cli, NonPowerOfTwoUsesDirectPath) {
  const SampledSignal f = gen_chirped_gaussian(1.0, 1.0, 0.0, GridSpec{301, -15.0, 0.1});
  write_samples_csv(f, path("f.csv"), "t");
  ASSERT_EQ(run_cli({"transform", "--alpha", "1.2", "--in", path("f.csv"), "--out", path("F.csv")}), 0);
  ASSERT_EQ(run_cli({"invert", "--alpha", "1.2", "--in", path("F.csv"), "--out", path("g.csv"), "--n", "301",
                     "--t-min", "-15", "--t-max", "15.1"}),
            0);
  const SampledSignal g = read_signal_csv(path("g.csv"));
  for (std::size_t k = 0; k < f.size(); ++k) EXPECT_NEAR(std::abs(g.values[k] - f.values[k]), 0.0, 1e-8);
}

TEST_F(Cli, VerifyAuditGenerate) {
  EXPECT_EQ(run_cli({"verify", "--suite", "parseval,heisenberg", "--family", "chirped", "--alpha", "pi/3", "--n",
                     "1024", "--out", path("r.json")}),
            0);
  const VerificationReport r = read_report_json(path("r.json"));
  EXPECT_EQ(r.suite_name, "parseval,heisenberg");
  EXPECT_EQ(r.grid.n, 1024u);

  EXPECT_EQ(run_cli({"verify", "--suite", "parseval", "--family", "chirped", "--n", "256", "--t-min", "-2",
                     "--t-max", "2", "--out", path("bad.json")}),
            1);

  EXPECT_EQ(run_cli({"audit", "--check", "heisenberg", "--alpha", "pi/2", "--n", "1024", "--out", path("a.json")}), 0);
  const auto j = nlohmann::json::parse(slurp(path("a.json")));
  EXPECT_NEAR(j.at("observed_sharp_constant").get<double>(), 0.353553, 1e-6);

  EXPECT_EQ(run_cli({"generate", "--family", "hermite", "--n", "512", "--out", path("gen")}), 0);
  EXPECT_TRUE(fs::exists(path("gen/hermite_006.csv")));
  EXPECT_EQ(read_signal_csv(path("gen/hermite_000.csv")).size(), 512u);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}), 2);
  EXPECT_EQ(run_cli({"bogus"}), 2);
  EXPECT_EQ(run_cli({"transform", "--alpha", "0", "--in", path("x.csv"), "--out", path("y.csv")}), 2);
  EXPECT_EQ(run_cli({"transform", "--in", path("missing.csv"), "--out", path("y.csv")}), 2);
  EXPECT_EQ(run_cli({"verify", "--suite", "nonsense"}), 2);
  EXPECT_EQ(run_cli({"verify", "--z", "2i"}), 2);
  EXPECT_EQ(run_cli({"audit", "--check", "parseval", "--n", "256"}), 2);
  EXPECT_EQ(run_cli({"--help"}), 0);
}
