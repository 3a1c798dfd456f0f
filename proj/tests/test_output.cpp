#include "mvzeta/errors.hpp"
#include "mvzeta/output.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

namespace io = mvzeta::io;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / "mvzeta_test_output" / name;
}

}  // namespace

TEST(FormatDouble, SeventeenSignificantDigits) {
  EXPECT_EQ(io::format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(io::format_double(1.0), "1");
  EXPECT_EQ(io::format_double(-2.5e-300), "-2.5e-300");
  EXPECT_EQ(io::format_double(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(io::format_double(std::nan("")), "nan");
  for (double x : {3.141592653589793, 1e22, 6.02214076e23, -0.0001234}) {
    EXPECT_EQ(std::stod(io::format_double(x)), x);
  }
}

TEST(Hash, Fnv1aKnownVectors) {
  EXPECT_EQ(io::fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(io::fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(io::fnv1a64("foobar"), 0x85944171f73967e8ULL);
  EXPECT_EQ(io::hex64(0xabcULL), "0000000000000abc");
}

TEST(Csv, QuotesOnlyWhenNeeded) {
  const auto p = scratch("q.csv");
  io::write_csv(p, {"a", "b"}, {{"1", "x,y"}, {"say \"hi\"", "plain"}});
  EXPECT_EQ(slurp(p), "a,b\n1,\"x,y\"\n\"say \"\"hi\"\"\",plain\n");
}

TEST(Csv, MeanSquareColumns) {
  mvzeta::mv::MeanSquareRequest req;
  req.kind = mvzeta::mv::Kind::barnes;
  req.sigma = 1.5;
  req.w = mvzeta::barnes::Weights::make({1.0, 2.0});
  mvzeta::mv::MeanSquareResult r;
  r.T = 100.0;
  r.value = 2.0;
  r.step = 0.05;
  r.richardson_err = 1e-9;
  const auto p = scratch("ms.csv");
  io::write_meansquare_csv(p, req, {r});
  EXPECT_EQ(slurp(p),
            "T,sigma,a,kind,params,value,step,richardson_err\n"
            "100,1.5,1,barnes,w=1;2,2,0.050000000000000003,1.0000000000000001e-09\n");
  req.kind = mvzeta::mv::Kind::lerch;
  req.lambda = 0.5;
  EXPECT_EQ(io::request_params(req), "lambda=0.5");
}

TEST(Manifest, Fields) {
  io::RunManifest m;
  m.command_line = "mvzeta verify";
  m.parameters = {{"seed", "1"}};
  m.outputs = {"x.csv"};
  m.wall_seconds = 1.5;
  const auto p = scratch("manifest.json");
  io::write_manifest(p, m);
  const auto j = nlohmann::json::parse(slurp(p));
  EXPECT_EQ(j["command_line"], "mvzeta verify");
  EXPECT_EQ(j["parameters"]["seed"], "1");
  EXPECT_EQ(j["outputs"][0], "x.csv");
  EXPECT_TRUE(j.contains("library_version"));
  EXPECT_TRUE(j.contains("determinism"));
  EXPECT_DOUBLE_EQ(j["timing"]["wall_seconds"].get<double>(), 1.5);
}

TEST(Manifest, UnwritablePathIsIoError) {
  const auto blocker = scratch("blocker");
  std::filesystem::create_directories(blocker.parent_path());
  { std::ofstream(blocker) << "file"; }
  EXPECT_THROW(io::write_csv(blocker / "sub" / "x.csv", {"a"}, {}), mvzeta::IoError);
}
