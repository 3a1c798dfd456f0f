#include "cli.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using mvzeta::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path workdir(const std::string& name) {
  auto p = fs::temp_directory_path() / "mvzeta_cli_test" / name;
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST(CliEval, Hurwitz) {
  const auto o = call({"eval", "--kind", "hurwitz", "--sigma", "2", "--t", "0", "--a", "1"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.out.rfind("re=1.644934066848226", 0), 0u) << o.out;
  EXPECT_NE(o.out.find(" im=0 err="), std::string::npos) << o.out;
}

TEST(CliEval, MultiOrderOneMatchesHurwitzByteForByte) {
  const auto h = call({"eval", "--kind", "hurwitz", "--sigma", "0.5", "--t", "14", "--a", "0.3"});
  const auto m = call({"eval", "--kind", "multi", "--r", "1", "--sigma", "0.5", "--t", "14", "--a", "0.3"});
  ASSERT_EQ(h.code, 0);
  EXPECT_EQ(h.out, m.out);
}

TEST(CliEval, LerchRationalAndReal) {
  const auto p = call({"eval", "--kind", "lerch", "--sigma", "0.6", "--t", "3", "--lambda", "1/2"});
  const auto r = call({"eval", "--kind", "lerch", "--sigma", "0.6", "--t", "3", "--lambda", "0.5"});
  ASSERT_EQ(p.code, 0) << p.err;
  EXPECT_EQ(p.out, r.out);
  EXPECT_EQ(call({"eval", "--kind", "lerch", "--sigma", "0.6", "--t", "3", "--lambda", "3/2"}).code, 2);
  EXPECT_EQ(call({"eval", "--kind", "lerch", "--sigma", "0.6", "--t", "3", "--lambda", "abc"}).code, 2);
}

TEST(CliEval, BarnesRegions) {
  EXPECT_EQ(call({"eval", "--kind", "barnes", "--w", "1,2", "--sigma", "3", "--t", "5"}).code, 0);
  const auto strip = call({"eval", "--kind", "barnes", "--w", "1,2", "--sigma", "1.5", "--t", "5"});
  EXPECT_EQ(strip.code, 2);
  EXPECT_NE(strip.err.find("--x"), std::string::npos);
  EXPECT_EQ(call({"eval", "--kind", "barnes", "--w", "1,2", "--sigma", "1.5", "--t", "5", "--x", "100"}).code, 0);
  EXPECT_EQ(call({"eval", "--kind", "barnes", "--w", "1,2", "--sigma", "1.5", "--t", "500", "--x", "10"}).code, 2);
}

TEST(CliEval, ErrorsMapToExitCodes) {
  EXPECT_EQ(call({"eval", "--kind", "hurwitz", "--sigma", "1", "--t", "0"}).code, 2);
  EXPECT_EQ(call({"eval", "--kind", "bogus", "--sigma", "1", "--t", "0"}).code, 2);
  EXPECT_EQ(call({"eval", "--sigma", "1"}).code, 2);
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(CliMeanSquare, MissingOutIsIoError) {
  EXPECT_EQ(call({"meansquare", "--kind", "hurwitz", "--sigma", "0.5", "--T", "50"}).code, 5);
}

TEST(CliMeanSquare, TooLargeTIsResourceError) {
  const auto dir = workdir("big");
  EXPECT_EQ(call({"meansquare", "--sigma", "0.5", "--T", "9000", "--out", (dir / "x.csv").string()}).code, 4);
}

TEST(CliMeanSquare, WritesCsvReportAndManifest) {
  const auto dir = workdir("ms");
  const auto csv = dir / "crit.csv";
  const auto o = call({"meansquare", "--kind", "hurwitz", "--sigma", "0.5", "--a", "1", "--T-grid",
                       "25,50,75,100", "--predict", "lerch", "--threads", "2", "--out", csv.string()});
  ASSERT_EQ(o.code, 0) << o.err;
  ASSERT_TRUE(fs::exists(csv));
  ASSERT_TRUE(fs::exists(dir / "crit.report.json"));
  ASSERT_TRUE(fs::exists(dir / "crit.manifest.json"));
  std::ifstream is(csv);
  std::string header, row;
  std::getline(is, header);
  EXPECT_EQ(header, "T,sigma,a,kind,params,value,step,richardson_err");
  for (const char* T : {"25", "50", "75", "100"}) {
    std::getline(is, row);
    EXPECT_EQ(row.rfind(std::string(T) + ",0.5,1,hurwitz,,", 0), 0u) << row;
  }
  std::ifstream rs(dir / "crit.report.json");
  const auto rep = nlohmann::json::parse(rs);
  EXPECT_EQ(rep["branch"], "lerch_critical");
  EXPECT_EQ(rep["points"].size(), 4u);
}

TEST(CliMeanSquare, PredictionKindMismatch) {
  const auto dir = workdir("mismatch");
  EXPECT_EQ(call({"meansquare", "--kind", "barnes", "--w", "1,2", "--sigma", "1.5", "--T", "20",
                  "--predict", "thm11", "--out", (dir / "b.csv").string()})
                .code,
            2);
}

TEST(CliVerify, CoefficientsSuite) {
  const auto dir = workdir("verify");
  const auto o = call({"verify", "--suite", "coefficients", "--out", dir.string(), "--threads", "1"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.out.rfind("PASS coefficients", 0), 0u);
  ASSERT_TRUE(fs::exists(dir / "manifest.json"));
  std::size_t csv = 0, json = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    csv += e.path().extension() == ".csv";
    json += e.path().extension() == ".json";
  }
  EXPECT_EQ(csv, 1u);
  EXPECT_EQ(json, 2u);
}

TEST(CliVerify, FailingSuiteExitsOne) {
  const auto dir = workdir("osc");
  const auto o = call({"verify", "--suite", "oscillatory", "--out", dir.string()});
  EXPECT_EQ(o.code, 1) << o.out << o.err;
  EXPECT_NE(o.out.find("FAIL oscillatory_I"), std::string::npos);
}

TEST(CliVerify, UnknownSuiteIsParseError) {
  EXPECT_EQ(call({"verify", "--suite", "nope", "--out", workdir("nope").string()}).code, 2);
}
