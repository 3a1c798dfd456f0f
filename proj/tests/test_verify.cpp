#include "mvzeta/errors.hpp"
#include "mvzeta/output.hpp"
#include "mvzeta/verify.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

using mvzeta::Complex;
using namespace mvzeta::verify;

namespace {

double brute_mv_ratio(const std::vector<Complex>& c, double a, double sigma) {
  std::complex<long double> num = 0;
  long double den = 0;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    const long double mi = static_cast<long double>(i + 1) + a;
    den += static_cast<long double>(i + 1) * std::norm(std::complex<long double>(c[i])) *
           std::pow(mi, -2.0L * sigma);
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const long double mj = static_cast<long double>(j + 1) + a;
      num += std::complex<long double>(c[i]) * std::conj(std::complex<long double>(c[j])) /
             (std::pow(mi * mj, static_cast<long double>(sigma)) * std::log(mi / mj));
    }
  }
  return static_cast<double>(std::abs(num) / den);
}

}  // namespace

TEST(Envelope, ThreeBranches) {
  EXPECT_DOUBLE_EQ(envelope(2, 2.5, 100.0), 1.0);
  EXPECT_NEAR(envelope(2, 1.5, 100.0), std::pow(100.0, 0.25) * std::log(100.0), 1e-12);
  EXPECT_NEAR(envelope(2, 0.5, 100.0), std::pow(100.0, 1.0) * std::log(100.0), 1e-10);
  EXPECT_NEAR(envelope(1, 0.5, 50.0), std::pow(50.0, 0.25) * std::log(50.0), 1e-12);
}

TEST(Envelope, HurwitzRecordPasses) {
  const auto rec = envelope_hurwitz(1.0, {0.5, 1.5}, 200.0, 0.5, 2);
  EXPECT_EQ(rec.suite, "envelope_hurwitz");
  EXPECT_TRUE(rec.pass);
  EXPECT_GT(rec.observed_constant, 0.0);
  EXPECT_EQ(rec.sweep.rows.size(), rec.evaluated);
}

TEST(MvRatio, MatchesLongDoubleBruteForce) {
  for (std::uint64_t seed : {1u, 7u}) {
    const auto c = random_unit_coefficients(40, seed);
    for (double sigma : {0.5, 1.0}) {
      EXPECT_NEAR(mv_ratio(c, 0.5, sigma), brute_mv_ratio(c, 0.5, sigma), 1e-12);
    }
  }
}

TEST(MvRatio, TrivialCases) {
  EXPECT_DOUBLE_EQ(mv_ratio({Complex{1.0, 0.0}}, 1.0, 0.5), 0.0);
  // real coefficients: the (m, n) and (n, m) terms cancel
  EXPECT_NEAR(mv_ratio(std::vector<Complex>(10, 1.0), 1.0, 0.5), 0.0, 1e-14);
}

TEST(RandomCoefficients, DeterministicUnitModulus) {
  const auto a = random_unit_coefficients(100, 42);
  const auto b = random_unit_coefficients(100, 42);
  const auto c = random_unit_coefficients(100, 43);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  for (const auto& z : a) EXPECT_NEAR(std::abs(z), 1.0, 1e-15);
}

TEST(MvInequality, RecordShape) {
  const auto rec = mv_inequality(100, 1.0, 0.5, 3u);
  EXPECT_TRUE(rec.pass);
  EXPECT_EQ(rec.seed, std::optional<std::uint64_t>(3u));
  EXPECT_DOUBLE_EQ(rec.threshold, kMvThreshold);
  EXPECT_THROW(mv_inequality(0, 1.0, 0.5, std::nullopt), mvzeta::DomainError);
}

TEST(Comparability, UniformWeightsGiveRatioOne) {
  std::vector<double> ts;
  for (int k = 0; k < 40; ++k) ts.push_back(1.0 + k);
  const auto rec = comparability(2, 1.0, mvzeta::barnes::Weights::make({1.0, 1.0}), 1.75, ts, {40.0});
  EXPECT_NEAR(rec.observed_constant, 1.0, 1e-9);
  EXPECT_TRUE(rec.pass);
  EXPECT_THROW(comparability(2, 1.0, mvzeta::barnes::Weights::make({1.0, 1.0}), 2.5, ts, {40.0}),
               mvzeta::DomainError);
}

TEST(Oscillatory, ValuesAreCumulative) {
  const auto tw = mvzeta::zeta::RationalTwist::make(1, 2);
  const auto v = oscillatory_values(0.75, 0.5, tw, {50.0, 100.0});
  ASSERT_EQ(v.size(), 2u);
  const auto v2 = oscillatory_values(0.75, 0.5, tw, {100.0});
  EXPECT_NEAR(std::abs(v[1] - v2[0]), 0.0, 1e-10);
}

TEST(Oscillatory, MatchesDirectQuadrature) {
  // With a = 1/2 the sum is empty below t = 2 pi a^2 and holds only m = 0
  // up to 2 pi (1 + a)^2 ~ 14.1.
  const double sigma = 0.75, a = 0.5, T = 10.0;
  const auto v = oscillatory_values(sigma, a, mvzeta::zeta::RationalTwist::make(1, 1), {T});
  Complex ref = 0.0;
  const int n = 200000;
  const double t0 = 2.0 * std::acos(-1.0) * a * a;
  const double h = (T - t0) / n;
  for (int k = 0; k <= n; ++k) {
    const double t = t0 + k * h;
    const double w = (k == 0 || k == n) ? 1.0 : (k % 2 ? 4.0 : 2.0);
    ref += w * std::pow(t, sigma / 2.0 - 1.0) * std::pow(a, -Complex{sigma, t});
  }
  ref *= h / 3.0;
  EXPECT_LT(std::abs(v[0] - ref), 1e-7);  // step 0.05 Simpson
}

TEST(Coefficients, IdentityRecord) {
  const auto rec = coefficient_identity();
  EXPECT_TRUE(rec.pass);
  EXPECT_LE(rec.observed_constant, kCoefficientThreshold);
  EXPECT_EQ(rec.evaluated, 8u * 3u * 31u);
}

TEST(FunctionalEquation, GridHasFiftyPoints) {
  const auto rec = functional_equation_grid();
  EXPECT_EQ(rec.evaluated, 50u);
  EXPECT_TRUE(rec.pass);
}

TEST(Merge, FoldsRecords) {
  VerdictRecord a, b;
  a.suite = b.suite = "x";
  a.grid = "g1";
  b.grid = "g2";
  a.threshold = b.threshold = 4.0;
  a.observed_constant = 1.0;
  b.observed_constant = 3.0;
  a.pass = b.pass = true;
  a.evaluated = 2;
  b.evaluated = 5;
  a.sweep.columns = b.sweep.columns = {"c"};
  a.sweep.rows = {{1.0}};
  b.sweep.rows = {{2.0}, {3.0}};
  const auto m = merge("y", {a, b});
  EXPECT_EQ(m.suite, "y");
  EXPECT_EQ(m.grid, "g1 + g2");
  EXPECT_DOUBLE_EQ(m.observed_constant, 3.0);
  EXPECT_TRUE(m.pass);
  EXPECT_EQ(m.evaluated, 7u);
  EXPECT_EQ(m.sweep.rows.size(), 3u);
  b.sweep.columns = {"d"};
  EXPECT_THROW(merge("y", {a, b}), mvzeta::DomainError);
}

TEST(Suites, UnknownNameThrows) {
  EXPECT_THROW(run_suite("nope"), mvzeta::DomainError);
  EXPECT_EQ(suite_names().size(), 6u);
}

TEST(Records, WrittenWithHashedNames) {
  const auto dir = std::filesystem::temp_directory_path() / "mvzeta_test_records";
  std::filesystem::remove_all(dir);
  auto recs = run_suite("coefficients");
  ASSERT_EQ(recs.size(), 1u);
  const auto paths = write_record(recs[0], dir);
  const std::string stem =
      "coefficients_" + mvzeta::io::hex64(mvzeta::io::fnv1a64("coefficients|" + recs[0].grid));
  EXPECT_EQ(paths[0].filename().string(), stem + ".csv");
  EXPECT_EQ(paths[1].filename().string(), stem + ".json");
  EXPECT_EQ(recs[0].artifacts, stem + ".csv");
  std::ifstream is(paths[1]);
  const auto j = nlohmann::json::parse(is);
  EXPECT_EQ(j["suite"], "coefficients");
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["artifacts"], stem + ".csv");
  EXPECT_TRUE(j["seed"].is_null());
  std::filesystem::remove_all(dir);
}
