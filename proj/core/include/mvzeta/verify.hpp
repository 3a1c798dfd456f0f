// Empirical checks of growth envelopes, the Montgomery-Vaughan inequality,
// comparability of Barnes and Hurwitz-multiple zeta values, and the
// oscillatory integral I(T). Each check yields a VerdictRecord: the observed
// sup of the relevant ratio, the threshold it is compared with, and the sweep
// that produced it.
#pragma once

#include "mvzeta/barnes.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace mvzeta::verify {

struct Sweep {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct VerdictRecord {
  std::string suite;
  std::string grid;
  double observed_constant = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::string artifacts;  // CSV path once written
  std::optional<std::uint64_t> seed;
  std::size_t evaluated = 0;
  std::size_t excluded = 0;
  std::vector<std::string> notes;
  Sweep sweep;
};

inline constexpr double kEnvelopeThreshold = 10.0;
inline constexpr double kComparabilityThreshold = 8.0;
inline constexpr double kMvThreshold = 4.0;
inline constexpr double kGrowthSlack = 1.25;
inline constexpr double kCoefficientThreshold = 1e-10;
inline constexpr double kFunctionalEquationThreshold = 1e-8;

/// The three-branch envelope 1 / t^{(r-sigma)/2} log t / t^{r-sigma-1/2} log t.
double envelope(int r, double sigma, double t);

VerdictRecord envelope_hurwitz(double a, const std::vector<double>& sigma_grid, double t_max,
                               double t_step = 0.5, int threads = 1);

struct MultiKind {
  std::optional<barnes::Weights> w;  // empty: w = 1
};

VerdictRecord envelope_multi(int r, double a, const MultiKind& kind,
                             const std::vector<double>& sigma_grid, double t_max,
                             double t_step = 0.5, int threads = 1);

/// |sum_{m != n} a_m conj(a_n) / ((m+a)^s (n+a)^s log((m+a)/(n+a)))| divided by
/// sum_m m |a_m|^2 / (m+a)^{2s}; coefficients indexed m = 1..N.
double mv_ratio(const std::vector<Complex>& coeffs, double a, double sigma);

/// Unit complex coefficients e^{2 pi i U}, U from mt19937_64(seed) as
/// (x >> 11) 2^-53.
std::vector<Complex> random_unit_coefficients(std::size_t n, std::uint64_t seed);

VerdictRecord mv_inequality(std::size_t N, double a, double sigma,
                            std::optional<std::uint64_t> seed);

VerdictRecord comparability(int r, double a, const barnes::Weights& w, double sigma,
                            const std::vector<double>& t_grid, const std::vector<double>& T_grid,
                            int threads = 1);

/// I(T) = int_1^T t^{sigma/2-1} sum_{0<=m<=k(t)} e^{2 pi i lambda m} (m+a)^{-sigma-it} dt,
/// k(t) = floor(sqrt(t / 2 pi) - a).
VerdictRecord oscillatory_I(double sigma, double a, zeta::RationalTwist lambda,
                            const std::vector<double>& T_grid, int threads = 1);

/// Values of I(T) for the T grid (exposed for tests).
std::vector<Complex> oscillatory_values(double sigma, double a, zeta::RationalTwist lambda,
                                        const std::vector<double>& T_grid, int threads = 1);

VerdictRecord coefficient_identity(int r_max = 8);
VerdictRecord functional_equation_grid();

/// Several records folded into one: max observed constant, conjunction of
/// passes, concatenated sweeps (which must share columns).
VerdictRecord merge(const std::string& suite, const std::vector<VerdictRecord>& parts);

struct SuiteOptions {
  std::uint64_t seed = 1;
  int threads = 1;
};

/// Named suite: envelopes, mv, comparability, oscillatory, coefficients, funceq.
std::vector<VerdictRecord> run_suite(const std::string& name, const SuiteOptions& opt = {});
const std::vector<std::string>& suite_names();

/// Writes <suite>_<hash>.csv and <suite>_<hash>.json into dir, fills
/// artifacts, and returns the two paths.
std::vector<std::filesystem::path> write_record(VerdictRecord& rec,
                                                const std::filesystem::path& dir);

}  // namespace mvzeta::verify
