// Barnes multiple zeta functions
//
//   zeta_r(s, a, w) = sum_{m in N^r} (a + m.w)^{-s},   w = (w_1, ..., w_r).
//
// Three evaluators:
//   multi_hurwitz     w = 1, through sum_j p_{r,j}(a) zeta_H(s - j, a); whole plane.
//   barnes_direct     sigma > r + 0.1, nested Euler-Maclaurin over the lattice.
//   barnes_truncated  r - 1 < sigma, box sum over {0..x}^r minus the 2^r - 1
//                     orthant corrections
//                       (-1)^{#E} (a + x sum_{e in E} w_e)^{r-s} / ((s-1)...(s-r) w_1...w_r),
//                     with remainder of order x^{r-1-sigma} while |t| <= 2 pi x / C.
#pragma once

#include "mvzeta/zetacore.hpp"

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <vector>

namespace mvzeta::barnes {

using zeta::Evaluation;
using zeta::LinePoint;
using zeta::Precision;

struct Weights {
  std::vector<double> w;
  double w_min = 1.0;
  double w_max = 1.0;

  /// DomainError unless w is non-empty with finite positive entries.
  static Weights make(std::vector<double> w);
  static Weights ones(int r);

  int r() const noexcept { return static_cast<int>(w.size()); }
  double product() const noexcept;
  /// True when every weight equals w_1 (so zeta_r reduces to the w = 1 case).
  bool uniform() const noexcept;
};

inline constexpr std::uint64_t kDefaultLatticeBudget = 100'000'000;

/// Distinct values v = a + m.w over m in {0..floor(x)}^r, ascending, with
/// multiplicities. Values closer than 1e-12 v are binned together.
class LatticeProfile {
 public:
  LatticeProfile() = default;
  LatticeProfile(double a, Weights w, double x, std::vector<double> values,
                 std::vector<std::uint64_t> counts);

  double a() const noexcept { return a_; }
  const Weights& weights() const noexcept { return w_; }
  double x() const noexcept { return x_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<double>& values() const noexcept { return values_; }
  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
  std::uint64_t mass() const noexcept;

  bool matches(double a, const Weights& w, double x) const noexcept;

 private:
  double a_ = 1.0;
  Weights w_;
  double x_ = 1.0;
  std::vector<double> values_;
  std::vector<std::uint64_t> counts_;
};

/// ResourceError if (floor(x)+1)^r exceeds budget.
LatticeProfile build_lattice_profile(double a, const Weights& w, double x,
                                     std::uint64_t budget = kDefaultLatticeBudget);

/// Binary cache: "MZLP", u32 version, u32 r, f64 a, f64 w[r], f64 x, u64 count,
/// then count pairs (f64 v, u64 c). Little-endian throughout.
void save_profile(const LatticeProfile& profile, const std::filesystem::path& path);
LatticeProfile load_profile(const std::filesystem::path& path);

/// Loads the cache when it exists and matches (a, w, x); otherwise builds the
/// profile and writes the cache.
LatticeProfile cached_profile(double a, const Weights& w, double x,
                              const std::filesystem::path& path,
                              std::uint64_t budget = kDefaultLatticeBudget);

struct TruncationPolicy {
  double C = kTwoPi;
  std::optional<double> fixed_x;  // empty: proportional, x = ceil(C |t| / 2 pi)

  static TruncationPolicy fixed(double x, double C = kTwoPi);
  static TruncationPolicy proportional(double C = kTwoPi);
  void validate() const;
  double x_for(double t) const;
  bool valid(double t, double x) const noexcept;
};

struct TruncatedValue {
  Complex value;
  double remainder_scale = 0.0;  // x^{r-1-sigma}
  double x = 0.0;
};

Evaluation multi_hurwitz_eval(LinePoint s, double a, int r, const Precision& prec = {});
Complex multi_hurwitz(LinePoint s, double a, int r, const Precision& prec = {});

/// Explicit length of the outer Euler-Maclaurin stage is max(tail_cut, N(t)).
Evaluation barnes_direct(LinePoint s, double a, const Weights& w, int tail_cut = 16,
                         const Precision& prec = {});

TruncatedValue barnes_truncated(LinePoint s, double a, const Weights& w,
                                const TruncationPolicy& pol,
                                const LatticeProfile* profile = nullptr);

/// barnes_truncated for many t with sigma and x fixed; one profile serves
/// every point.
class TruncatedLine {
 public:
  TruncatedLine(double sigma, std::shared_ptr<const LatticeProfile> profile,
                double C = kTwoPi);

  Complex operator()(double t) const;
  double x() const noexcept { return profile_->x(); }
  double t_limit() const noexcept { return kTwoPi * profile_->x() / C_; }
  double remainder_scale() const noexcept;

 private:
  double sigma_;
  double C_;
  std::shared_ptr<const LatticeProfile> profile_;
  std::vector<double> log_values_;
  std::vector<double> weighted_amplitude_;  // c_i v_i^{-sigma}
  std::vector<double> corner_;              // a + x sum_E w_e
  std::vector<double> corner_sign_;         // (-1)^{#E}
};

/// zeta_r(s, a, w) on one vertical line, picking the exact Hurwitz reduction
/// for uniform weights (w = c 1 gives c^{-s} zeta_r(s, a/c, 1)) and the
/// truncated lattice sum otherwise.
class BarnesLine {
 public:
  BarnesLine(double sigma, double a, const Weights& w, double t_max,
             const Precision& prec = {}, std::shared_ptr<const LatticeProfile> profile = {});

  Complex operator()(double t) const;
  bool exact() const noexcept { return !truncated_; }

 private:
  double sigma_;
  double a_;
  Weights w_;
  Precision prec_;
  std::vector<double> coeffs_;                     // uniform case
  std::vector<zeta::HurwitzLine> shifted_;         // zeta_H(s - j, a/c)
  std::optional<TruncatedLine> truncated_;
};

namespace detail {

/// Nested Euler-Maclaurin evaluation without the sigma > r + 0.1 guard; it
/// continues to the strip and is used as an independent cross-check.
Evaluation barnes_em(LinePoint s, double a, const Weights& w, int tail_cut,
                     const Precision& prec);

/// PoleError if s is within the guard radius of one of 1..r.
void check_poles(LinePoint s, int r);

}  // namespace detail

}  // namespace mvzeta::barnes
