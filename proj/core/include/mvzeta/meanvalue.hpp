// Mean-square integrals int_1^T |f(sigma + it)|^2 dt for the zeta functions in
// this library, the asymptotic main terms they are compared against, and the
// residual analysis that turns an O(T^e) claim into a fitted exponent.
#pragma once

#include "mvzeta/barnes.hpp"
#include "mvzeta/quadrature.hpp"
#include "mvzeta/zetacore.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mvzeta::mv {

enum class Kind { hurwitz, lerch, multi_hurwitz, barnes };

std::string to_string(Kind kind);
/// Accepts "hurwitz", "lerch", "multi" / "multi_hurwitz", "barnes".
Kind kind_from_string(const std::string& name);

struct StepRule {
  std::optional<double> fixed_h;  // empty: automatic

  static StepRule automatic() { return {}; }
  static StepRule fixed(double h);
  double step(double t_max, double a) const;
};

inline constexpr double kMaxTSeries = 5000.0;
inline constexpr double kMaxTLattice = 500.0;

struct MeanSquareRequest {
  Kind kind = Kind::hurwitz;
  double sigma = 0.5;
  double a = 1.0;
  std::optional<double> lambda;            // lerch
  int r = 1;                               // multi_hurwitz
  std::optional<barnes::Weights> w;        // barnes
  double T = 2.0;
  StepRule step_rule;
  zeta::Precision prec;
  int threads = 1;
  std::shared_ptr<const barnes::LatticeProfile> profile;  // barnes, optional

  void validate() const;
  /// Largest admissible T for this kind.
  double max_T() const;
};

struct MeanSquareResult {
  double T = 0.0;
  double value = 0.0;
  double step = 0.0;
  double richardson_err = 0.0;
  std::size_t samples = 0;
  bool accuracy_warning = false;  // richardson_err > 1% of value
  std::string wall_notes;
};

/// The integrand |f|^2 for a request, valid for t in [1, t_max].
std::function<double(double)> integrand(const MeanSquareRequest& req, double t_max);

MeanSquareResult mean_square(const MeanSquareRequest& req);
/// One run up to max(T_grid); every T shares the same grid (req.T is ignored).
std::vector<MeanSquareResult> mean_square_series(const MeanSquareRequest& req,
                                                 const std::vector<double>& t_grid);
/// Test hook: the same quadrature applied to an arbitrary nonnegative integrand.
MeanSquareResult mean_square_of(const std::function<double(double)>& f, double T,
                                const StepRule& rule, double a = 1.0, int threads = 1);

struct MixedMeanResult {
  Complex value;
  double step = 0.0;
  double richardson_err = 0.0;
};

/// int_1^T zeta_H(s-k, a) conj(zeta_H(s-l, a)) dt with r = floor(sigma) + 1,
/// so r - 1 < sigma < r; needs 0 < a <= 1, k, l <= r - 1, (k, l) != (r-1, r-1).
MixedMeanResult mixed_mean(int k, int l, double sigma, double a, double T,
                           const StepRule& rule = {}, int threads = 1);

struct Term {
  double coefficient = 0.0;
  double t_power = 0.0;
  int log_power = 0;
};

struct Prediction {
  std::vector<Term> terms;
  double error_exponent = 0.0;
  int error_log = 0;
  std::string branch;

  /// sum coeff T^p (log T)^q
  double main(double T) const;
  /// T^error_exponent (log T)^error_log
  double envelope(double T) const;
};

/// Main terms of the mean square of zeta_r(sigma + it, a, 1), r - 1 < sigma < r.
Prediction predict_theorem11(int r, double sigma, double a, const zeta::Precision& prec = {});

/// Main terms of the mean square of zeta_L(sigma + it, a, lambda), 0 < sigma < 1.
/// At sigma = 1/2 this is T log T + (gamma(a) + gamma(lambda) - 1 - log 2 pi) T.
Prediction predict_lerch(double sigma, double a, double lambda,
                         const zeta::Precision& prec = {});

struct ResidualPoint {
  double T = 0.0;
  double measured = 0.0;
  double predicted = 0.0;
  double ratio = 0.0;
  double residual = 0.0;
};

struct ResidualReport {
  std::vector<ResidualPoint> points;
  double fitted_exponent = 0.0;
  double fitted_constant = 0.0;
  double allowed_exponent = 0.0;
  bool monotone = false;
  bool pass = false;
  std::string branch;
};

/// Ratios measured / main(T), and a least-squares fit of
/// log|residual| - error_log log log T = log K + e log T.
ResidualReport residual_report(const std::vector<std::pair<double, MeanSquareResult>>& measured,
                               const Prediction& pred);

}  // namespace mvzeta::mv
