// Hurwitz and Lerch zeta functions on vertical lines, plus the gamma-type
// special functions the predictions and functional equations need.
//
// zeta_H(s, a) is continued to the whole plane by Euler-Maclaurin summation:
//
//   zeta_H(s, a) = sum_{m<N} (m+a)^{-s} + (N+a)^{1-s}/(s-1) + (N+a)^{-s}/2
//                + sum_{k=1}^{M} B_{2k}/(2k)! (s)_{2k-1} (N+a)^{-s-2k+1} + R_M
//
// with N = ceil(c (|t| + 10)) and (s)_j the rising factorial. |R_M| is
// estimated by the first omitted correction term.
#pragma once

#include "mvzeta/numeric.hpp"

#include <optional>
#include <vector>

namespace mvzeta::zeta {

struct LinePoint {
  double sigma = 0.0;
  double t = 0.0;

  Complex s() const noexcept { return {sigma, t}; }
  static LinePoint from(Complex s) noexcept { return {s.real(), s.imag()}; }
  /// DomainError unless both components are finite.
  void validate() const;
};

struct HurwitzParams {
  double a = 1.0;
  void validate() const;
};

/// Twist lambda = p/q in lowest terms with 0 < p <= q.
struct RationalTwist {
  long p = 1;
  long q = 1;

  double value() const noexcept { return static_cast<double>(p) / static_cast<double>(q); }
  /// Reduces to lowest terms; DomainError unless 0 < p <= q.
  static RationalTwist make(long p, long q);
};

/// Best rational p/q (q <= max_q) within tol of x in (0, 1], if any.
std::optional<RationalTwist> rationalize(double x, long max_q = 64, double tol = 1e-13);

struct LerchParams {
  double a = 1.0;
  double lambda = 1.0;
  std::optional<RationalTwist> rational;  // set when lambda_kind is rational

  static LerchParams with_rational(double a, long p, long q);
  static LerchParams with_general(double a, double lambda);
  /// Picks the rational kind when lambda is a small-denominator rational.
  static LerchParams from_real(double a, double lambda);
  void validate() const;
};

struct Precision {
  double rel_tol = 1e-12;
  int em_depth = 12;
  double shift_count_factor = 1.2;
  void validate() const;
};

struct EulerConstants {
  double gamma = 0.0;
  double gamma_a = 0.0;
};

/// A value together with the estimated absolute error of the evaluation.
struct Evaluation {
  Complex value;
  double error_estimate = 0.0;
};

inline constexpr double kPoleGuard = 1e-8;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

Evaluation hurwitz_zeta_eval(LinePoint s, HurwitzParams p, const Precision& prec = {});
Complex hurwitz_zeta(LinePoint s, HurwitzParams p, const Precision& prec = {});

/// zeta(s) on the real line or anywhere else, via zeta_H(s, 1).
Complex riemann_zeta(LinePoint s, const Precision& prec = {});
double riemann_zeta(double s, const Precision& prec = {});
double hurwitz_zeta_real(double s, double a, const Precision& prec = {});

struct FiniteApprox {
  Complex value;
  double error_bound = 0.0;
};

/// sum_{0<=m<=x} (m+a)^{-s} + x^{1-s}/(s-1), valid for 0 < sigma <= 2 and
/// x >= |t|/pi. error_bound = 2 (1 + |s|/sigma) x^{-sigma}.
FiniteApprox hurwitz_finite_approx(LinePoint s, HurwitzParams p, double x);

Evaluation lerch_zeta_eval(LinePoint s, const LerchParams& p, const Precision& prec = {});
Complex lerch_zeta(LinePoint s, const LerchParams& p, const Precision& prec = {});

/// Relative mismatch |L - R| / (|L| + |R| + 1e-300) of the Hurwitz (lambda = 1)
/// or Lerch (0 < lambda < 1) functional equation relating 1 - s to s.
double functional_equation_residual(LinePoint s, const LerchParams& p,
                                    const Precision& prec = {});

EulerConstants gen_euler_constant(HurwitzParams p, const Precision& prec = {});

/// Principal-branch log Gamma(z); PoleError at non-positive integers.
Complex log_gamma(Complex z);
Complex gamma(Complex z);
/// psi(x) for real x > 0.
double digamma(double x);

/// |Gamma(s)| with relative error well below 1e-8.
double complex_gamma_mod(LinePoint s);
/// sqrt(2 pi) t^{sigma - 1/2} e^{-pi t / 2}, the large-t modulus of Gamma.
double stirling_envelope(LinePoint s);

/// zeta_H(sigma + i t, a) for many t on one line. Caches log(m + a) and
/// (m + a)^{-sigma} up to the summation length needed at t_max; values agree
/// with hurwitz_zeta to rounding.
class HurwitzLine {
 public:
  HurwitzLine(double sigma, double a, double t_max, const Precision& prec = {});

  Complex operator()(double t) const;
  Evaluation eval(double t) const;

  double sigma() const noexcept { return sigma_; }
  double a() const noexcept { return a_; }
  double t_max() const noexcept { return t_max_; }

 private:
  double sigma_;
  double a_;
  double t_max_;
  Precision prec_;
  std::vector<double> log_terms_;
  std::vector<double> amplitude_;
};

/// zeta_L(sigma + i t, a, p/q) for many t, through q Hurwitz lines.
class LerchLine {
 public:
  LerchLine(double sigma, double a, RationalTwist twist, double t_max,
            const Precision& prec = {});
  Complex operator()(double t) const;

 private:
  double sigma_;
  RationalTwist twist_;
  std::vector<HurwitzLine> parts_;
};

namespace detail {

/// Euler-Maclaurin tail starting at b = N + a, together with the first
/// omitted term's magnitude.
Complex euler_maclaurin_tail(Complex s, double b, int depth, double& remainder);

/// Number of explicit terms for a given |t|.
std::size_t summation_length(double t, const Precision& prec);

}  // namespace detail

}  // namespace mvzeta::zeta
