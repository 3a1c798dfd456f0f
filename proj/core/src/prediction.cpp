#include "mvzeta/combinatorics.hpp"
#include "mvzeta/errors.hpp"
#include "mvzeta/meanvalue.hpp"

#include <cmath>

namespace mvzeta::mv {

namespace {

constexpr double kBranchTol = 1e-12;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// (2 pi)^{2 sigma - 2r + 1} / (2r - 2 sigma) * zeta_H(2r - 2 sigma, b)
double secondary(int r, double sigma, double b, const zeta::Precision& prec) {
  const double e = 2.0 * r - 2.0 * sigma;
  return std::pow(kTwoPi, 1.0 - e) / e * zeta::hurwitz_zeta_real(e, b, prec);
}

}  // namespace

double Prediction::main(double T) const {
  const double log_t = std::log(T);
  double sum = 0.0;
  for (const Term& term : terms) {
    sum += term.coefficient * std::pow(T, term.t_power) * std::pow(log_t, term.log_power);
  }
  return sum;
}

double Prediction::envelope(double T) const {
  return std::pow(T, error_exponent) * std::pow(std::log(T), error_log);
}

Prediction predict_theorem11(int r, double sigma, double a, const zeta::Precision& prec) {
  if (r < 1) throw DomainError("r must be at least 1");
  if (!(sigma > r - 1.0 && sigma < r)) throw DomainError("predict_theorem11 needs r - 1 < sigma < r");
  zeta::HurwitzParams{a}.validate();
  const comb::CoefficientTable p = comb::reduction_coefficients(r, a);
  const double f2 = factorial(r - 1) * factorial(r - 1);
  const bool critical = std::abs(sigma - (r - 0.5)) <= kBranchTol;

  double diagonal = 0.0;
  for (int k = 0; k < r; ++k) {
    for (int l = 0; l < r; ++l) {
      if (critical && k == r - 1 && l == r - 1) continue;
      diagonal += p[k] * p[l] * zeta::hurwitz_zeta_real(2.0 * sigma - k - l, a, prec);
    }
  }

  Prediction out;
  out.error_log = 1;
  if (critical) {
    const zeta::EulerConstants g = zeta::gen_euler_constant({a}, prec);
    const double linear = diagonal + (g.gamma_a + g.gamma - 1.0 - std::log(kTwoPi)) / f2;
    out.terms = {{1.0 / f2, 1.0, 1}, {linear, 1.0, 0}};
    out.error_exponent = 0.5;
    out.branch = "thm11_ii";
    return out;
  }
  const Term power{secondary(r, sigma, 1.0, prec) / f2, 2.0 * r - 2.0 * sigma, 0};
  const Term linear{diagonal, 1.0, 0};
  out.error_exponent = r - sigma;
  if (sigma > r - 0.5) {
    out.terms = {linear, power};
    out.branch = "thm11_i";
  } else {
    out.terms = {power, linear};
    out.branch = "thm11_iii";
  }
  return out;
}

Prediction predict_lerch(double sigma, double a, double lambda, const zeta::Precision& prec) {
  if (!(sigma > 0.0 && sigma < 1.0)) throw DomainError("predict_lerch needs 0 < sigma < 1");
  zeta::HurwitzParams{a}.validate();
  if (!(lambda > 0.0 && lambda <= 1.0)) throw DomainError("lambda must lie in (0, 1]");
  Prediction out;
  out.error_log = 1;
  if (std::abs(sigma - 0.5) <= kBranchTol) {
    const double gamma_a = zeta::gen_euler_constant({a}, prec).gamma_a;
    const double gamma_l = zeta::gen_euler_constant({lambda}, prec).gamma_a;
    out.terms = {{1.0, 1.0, 1}, {gamma_a + gamma_l - 1.0 - std::log(kTwoPi), 1.0, 0}};
    out.error_exponent = 0.5;
    out.branch = "lerch_critical";
    return out;
  }
  const Term linear{zeta::hurwitz_zeta_real(2.0 * sigma, a, prec), 1.0, 0};
  out.error_exponent = 1.0 - sigma;
  if (sigma > 0.5) {
    out.terms = {linear, {secondary(1, sigma, lambda, prec), 2.0 - 2.0 * sigma, 0}};
    out.branch = "lerch_upper";
    return out;
  }
  if (lambda == 1.0 && !(a < 1.0)) {
    throw DomainError("predict_lerch below the critical line with lambda = 1 needs 0 < a < 1");
  }
  const double shift = lambda == 1.0 ? 1.0 : 1.0 - lambda;
  out.terms = {{secondary(1, sigma, shift, prec), 2.0 - 2.0 * sigma, 0}, linear};
  out.branch = "lerch_lower";
  return out;
}

}  // namespace mvzeta::mv
