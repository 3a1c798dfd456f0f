#include "mvzeta/combinatorics.hpp"
#include "mvzeta/errors.hpp"
#include "mvzeta/zetacore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace mvzeta::zeta {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// B_{2k} / (2k)! for k = 0 .. max_k
const std::vector<double>& em_coefficients() {
  static const std::vector<double> table = [] {
    const auto& b = comb::bernoulli_table();
    std::vector<double> c(static_cast<std::size_t>(b.max_k() + 1), 0.0);
    double factorial = 1.0;
    for (int k = 1; k <= b.max_k(); ++k) {
      factorial *= (2.0 * k - 1.0) * (2.0 * k);
      c[static_cast<std::size_t>(k)] = b.value(2 * k) / factorial;
    }
    return c;
  }();
  return table;
}

void check_pole(Complex s) {
  const double dist = std::abs(s - 1.0);
  if (dist < kPoleGuard) {
    throw PoleError("zeta_H: s is within " + std::to_string(dist) + " of the pole s=1", 1.0,
                    dist);
  }
}

// (m + a)^{-s} given log(m + a) and (m + a)^{-sigma}
inline Complex dirichlet_term(double amplitude, double log_base, double t) {
  const double phase = t * log_base;
  return {amplitude * std::cos(phase), -amplitude * std::sin(phase)};
}

Evaluation finish(Complex s, double a, std::size_t n, const CompensatedComplexSum& head,
                  double head_abs, const Precision& prec) {
  double remainder = 0.0;
  const double b = static_cast<double>(n) + a;
  const Complex tail = detail::euler_maclaurin_tail(s, b, prec.em_depth, remainder);
  const Complex value = head.value() + tail;
  const double scale = std::max(std::abs(value), std::pow(b, -s.real()));
  if (remainder > prec.rel_tol * scale) {
    throw AccuracyError("zeta_H: Euler-Maclaurin remainder " + std::to_string(remainder) +
                            " exceeds rel_tol; raise shift_count_factor or em_depth",
                        remainder / scale);
  }
  const double rounding = 4.0 * kEps * (head_abs + std::abs(tail));
  return {value, remainder + rounding};
}

}  // namespace

void LinePoint::validate() const {
  if (!std::isfinite(sigma) || !std::isfinite(t)) {
    throw DomainError("LinePoint: sigma and t must be finite");
  }
}

void HurwitzParams::validate() const {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw DomainError("Hurwitz shift a must be positive and finite, got " + std::to_string(a));
  }
}

void Precision::validate() const {
  if (!(rel_tol >= 1e-13)) throw DomainError("Precision: rel_tol must be >= 1e-13");
  if (em_depth < 1 || em_depth >= comb::bernoulli_table().max_k()) {
    throw DomainError("Precision: em_depth must lie in [1, " +
                      std::to_string(comb::bernoulli_table().max_k() - 1) + "]");
  }
  if (!(shift_count_factor > 0.0) || !std::isfinite(shift_count_factor)) {
    throw DomainError("Precision: shift_count_factor must be positive");
  }
}

namespace detail {

Complex euler_maclaurin_tail(Complex s, double b, int depth, double& remainder) {
  const auto& c = em_coefficients();
  const double log_b = std::log(b);
  const Complex b_pow = std::pow(b, -s.real()) * std::polar(1.0, -s.imag() * log_b);  // b^{-s}
  Complex acc = b * b_pow / (s - 1.0) + 0.5 * b_pow;
  Complex rising = s;               // (s)_{2k-1}
  Complex power = b_pow / b;        // b^{-s-2k+1}
  const double inv_b2 = 1.0 / (b * b);
  for (int k = 1; k <= depth; ++k) {
    acc += c[static_cast<std::size_t>(k)] * rising * power;
    rising *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
    power *= inv_b2;
  }
  remainder = std::abs(c[static_cast<std::size_t>(depth + 1)] * rising * power);
  return acc;
}

std::size_t summation_length(double t, const Precision& prec) {
  return static_cast<std::size_t>(std::ceil(prec.shift_count_factor * (std::abs(t) + 10.0)));
}

}  // namespace detail

Evaluation hurwitz_zeta_eval(LinePoint s, HurwitzParams p, const Precision& prec) {
  s.validate();
  p.validate();
  prec.validate();
  const Complex z = s.s();
  check_pole(z);
  const std::size_t n = detail::summation_length(s.t, prec);
  CompensatedComplexSum head;
  double head_abs = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    const double log_base = std::log(static_cast<double>(m) + p.a);
    const double amplitude = std::pow(static_cast<double>(m) + p.a, -s.sigma);
    head.add(dirichlet_term(amplitude, log_base, s.t));
    head_abs += amplitude;
  }
  return finish(z, p.a, n, head, head_abs, prec);
}

Complex hurwitz_zeta(LinePoint s, HurwitzParams p, const Precision& prec) {
  return hurwitz_zeta_eval(s, p, prec).value;
}

Complex riemann_zeta(LinePoint s, const Precision& prec) {
  return hurwitz_zeta(s, HurwitzParams{1.0}, prec);
}

double riemann_zeta(double s, const Precision& prec) {
  return riemann_zeta(LinePoint{s, 0.0}, prec).real();
}

double hurwitz_zeta_real(double s, double a, const Precision& prec) {
  return hurwitz_zeta(LinePoint{s, 0.0}, HurwitzParams{a}, prec).real();
}

FiniteApprox hurwitz_finite_approx(LinePoint s, HurwitzParams p, double x) {
  s.validate();
  p.validate();
  if (!(s.sigma > 0.0 && s.sigma <= 2.0)) {
    throw DomainError("hurwitz_finite_approx: sigma must lie in (0, 2]");
  }
  if (!(x >= std::abs(s.t) / kPi) || !std::isfinite(x)) {
    throw DomainError("hurwitz_finite_approx: validity needs x >= |t|/pi");
  }
  const Complex z = s.s();
  check_pole(z);
  CompensatedComplexSum head;
  const auto last = static_cast<std::size_t>(std::floor(x));
  for (std::size_t m = 0; m <= last; ++m) {
    const double log_base = std::log(static_cast<double>(m) + p.a);
    head.add(dirichlet_term(std::pow(static_cast<double>(m) + p.a, -s.sigma), log_base, s.t));
  }
  head.add(std::exp((1.0 - z) * std::log(x)) / (z - 1.0));
  const double bound = 2.0 * (1.0 + std::abs(z) / s.sigma) * std::pow(x, -s.sigma);
  return {head.value(), bound};
}

HurwitzLine::HurwitzLine(double sigma, double a, double t_max, const Precision& prec)
    : sigma_(sigma), a_(a), t_max_(std::abs(t_max)), prec_(prec) {
  LinePoint{sigma, t_max}.validate();
  HurwitzParams{a}.validate();
  prec_.validate();
  const std::size_t n = detail::summation_length(t_max_, prec_);
  log_terms_.resize(n);
  amplitude_.resize(n);
  for (std::size_t m = 0; m < n; ++m) {
    log_terms_[m] = std::log(static_cast<double>(m) + a);
    amplitude_[m] = std::pow(static_cast<double>(m) + a, -sigma);
  }
}

Evaluation HurwitzLine::eval(double t) const {
  if (!(std::abs(t) <= t_max_)) {
    throw DomainError("HurwitzLine: |t| exceeds the t_max the line was built for");
  }
  const Complex z(sigma_, t);
  check_pole(z);
  const std::size_t n = detail::summation_length(t, prec_);
  CompensatedComplexSum head;
  double head_abs = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    head.add(dirichlet_term(amplitude_[m], log_terms_[m], t));
    head_abs += amplitude_[m];
  }
  return finish(z, a_, n, head, head_abs, prec_);
}

Complex HurwitzLine::operator()(double t) const { return eval(t).value; }

}  // namespace mvzeta::zeta
