// Lerch zeta zeta_L(s, a, lambda) = sum_{m>=0} e^{2 pi i m lambda} (m+a)^{-s}.
//
// Rational lambda = p/q reduces exactly to q Hurwitz values:
//   zeta_L(s, a, p/q) = q^{-s} sum_{j<q} e^{2 pi i j p/q} zeta_H(s, (j+a)/q).
// General lambda is summed directly for sigma > 1; the tail
// sum_{m>=N} z^m f(m), z = e^{2 pi i lambda}, is replaced by its Boole
// expansion z^N sum_j g_j f^{(j)}(N), where g_j are the Taylor coefficients
// of 1/(1 - z e^x).
#include "mvzeta/errors.hpp"
#include "mvzeta/zetacore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace mvzeta::zeta {

namespace {

constexpr int kBooleTerms = 30;
constexpr double kMaxDirectTerms = 1e7;
constexpr double kZeroSides = 1e-12;

Complex unit_phase(double turns) {
  const double frac = turns - std::floor(turns);
  return std::polar(1.0, kTwoPi * frac);
}

Evaluation lerch_rational(LinePoint s, double a, RationalTwist twist, const Precision& prec) {
  if (twist.q == 1) return hurwitz_zeta_eval(s, HurwitzParams{a}, prec);
  const double q = static_cast<double>(twist.q);
  CompensatedComplexSum acc;
  double err = 0.0;
  for (long j = 0; j < twist.q; ++j) {
    const Evaluation part = hurwitz_zeta_eval(s, HurwitzParams{(static_cast<double>(j) + a) / q}, prec);
    const long numerator = (j * twist.p) % twist.q;
    acc.add(unit_phase(static_cast<double>(numerator) / q) * part.value);
    err += part.error_estimate;
  }
  const Complex scale = std::exp(-s.s() * std::log(q));
  return {scale * acc.value(), std::abs(scale) * err};
}

Evaluation lerch_general(LinePoint s, double a, double lambda, const Precision& prec) {
  if (!(s.sigma > 1.0 + 1e-3)) {
    throw UnsupportedRegionError(
        "lerch_zeta: general (non-rational) lambda is only supported for sigma > 1");
  }
  const Complex z = unit_phase(lambda);
  const double delta = std::min(lambda, 1.0 - lambda);
  const Complex sv = s.s();
  const double n_real = std::ceil(4.0 * (std::abs(sv) + kBooleTerms) / (kTwoPi * delta)) + 10.0;
  if (n_real > kMaxDirectTerms) {
    throw ResourceError("lerch_zeta: lambda too close to an integer for the direct series");
  }
  const auto n = static_cast<std::size_t>(n_real);

  CompensatedComplexSum head;
  for (std::size_t m = 0; m < n; ++m) {
    const double log_base = std::log(static_cast<double>(m) + a);
    const Complex term = std::exp(-sv * log_base);
    head.add(unit_phase(lambda * static_cast<double>(m)) * term);
  }

  // g_0 = 1/(1-z), g_j = z/(1-z) sum_{i=1}^{j} g_{j-i}/i!
  std::vector<Complex> g(kBooleTerms + 1);
  const Complex inv = 1.0 / (1.0 - z);
  g[0] = inv;
  for (int j = 1; j <= kBooleTerms; ++j) {
    Complex acc = 0.0;
    double inv_fact = 1.0;
    for (int i = 1; i <= j; ++i) {
      inv_fact /= i;
      acc += g[static_cast<std::size_t>(j - i)] * inv_fact;
    }
    g[static_cast<std::size_t>(j)] = z * inv * acc;
  }

  // f^{(j)}(N) = (-1)^j (s)_j b^{-s-j}
  const double b = static_cast<double>(n) + a;
  Complex derivative = std::exp(-sv * std::log(b));
  CompensatedComplexSum tail;
  for (int j = 0; j < kBooleTerms; ++j) {
    tail.add(g[static_cast<std::size_t>(j)] * derivative);
    derivative *= -(sv + static_cast<double>(j)) / b;
  }
  const Complex zn = unit_phase(lambda * static_cast<double>(n));
  const double remainder = std::abs(g[kBooleTerms] * derivative);
  const Complex value = head.value() + zn * tail.value();
  const double scale = std::max(std::abs(value), std::pow(b, -s.sigma));
  if (remainder > prec.rel_tol * scale) {
    throw AccuracyError("lerch_zeta: Boole tail did not converge", remainder / scale);
  }
  return {value, remainder};
}

}  // namespace

RationalTwist RationalTwist::make(long p, long q) {
  if (q <= 0 || p <= 0 || p > q) {
    throw DomainError("rational lambda p/q needs 0 < p <= q");
  }
  const long g = std::gcd(p, q);
  return {p / g, q / g};
}

std::optional<RationalTwist> rationalize(double x, long max_q, double tol) {
  if (!(x > 0.0 && x <= 1.0)) return std::nullopt;
  for (long q = 1; q <= max_q; ++q) {
    const long p = std::lround(x * static_cast<double>(q));
    if (p < 1 || p > q) continue;
    if (std::abs(x - static_cast<double>(p) / static_cast<double>(q)) <= tol) {
      return RationalTwist::make(p, q);
    }
  }
  return std::nullopt;
}

LerchParams LerchParams::with_rational(double a, long p, long q) {
  const RationalTwist tw = RationalTwist::make(p, q);
  LerchParams out{a, tw.value(), tw};
  out.validate();
  return out;
}

LerchParams LerchParams::with_general(double a, double lambda) {
  LerchParams out{a, lambda, std::nullopt};
  out.validate();
  return out;
}

LerchParams LerchParams::from_real(double a, double lambda) {
  if (auto tw = rationalize(lambda)) return with_rational(a, tw->p, tw->q);
  return with_general(a, lambda);
}

void LerchParams::validate() const {
  HurwitzParams{a}.validate();
  if (!(lambda > 0.0 && lambda <= 1.0)) {
    throw DomainError("Lerch lambda must lie in (0, 1]");
  }
  if (rational && std::abs(rational->value() - lambda) > 1e-15) {
    throw DomainError("Lerch lambda disagrees with its rational form");
  }
}

Evaluation lerch_zeta_eval(LinePoint s, const LerchParams& p, const Precision& prec) {
  s.validate();
  p.validate();
  prec.validate();
  if (p.rational) return lerch_rational(s, p.a, *p.rational, prec);
  if (p.lambda == 1.0) return hurwitz_zeta_eval(s, HurwitzParams{p.a}, prec);
  return lerch_general(s, p.a, p.lambda, prec);
}

Complex lerch_zeta(LinePoint s, const LerchParams& p, const Precision& prec) {
  return lerch_zeta_eval(s, p, prec).value;
}

double functional_equation_residual(LinePoint s, const LerchParams& p, const Precision& prec) {
  s.validate();
  p.validate();
  if (!(p.a > 0.0 && p.a < 1.0)) {
    throw DomainError("functional_equation_residual: need 0 < a < 1");
  }
  const Complex sv = s.s();
  const Complex i(0.0, 1.0);
  const Complex lhs = lerch_zeta(LinePoint::from(1.0 - sv), p, prec);
  const Complex factor = gamma(sv) * std::exp(-sv * std::log(kTwoPi));
  const double a = p.a;
  const double lambda = p.lambda;

  Complex first;
  Complex second;
  if (lambda == 1.0) {
    // sum_{m>=1} e^{2 pi i m alpha} m^{-s} = e^{2 pi i alpha} zeta_L(s, 1, alpha)
    auto periodic = [&](double alpha) {
      return unit_phase(alpha) * lerch_zeta(s, LerchParams::from_real(1.0, alpha), prec);
    };
    first = factor * std::exp(-i * kPi * sv / 2.0) * periodic(a);
    second = factor * std::exp(i * kPi * sv / 2.0) * periodic(1.0 - a);
  } else {
    first = factor * std::exp(i * kPi * sv / 2.0 - i * kTwoPi * a * lambda) *
            lerch_zeta(s, LerchParams::from_real(lambda, 1.0 - a), prec);
    second = factor * std::exp(-i * kPi * sv / 2.0 + i * kTwoPi * a * (1.0 - lambda)) *
             lerch_zeta(s, LerchParams::from_real(1.0 - lambda, a), prec);
  }
  const Complex rhs = first + second;
  const double diff = std::abs(lhs - rhs);
  const double sides = std::abs(lhs) + std::abs(rhs);
  // At an exact zero both sides are rounding noise; measure against the summands.
  const double summands = std::abs(first) + std::abs(second);
  if (sides <= kZeroSides * summands) return diff / summands;
  return diff / (sides + 1e-300);
}

LerchLine::LerchLine(double sigma, double a, RationalTwist twist, double t_max,
                     const Precision& prec)
    : sigma_(sigma), twist_(RationalTwist::make(twist.p, twist.q)) {
  HurwitzParams{a}.validate();
  const double q = static_cast<double>(twist_.q);
  parts_.reserve(static_cast<std::size_t>(twist_.q));
  for (long j = 0; j < twist_.q; ++j) {
    parts_.emplace_back(sigma, (static_cast<double>(j) + a) / q, t_max, prec);
  }
}

Complex LerchLine::operator()(double t) const {
  if (twist_.q == 1) return parts_.front()(t);
  const double q = static_cast<double>(twist_.q);
  CompensatedComplexSum acc;
  for (long j = 0; j < twist_.q; ++j) {
    const long numerator = (j * twist_.p) % twist_.q;
    acc.add(unit_phase(static_cast<double>(numerator) / q) *
            parts_[static_cast<std::size_t>(j)](t));
  }
  return std::exp(-Complex(sigma_, t) * std::log(q)) * acc.value();
}

}  // namespace mvzeta::zeta
