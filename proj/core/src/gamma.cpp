// log Gamma, Gamma and digamma from the Stirling series, using the cached
// Bernoulli table; reflection for Re z < 1/2.
#include "mvzeta/combinatorics.hpp"
#include "mvzeta/errors.hpp"
#include "mvzeta/zetacore.hpp"

#include <array>
#include <cmath>
#include <string>

namespace mvzeta::zeta {

namespace {

constexpr int kStirlingTerms = 12;
constexpr double kShiftTarget = 15.0;

// B_{2k} / (2k (2k-1)) for log Gamma and B_{2k} / (2k) for digamma.
struct SeriesCoefficients {
  std::array<double, kStirlingTerms + 1> log_gamma{};
  std::array<double, kStirlingTerms + 1> digamma{};
  SeriesCoefficients() {
    const auto& b = comb::bernoulli_table();
    for (int k = 1; k <= kStirlingTerms; ++k) {
      const double b2k = b.value(2 * k);
      log_gamma[static_cast<std::size_t>(k)] = b2k / (2.0 * k * (2.0 * k - 1.0));
      digamma[static_cast<std::size_t>(k)] = b2k / (2.0 * k);
    }
  }
};

const SeriesCoefficients& coefficients() {
  static const SeriesCoefficients c;
  return c;
}

// log sin(pi z) up to a multiple of 2 pi i, stable for large |Im z|.
Complex log_sin_pi(Complex z) {
  if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
  const Complex i(0.0, 1.0);
  const Complex e = std::exp(kTwoPi * i * z);  // |e| <= 1
  return -i * kPi * z + std::log(e - 1.0) - std::log(Complex(0.0, 2.0));
}

Complex stirling_log_gamma(Complex w) {
  const auto& c = coefficients().log_gamma;
  Complex series = 0.0;
  const Complex inv = 1.0 / w;
  const Complex inv2 = inv * inv;
  Complex power = inv;
  for (int k = 1; k <= kStirlingTerms; ++k) {
    series += c[static_cast<std::size_t>(k)] * power;
    power *= inv2;
  }
  return (w - 0.5) * std::log(w) - w + 0.5 * std::log(kTwoPi) + series;
}

}  // namespace

Complex log_gamma(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("log_gamma: non-finite argument");
  }
  const double nearest = std::round(z.real());
  if (nearest <= 0.0) {
    const double dist = std::abs(z - Complex(nearest, 0.0));
    if (dist < 1e-14 * std::max(1.0, std::abs(nearest))) {
      throw PoleError("Gamma pole at " + std::to_string(nearest), nearest, dist);
    }
  }
  if (z.real() < 0.5) {
    return std::log(kPi) - log_sin_pi(z) - log_gamma(1.0 - z);
  }
  int shift = 0;
  if (z.real() < kShiftTarget) shift = static_cast<int>(std::ceil(kShiftTarget - z.real()));
  Complex correction = 0.0;
  for (int k = 0; k < shift; ++k) correction += std::log(z + static_cast<double>(k));
  return stirling_log_gamma(z + static_cast<double>(shift)) - correction;
}

Complex gamma(Complex z) { return std::exp(log_gamma(z)); }

double digamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("digamma: need x > 0");
  double shift_sum = 0.0;
  while (x < kShiftTarget) {
    shift_sum += 1.0 / x;
    x += 1.0;
  }
  const auto& c = coefficients().digamma;
  const double inv2 = 1.0 / (x * x);
  double power = inv2;
  double series = 0.0;
  for (int k = 1; k <= kStirlingTerms; ++k) {
    series += c[static_cast<std::size_t>(k)] * power;
    power *= inv2;
  }
  return std::log(x) - 0.5 / x - series - shift_sum;
}

double complex_gamma_mod(LinePoint s) {
  s.validate();
  return std::exp(log_gamma(s.s()).real());
}

double stirling_envelope(LinePoint s) {
  s.validate();
  if (!(s.t > 0.0)) throw DomainError("stirling_envelope: need t > 0");
  return std::sqrt(kTwoPi) * std::pow(s.t, s.sigma - 0.5) * std::exp(-kPi * s.t / 2.0);
}

EulerConstants gen_euler_constant(HurwitzParams p, const Precision& prec) {
  p.validate();
  prec.validate();
  // gamma(a) = lim (sum_{m<=M} 1/(m+a) - log(M+a)) = -psi(a)
  return {-digamma(1.0), -digamma(p.a)};
}

}  // namespace mvzeta::zeta
