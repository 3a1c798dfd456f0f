#include "mvzeta/barnes.hpp"

#include "mvzeta/combinatorics.hpp"
#include "mvzeta/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <string>

namespace mvzeta::barnes {

namespace {

double em_coefficient(int k) {
  static const std::vector<double> table = [] {
    const auto& b = comb::bernoulli_table();
    std::vector<double> c(static_cast<std::size_t>(b.max_k() + 1), 0.0);
    double factorial = 1.0;
    for (int j = 1; j <= b.max_k(); ++j) {
      factorial *= (2.0 * j - 1.0) * (2.0 * j);
      c[static_cast<std::size_t>(j)] = b.value(2 * j) / factorial;
    }
    return c;
  }();
  return table.at(static_cast<std::size_t>(k));
}

Complex power(double base, Complex exponent) {
  return std::pow(base, exponent.real()) * std::polar(1.0, exponent.imag() * std::log(base));
}

// Euler-Maclaurin in m_1 applied to f(m) = zeta_{r-1}(s, a + m w_1, w'):
//   sum_{m>=K} f(m) = zeta_{r-1}(s-1, b, w') / (w_1 (s-1)) + f(K)/2
//                   + sum_k B_{2k}/(2k)! (s)_{2k-1} w_1^{2k-1} zeta_{r-1}(s+2k-1, b, w')
// with b = a + K w_1.
Evaluation nested(Complex s, double a, std::span<const double> w, int tail_cut,
                  const Precision& prec) {
  if (w.size() == 1) {
    const Evaluation h = zeta::hurwitz_zeta_eval(LinePoint::from(s), {a / w[0]}, prec);
    const Complex scale = power(w[0], -s);
    return {scale * h.value, std::abs(scale) * h.error_estimate};
  }
  const double w1 = w[0];
  const auto rest = w.subspan(1);
  const std::size_t k_len = std::max<std::size_t>(
      static_cast<std::size_t>(std::max(tail_cut, 1)), zeta::detail::summation_length(s.imag(), prec));

  CompensatedComplexSum acc;
  double err = 0.0;
  auto add = [&](const Evaluation& e, Complex factor) {
    acc.add(factor * e.value);
    err += std::abs(factor) * e.error_estimate;
  };
  for (std::size_t m = 0; m < k_len; ++m) {
    add(nested(s, a + static_cast<double>(m) * w1, rest, tail_cut, prec), 1.0);
  }
  const double b = a + static_cast<double>(k_len) * w1;
  add(nested(s - 1.0, b, rest, tail_cut, prec), 1.0 / (w1 * (s - 1.0)));
  add(nested(s, b, rest, tail_cut, prec), 0.5);

  Complex rising = s;  // (s)_{2k-1}
  double w_pow = w1;   // w_1^{2k-1}
  const int depth = prec.em_depth;
  for (int k = 1; k <= depth; ++k) {
    add(nested(s + (2.0 * k - 1.0), b, rest, tail_cut, prec), em_coefficient(k) * rising * w_pow);
    rising *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
    w_pow *= w1 * w1;
  }
  const Evaluation omitted = nested(s + (2.0 * depth + 1.0), b, rest, tail_cut, prec);
  err += std::abs(em_coefficient(depth + 1) * rising * w_pow * omitted.value);
  return {acc.value(), err};
}

}  // namespace

Weights Weights::make(std::vector<double> w) {
  if (w.empty()) throw DomainError("weights must be non-empty");
  for (double v : w) {
    if (!(std::isfinite(v) && v > 0.0)) throw DomainError("weights must be finite and positive");
  }
  Weights out;
  out.w_min = *std::min_element(w.begin(), w.end());
  out.w_max = *std::max_element(w.begin(), w.end());
  out.w = std::move(w);
  return out;
}

Weights Weights::ones(int r) {
  if (r < 1) throw DomainError("r must be at least 1");
  return make(std::vector<double>(static_cast<std::size_t>(r), 1.0));
}

double Weights::product() const noexcept {
  return std::accumulate(w.begin(), w.end(), 1.0, std::multiplies<>());
}

bool Weights::uniform() const noexcept { return w_min == w_max; }

void TruncationPolicy::validate() const {
  if (!(C > 1.0 && std::isfinite(C))) throw DomainError("truncation safety factor C must exceed 1");
  if (fixed_x && !(*fixed_x >= 1.0 && std::isfinite(*fixed_x))) {
    throw DomainError("truncation length x must be at least 1");
  }
}

TruncationPolicy TruncationPolicy::fixed(double x, double C) {
  TruncationPolicy p{C, x};
  p.validate();
  return p;
}

TruncationPolicy TruncationPolicy::proportional(double C) {
  TruncationPolicy p{C, std::nullopt};
  p.validate();
  return p;
}

double TruncationPolicy::x_for(double t) const {
  if (fixed_x) return *fixed_x;
  return std::max(1.0, std::ceil(C * std::abs(t) / kTwoPi));
}

bool TruncationPolicy::valid(double t, double x) const noexcept {
  return std::abs(t) <= kTwoPi * x / C * (1.0 + 1e-12);
}

namespace detail {

void check_poles(LinePoint s, int r) {
  for (int j = 1; j <= r; ++j) {
    const double dist = std::abs(s.s() - static_cast<double>(j));
    if (dist < zeta::kPoleGuard) {
      throw PoleError("s is within " + std::to_string(dist) + " of the pole s=" + std::to_string(j),
                      j, dist);
    }
  }
}

Evaluation barnes_em(LinePoint s, double a, const Weights& w, int tail_cut,
                     const Precision& prec) {
  s.validate();
  prec.validate();
  zeta::HurwitzParams{a}.validate();
  check_poles(s, w.r());
  return nested(s.s(), a, w.w, tail_cut, prec);
}

}  // namespace detail

Evaluation multi_hurwitz_eval(LinePoint s, double a, int r, const Precision& prec) {
  s.validate();
  detail::check_poles(s, r);
  const comb::CoefficientTable p = comb::reduction_coefficients(r, a);
  CompensatedComplexSum acc;
  double err = 0.0;
  for (int j = 0; j < r; ++j) {
    const Evaluation h = zeta::hurwitz_zeta_eval({s.sigma - j, s.t}, {a}, prec);
    acc.add(p[j] * h.value);
    err += std::abs(p[j]) * h.error_estimate;
  }
  return {acc.value(), err};
}

Complex multi_hurwitz(LinePoint s, double a, int r, const Precision& prec) {
  return multi_hurwitz_eval(s, a, r, prec).value;
}

Evaluation barnes_direct(LinePoint s, double a, const Weights& w, int tail_cut,
                         const Precision& prec) {
  s.validate();
  if (!(s.sigma > w.r() + 0.1)) {
    throw UnsupportedRegionError("barnes_direct needs sigma > r + 0.1 (got sigma=" +
                                 std::to_string(s.sigma) + ", r=" + std::to_string(w.r()) + ")");
  }
  if (tail_cut < 1) throw DomainError("tail_cut must be positive");
  const Evaluation e = detail::barnes_em(s, a, w, tail_cut, prec);
  const double tol = prec.rel_tol * std::abs(e.value);
  if (e.error_estimate > tol) {
    throw AccuracyError("barnes_direct: tail estimate above tolerance",
                        e.error_estimate / std::abs(e.value));
  }
  return e;
}

TruncatedLine::TruncatedLine(double sigma, std::shared_ptr<const LatticeProfile> profile,
                             double C)
    : sigma_(sigma), C_(C), profile_(std::move(profile)) {
  if (!profile_) throw DomainError("TruncatedLine needs a lattice profile");
  const int r = profile_->weights().r();
  if (!(sigma > r - 1.0)) {
    throw UnsupportedRegionError("truncated lattice formula needs sigma > r - 1");
  }
  TruncationPolicy{C, profile_->x()}.validate();
  const auto& v = profile_->values();
  const auto& c = profile_->counts();
  log_values_.resize(v.size());
  weighted_amplitude_.resize(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    log_values_[i] = std::log(v[i]);
    weighted_amplitude_[i] = static_cast<double>(c[i]) * std::pow(v[i], -sigma);
  }
  const auto& w = profile_->weights().w;
  const std::size_t subsets = std::size_t{1} << r;
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    double sum = 0.0;
    int size = 0;
    for (int e = 0; e < r; ++e) {
      if (mask & (std::size_t{1} << e)) {
        sum += w[static_cast<std::size_t>(e)];
        ++size;
      }
    }
    corner_.push_back(profile_->a() + profile_->x() * sum);
    corner_sign_.push_back(size % 2 == 0 ? 1.0 : -1.0);
  }
}

double TruncatedLine::remainder_scale() const noexcept {
  return std::pow(profile_->x(), profile_->weights().r() - 1.0 - sigma_);
}

Complex TruncatedLine::operator()(double t) const {
  const double x = profile_->x();
  if (!TruncationPolicy{C_, x}.valid(t, x)) {
    throw TruncationValidityError("|t| = " + std::to_string(std::abs(t)) +
                                  " exceeds 2 pi x / C = " + std::to_string(t_limit()));
  }
  const int r = profile_->weights().r();
  const LinePoint s{sigma_, t};
  detail::check_poles(s, r);

  CompensatedComplexSum sum;
  for (std::size_t i = 0; i < log_values_.size(); ++i) {
    const double phase = t * log_values_[i];
    sum.add({weighted_amplitude_[i] * std::cos(phase), -weighted_amplitude_[i] * std::sin(phase)});
  }
  Complex denom = profile_->weights().product();
  for (int j = 1; j <= r; ++j) denom *= s.s() - static_cast<double>(j);
  const Complex exponent = static_cast<double>(r) - s.s();
  CompensatedComplexSum corr;
  for (std::size_t e = 0; e < corner_.size(); ++e) {
    corr.add(corner_sign_[e] * power(corner_[e], exponent));
  }
  return sum.value() - corr.value() / denom;
}

TruncatedValue barnes_truncated(LinePoint s, double a, const Weights& w,
                                const TruncationPolicy& pol, const LatticeProfile* profile) {
  s.validate();
  pol.validate();
  zeta::HurwitzParams{a}.validate();
  if (!(s.sigma > w.r() - 1.0)) {
    throw UnsupportedRegionError("barnes_truncated needs sigma > r - 1");
  }
  const double x = pol.x_for(s.t);
  if (!pol.valid(s.t, x)) {
    throw TruncationValidityError("|t| <= 2 pi x / C violated for fixed x = " + std::to_string(x));
  }
  std::shared_ptr<const LatticeProfile> shared;
  if (profile) {
    if (!profile->matches(a, w, x)) {
      throw DomainError("lattice profile does not match (a, w, x) of the evaluation");
    }
    shared = std::shared_ptr<const LatticeProfile>(std::shared_ptr<void>(), profile);
  } else {
    shared = std::make_shared<const LatticeProfile>(build_lattice_profile(a, w, x));
  }
  const TruncatedLine line(s.sigma, shared, pol.C);
  return {line(s.t), line.remainder_scale(), x};
}

BarnesLine::BarnesLine(double sigma, double a, const Weights& w, double t_max,
                       const Precision& prec, std::shared_ptr<const LatticeProfile> profile)
    : sigma_(sigma), a_(a), w_(w), prec_(prec) {
  zeta::HurwitzParams{a}.validate();
  if (w.uniform()) {
    const double c = w.w_min;
    const comb::CoefficientTable p = comb::reduction_coefficients(w.r(), a / c);
    coeffs_ = p.coeffs;
    for (int j = 0; j < w.r(); ++j) shifted_.emplace_back(sigma - j, a / c, t_max, prec);
    return;
  }
  if (!profile) {
    const double x = TruncationPolicy::proportional().x_for(t_max);
    profile = std::make_shared<const LatticeProfile>(build_lattice_profile(a, w, x));
  } else if (!profile->matches(a, w, profile->x())) {
    throw DomainError("lattice profile does not match (a, w)");
  }
  truncated_.emplace(sigma, std::move(profile));
}

Complex BarnesLine::operator()(double t) const {
  if (truncated_) return (*truncated_)(t);
  detail::check_poles({sigma_, t}, w_.r());
  CompensatedComplexSum acc;
  for (std::size_t j = 0; j < shifted_.size(); ++j) acc.add(coeffs_[j] * shifted_[j](t));
  const double c = w_.w_min;
  if (c == 1.0) return acc.value();
  return power(c, -Complex(sigma_, t)) * acc.value();
}

}  // namespace mvzeta::barnes
