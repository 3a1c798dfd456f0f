#include "mvzeta/verify.hpp"

#include "mvzeta/combinatorics.hpp"
#include "mvzeta/errors.hpp"
#include "mvzeta/output.hpp"
#include "mvzeta/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace mvzeta::verify {

namespace {

using io::format_double;

// Re-raises a library error with the grid location appended.
template <typename F>
auto located(const std::string& where, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const PoleError& e) {
    throw PoleError(std::string(e.what()) + " at " + where, e.pole(), e.distance());
  } catch (const TruncationValidityError& e) {
    throw TruncationValidityError(std::string(e.what()) + " at " + where);
  } catch (const UnsupportedRegionError& e) {
    throw UnsupportedRegionError(std::string(e.what()) + " at " + where);
  } catch (const DomainError& e) {
    throw DomainError(std::string(e.what()) + " at " + where);
  } catch (const AccuracyError& e) {
    throw AccuracyError(std::string(e.what()) + " at " + where, e.achieved());
  } catch (const ResourceError& e) {
    throw ResourceError(std::string(e.what()) + " at " + where);
  }
}

std::string join(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += '|';
    out += format_double(xs[i]);
  }
  return out;
}

std::vector<double> t_points(double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi >= lo)) throw DomainError("bad t range");
  std::vector<double> out;
  for (std::size_t k = 0;; ++k) {
    const double t = lo + static_cast<double>(k) * step;
    if (t > hi * (1.0 + 1e-12)) break;
    out.push_back(t);
  }
  return out;
}

template <typename Line>
void sweep_line(VerdictRecord& rec, const Line& line, int r, double sigma,
                const std::vector<double>& ts, int threads) {
  std::vector<double> mod(ts.size());
  parallel_for(ts.size(), threads, [&](std::size_t i) {
    mod[i] = located("sigma=" + format_double(sigma) + ", t=" + format_double(ts[i]),
                     [&] { return std::abs(line(ts[i])); });
  });
  double sup = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double env = envelope(r, sigma, ts[i]);
    const double ratio = mod[i] / env;
    sup = std::max(sup, ratio);
    rec.sweep.rows.push_back({sigma, ts[i], mod[i], env, ratio});
  }
  rec.evaluated += ts.size();
  rec.observed_constant = std::max(rec.observed_constant, sup);
  rec.notes.push_back("sigma=" + format_double(sigma) + " sup=" + format_double(sup));
}

void start_envelope(VerdictRecord& rec) {
  rec.threshold = kEnvelopeThreshold;
  rec.sweep.columns = {"sigma", "t", "abs_value", "envelope", "ratio"};
}

}  // namespace

double envelope(int r, double sigma, double t) {
  if (sigma > r) return 1.0;
  if (sigma > r - 1.0) return std::pow(t, (r - sigma) / 2.0) * std::log(t);
  return std::pow(t, r - sigma - 0.5) * std::log(t);
}

VerdictRecord envelope_hurwitz(double a, const std::vector<double>& sigma_grid, double t_max,
                               double t_step, int threads) {
  zeta::HurwitzParams{a}.validate();
  if (!(t_max >= 2.0 && t_max <= 1e4)) throw DomainError("envelope_hurwitz needs 2 <= t_max <= 1e4");
  VerdictRecord rec;
  rec.suite = "envelope_hurwitz";
  rec.grid = "a=" + format_double(a) + ";sigma=" + join(sigma_grid) + ";t=2:" +
             format_double(t_step) + ":" + format_double(t_max);
  start_envelope(rec);
  const auto ts = t_points(2.0, t_max, t_step);
  for (double sigma : sigma_grid) {
    const zeta::HurwitzLine line(sigma, a, t_max);
    sweep_line(rec, line, 1, sigma, ts, threads);
  }
  rec.pass = rec.observed_constant <= rec.threshold;
  return rec;
}

VerdictRecord envelope_multi(int r, double a, const MultiKind& kind,
                             const std::vector<double>& sigma_grid, double t_max, double t_step,
                             int threads) {
  zeta::HurwitzParams{a}.validate();
  if (!(t_max >= 2.0 && t_max <= 1e4)) throw DomainError("envelope_multi needs 2 <= t_max <= 1e4");
  const barnes::Weights w = kind.w ? *kind.w : barnes::Weights::ones(r);
  if (w.r() != r) throw DomainError("weights length differs from r");
  VerdictRecord rec;
  rec.suite = "envelope_multi";
  rec.grid = "r=" + std::to_string(r) + ";a=" + format_double(a) + ";w=" +
             (kind.w ? join(w.w) : std::string("ones")) + ";sigma=" + join(sigma_grid) +
             ";t=2:" + format_double(t_step) + ":" + format_double(t_max);
  start_envelope(rec);
  std::shared_ptr<const barnes::LatticeProfile> profile;
  if (kind.w) {
    for (double sigma : sigma_grid) {
      if (!(sigma > r - 1.0)) {
        throw DomainError("envelope_multi with general weights needs sigma > r - 1");
      }
    }
    if (!w.uniform()) {
      const double x = barnes::TruncationPolicy::proportional().x_for(t_max);
      profile = std::make_shared<const barnes::LatticeProfile>(
          barnes::build_lattice_profile(a, w, x));
    }
  }
  const auto ts = t_points(2.0, t_max, t_step);
  for (double sigma : sigma_grid) {
    const barnes::BarnesLine line(sigma, a, w, t_max, {}, profile);
    sweep_line(rec, line, r, sigma, ts, threads);
  }
  rec.pass = rec.observed_constant <= rec.threshold;
  return rec;
}

double mv_ratio(const std::vector<Complex>& coeffs, double a, double sigma) {
  const std::size_t n = coeffs.size();
  std::vector<Complex> b(n);
  std::vector<double> logs(n);
  CompensatedSum rhs;
  for (std::size_t i = 0; i < n; ++i) {
    const double m = static_cast<double>(i + 1);
    const double damp = std::pow(m + a, -sigma);
    b[i] = coeffs[i] * damp;
    logs[i] = std::log(m + a);
    rhs.add(m * std::norm(coeffs[i]) * damp * damp);
  }
  CompensatedComplexSum lhs;
  for (std::size_t i = 0; i < n; ++i) {
    CompensatedComplexSum row;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      row.add(std::conj(b[j]) / (logs[i] - logs[j]));
    }
    lhs.add(b[i] * row.value());
  }
  return std::abs(lhs.value()) / rhs.value();
}

std::vector<Complex> random_unit_coefficients(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<Complex> out(n);
  for (auto& c : out) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    c = std::polar(1.0, kTwoPi * u);
  }
  return out;
}

VerdictRecord mv_inequality(std::size_t N, double a, double sigma,
                            std::optional<std::uint64_t> seed) {
  if (N < 1 || N > 5000) throw DomainError("mv_inequality needs 1 <= N <= 5000");
  zeta::HurwitzParams{a}.validate();
  if (!std::isfinite(sigma)) throw DomainError("sigma must be finite");
  const auto coeffs = seed ? random_unit_coefficients(N, *seed) : std::vector<Complex>(N, 1.0);
  VerdictRecord rec;
  rec.suite = "mv_inequality";
  rec.grid = "N=" + std::to_string(N) + ";a=" + format_double(a) + ";sigma=" + format_double(sigma) +
             ";coeffs=" + (seed ? "random(" + std::to_string(*seed) + ")" : std::string("ones"));
  rec.seed = seed;
  rec.threshold = kMvThreshold;
  rec.observed_constant = mv_ratio(coeffs, a, sigma);
  rec.evaluated = 1;
  rec.sweep.columns = {"N", "a", "sigma", "seed", "ratio"};
  rec.sweep.rows.push_back({static_cast<double>(N), a, sigma,
                            seed ? static_cast<double>(*seed) : -1.0, rec.observed_constant});
  rec.pass = rec.observed_constant <= rec.threshold;
  return rec;
}

VerdictRecord comparability(int r, double a, const barnes::Weights& w, double sigma,
                            const std::vector<double>& t_grid, const std::vector<double>& T_grid,
                            int threads) {
  if (w.r() != r) throw DomainError("weights length differs from r");
  if (!(sigma > r - 1.0 && sigma < r)) throw DomainError("comparability needs r - 1 < sigma < r");
  if (t_grid.empty() || T_grid.empty()) throw DomainError("comparability needs t and T grids");
  std::vector<double> Ts = T_grid;
  std::sort(Ts.begin(), Ts.end());
  const double t_max = std::max(*std::max_element(t_grid.begin(), t_grid.end()), Ts.back());

  const barnes::BarnesLine num(sigma, a, w, t_max);
  const barnes::BarnesLine den(sigma, a, barnes::Weights::ones(r), t_max);

  VerdictRecord rec;
  rec.suite = "comparability";
  rec.grid = "r=" + std::to_string(r) + ";a=" + format_double(a) + ";w=" + join(w.w) +
             ";sigma=" + format_double(sigma) + ";t=" + format_double(t_grid.front()) + ".." +
             format_double(t_grid.back()) + "(" + std::to_string(t_grid.size()) + ");T=" + join(Ts);
  rec.threshold = kComparabilityThreshold;
  rec.sweep.columns = {"type", "t", "numerator", "denominator", "ratio", "excluded"};
  rec.notes.push_back(
      "type 0: pointwise |zeta_r(s,a,w)|/|zeta_r(s,a,1)|; type 1: ratio of mean squares");
  rec.notes.push_back(
      "pointwise ratios are unbounded near zeros of either side; points with "
      "|zeta_r(s,a,1)| < 1e-6 x local mean are excluded and counted");

  const std::size_t n = t_grid.size();
  std::vector<double> top(n), bottom(n);
  parallel_for(n, threads, [&](std::size_t i) {
    located("t=" + format_double(t_grid[i]), [&] {
      top[i] = std::abs(num(t_grid[i]));
      bottom[i] = std::abs(den(t_grid[i]));
      return 0;
    });
  });

  constexpr double kWindow = 5.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    CompensatedSum local;
    std::size_t count = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(t_grid[j] - t_grid[i]) <= kWindow) {
        local.add(bottom[j]);
        ++count;
      }
    }
    const double mean = local.value() / static_cast<double>(count);
    const bool excluded = bottom[i] < 1e-6 * mean;
    const double ratio = excluded ? 0.0 : top[i] / bottom[i];
    if (excluded) {
      ++rec.excluded;
    } else {
      worst = std::max({worst, ratio, 1.0 / ratio});
    }
    rec.sweep.rows.push_back({0.0, t_grid[i], top[i], bottom[i], ratio, excluded ? 1.0 : 0.0});
  }
  rec.evaluated = n;

  const double h = quad::auto_step(Ts.back(), a);
  const auto ms_num = quad::simpson_series([&](double t) { return std::norm(num(t)); }, Ts, h, threads);
  const auto ms_den = quad::simpson_series([&](double t) { return std::norm(den(t)); }, Ts, h, threads);
  for (std::size_t i = 0; i < Ts.size(); ++i) {
    const double ratio = ms_num[i].value / ms_den[i].value;
    worst = std::max({worst, ratio, 1.0 / ratio});
    rec.sweep.rows.push_back({1.0, Ts[i], ms_num[i].value, ms_den[i].value, ratio, 0.0});
  }
  rec.observed_constant = worst;
  const bool few_exclusions = rec.excluded * 100 < n;
  if (!few_exclusions) rec.notes.push_back("exclusions reach 1% of the grid");
  rec.pass = worst <= rec.threshold && few_exclusions;
  return rec;
}

std::vector<Complex> oscillatory_values(double sigma, double a, zeta::RationalTwist lambda,
                                        const std::vector<double>& T_grid, int threads) {
  if (!(sigma > 0.5 && sigma < 1.0)) throw DomainError("oscillatory_I needs 1/2 < sigma < 1");
  zeta::HurwitzParams{a}.validate();
  lambda = zeta::RationalTwist::make(lambda.p, lambda.q);
  if (T_grid.empty()) throw DomainError("oscillatory_I needs T values");
  std::vector<double> Ts = T_grid;
  std::sort(Ts.begin(), Ts.end());
  if (Ts.front() <= 1.0 || Ts.back() > 5000.0) throw DomainError("T values must lie in (1, 5000]");

  std::vector<double> breaks{1.0};
  for (std::size_t m = 0;; ++m) {
    const double jump = kTwoPi * (static_cast<double>(m) + a) * (static_cast<double>(m) + a);
    if (jump >= Ts.back()) break;
    if (jump > 1.0) breaks.push_back(jump);
  }
  breaks.insert(breaks.end(), Ts.begin(), Ts.end());
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  const auto k_of = [a](double t) {
    return static_cast<long>(std::floor(std::sqrt(t / kTwoPi) - a));
  };
  const long k_max = std::max(0L, k_of(Ts.back()) + 1);
  std::vector<double> amp(static_cast<std::size_t>(k_max + 1));
  std::vector<double> logs(amp.size());
  std::vector<Complex> twist(amp.size());
  for (std::size_t m = 0; m < amp.size(); ++m) {
    const double base = static_cast<double>(m) + a;
    amp[m] = std::pow(base, -sigma);
    logs[m] = std::log(base);
    const long turns = (static_cast<long>(m) * lambda.p) % lambda.q;
    twist[m] = std::polar(1.0, kTwoPi * static_cast<double>(turns) / static_cast<double>(lambda.q));
  }
  std::vector<long> seg_k(breaks.size() - 1);
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    seg_k[i] = std::min(k_max, k_of(0.5 * (breaks[i] + breaks[i + 1])));
  }
  const auto f = [&](double t, std::size_t seg) {
    CompensatedComplexSum sum;
    for (long m = 0; m <= seg_k[seg]; ++m) {
      const auto i = static_cast<std::size_t>(m);
      sum.add(twist[i] * std::polar(amp[i], -t * logs[i]));
    }
    return std::pow(t, sigma / 2.0 - 1.0) * sum.value();
  };
  const double h = quad::auto_step(Ts.back(), a);
  const auto est = quad::simpson_piecewise(f, breaks, Ts, h, threads);
  std::vector<Complex> out;
  for (const auto& e : est) out.push_back(e.value);
  return out;
}

VerdictRecord oscillatory_I(double sigma, double a, zeta::RationalTwist lambda,
                            const std::vector<double>& T_grid, int threads) {
  if (T_grid.size() < 3) throw DomainError("oscillatory_I needs at least 3 T values");
  std::vector<double> Ts = T_grid;
  std::sort(Ts.begin(), Ts.end());
  const auto values = oscillatory_values(sigma, a, lambda, Ts, threads);
  VerdictRecord rec;
  rec.suite = "oscillatory_I";
  rec.grid = "sigma=" + format_double(sigma) + ";a=" + format_double(a) + ";lambda=" +
             std::to_string(lambda.p) + "/" + std::to_string(lambda.q) + ";T=" + join(Ts);
  rec.threshold = kGrowthSlack;
  rec.sweep.columns = {"T", "re_I", "im_I", "abs_I", "product"};
  rec.notes.push_back("product = |I(T)| T^(1/2) log T; observed_constant = max growth factor "
                      "of the product between consecutive T");
  double max_product = 0.0;
  double worst_growth = 0.0;
  double prev = 0.0;
  for (std::size_t i = 0; i < Ts.size(); ++i) {
    const double product = std::abs(values[i]) * std::sqrt(Ts[i]) * std::log(Ts[i]);
    rec.sweep.rows.push_back({Ts[i], values[i].real(), values[i].imag(), std::abs(values[i]), product});
    if (i > 0) worst_growth = std::max(worst_growth, prev > 0.0 ? product / prev : INFINITY);
    max_product = std::max(max_product, product);
    prev = product;
  }
  rec.evaluated = Ts.size();
  rec.observed_constant = worst_growth;
  rec.notes.push_back("max product " + format_double(max_product));
  rec.pass = std::isfinite(worst_growth) && worst_growth <= rec.threshold;
  return rec;
}

VerdictRecord coefficient_identity(int r_max) {
  VerdictRecord rec;
  rec.suite = "coefficients";
  rec.grid = "r=1.." + std::to_string(r_max) + ";a=0.3|0.5|1;n=0..30";
  rec.threshold = kCoefficientThreshold;
  rec.sweep.columns = {"r", "a", "n", "polynomial", "binomial", "rel_err"};
  double worst = 0.0;
  for (int r = 1; r <= r_max; ++r) {
    for (double a : {0.3, 0.5, 1.0}) {
      const comb::CoefficientTable p = comb::reduction_coefficients(r, a);
      for (int n = 0; n <= 30; ++n) {
        const double lhs = p.polynomial(n + a);
        const auto rhs = static_cast<double>(comb::binomial(n + r - 1, r - 1));
        const double err = std::abs(lhs - rhs) / rhs;
        worst = std::max(worst, err);
        rec.sweep.rows.push_back({static_cast<double>(r), a, static_cast<double>(n), lhs, rhs, err});
        ++rec.evaluated;
      }
    }
  }
  rec.observed_constant = worst;
  rec.pass = worst <= rec.threshold;
  return rec;
}

VerdictRecord functional_equation_grid() {
  VerdictRecord rec;
  rec.suite = "funceq";
  rec.grid = "a=1/3|1/2;s=2+3i|2-3i|3|4+i|4-i;lambda=1|1/2|1/3|2/3|3/4";
  rec.threshold = kFunctionalEquationThreshold;
  rec.sweep.columns = {"a", "sigma", "t", "lambda", "residual"};
  const zeta::LinePoint points[] = {{2, 3}, {2, -3}, {3, 0}, {4, 1}, {4, -1}};
  const std::pair<long, long> twists[] = {{1, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 4}};
  double worst = 0.0;
  for (double a : {1.0 / 3.0, 0.5}) {
    for (const auto& s : points) {
      for (const auto& [p, q] : twists) {
        const auto params = zeta::LerchParams::with_rational(a, p, q);
        const double res = located(rec.grid, [&] { return zeta::functional_equation_residual(s, params); });
        worst = std::max(worst, res);
        rec.sweep.rows.push_back({a, s.sigma, s.t, params.lambda, res});
        ++rec.evaluated;
      }
    }
  }
  rec.observed_constant = worst;
  rec.pass = worst <= rec.threshold;
  return rec;
}

}  // namespace mvzeta::verify
