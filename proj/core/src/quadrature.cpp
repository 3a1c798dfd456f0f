#include "mvzeta/quadrature.hpp"

#include "mvzeta/errors.hpp"

#include <algorithm>
#include <cmath>

namespace mvzeta::quad {

namespace {

template <typename V>
struct Accumulator;

template <>
struct Accumulator<double> {
  CompensatedSum sum;
  void add(double x) { sum.add(x); }
  double value() const { return sum.value(); }
};

template <>
struct Accumulator<Complex> {
  CompensatedComplexSum sum;
  void add(Complex x) { sum.add(x); }
  Complex value() const { return sum.value(); }
};

double simpson_weight(std::size_t k, std::size_t n) {
  if (k == 0 || k == n) return 1.0;
  return (k % 2 == 1) ? 4.0 : 2.0;
}

// Simpson sums (weights only, not scaled by the step) over nodes[0..n] with
// stride 1 and stride 2.
template <typename V>
std::pair<V, V> simpson_pair(const V* nodes, std::size_t n) {
  Accumulator<V> fine;
  Accumulator<V> coarse;
  for (std::size_t k = 0; k <= n; ++k) fine.add(simpson_weight(k, n) * nodes[k]);
  for (std::size_t k = 0; k <= n / 2; ++k) coarse.add(simpson_weight(k, n / 2) * nodes[2 * k]);
  return {fine.value(), coarse.value()};
}

void check_grid(std::span<const double> t_grid, double h) {
  if (!(h > 0.0 && std::isfinite(h))) throw DomainError("quadrature step must be positive");
  if (t_grid.empty()) throw DomainError("quadrature needs at least one upper limit");
  double prev = 1.0;
  for (double t : t_grid) {
    if (!(std::isfinite(t) && t >= prev)) {
      throw DomainError("upper limits must be finite, >= 1 and ascending");
    }
    prev = t;
  }
}

std::size_t main_panels(double t, double h) {
  auto n = static_cast<std::size_t>(std::floor((t - 1.0) / h));
  n -= n % 4;
  while (n >= 4 && 1.0 + static_cast<double>(n) * h > t) n -= 4;
  return n;
}

template <typename V>
std::vector<Estimate<V>> series_impl(const std::function<V(double)>& f,
                                     std::span<const double> t_grid, double h, int threads) {
  check_grid(t_grid, h);
  const std::size_t n_max = main_panels(t_grid.back(), h);

  // Slots: main grid nodes 0..n_max, then 4 leftover nodes per upper limit.
  std::vector<double> where(n_max + 1 + 4 * t_grid.size());
  for (std::size_t k = 0; k <= n_max; ++k) where[k] = 1.0 + static_cast<double>(k) * h;
  std::vector<std::size_t> n_of(t_grid.size());
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    n_of[i] = main_panels(t_grid[i], h);
    const double start = 1.0 + static_cast<double>(n_of[i]) * h;
    const double len = t_grid[i] - start;
    for (std::size_t j = 1; j <= 4; ++j) {
      where[n_max + 1 + 4 * i + (j - 1)] =
          j == 4 ? t_grid[i] : start + static_cast<double>(j) * len / 4.0;
    }
  }
  std::vector<V> values(where.size());
  parallel_for(where.size(), threads, [&](std::size_t k) { values[k] = f(where[k]); });

  std::vector<Estimate<V>> out;
  out.reserve(t_grid.size());
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    const std::size_t n = n_of[i];
    V fine{};
    V coarse{};
    if (n > 0) {
      const auto [pf, pc] = simpson_pair(values.data(), n);
      fine = pf * (h / 3.0);
      coarse = pc * (2.0 * h / 3.0);
    }
    const double start = 1.0 + static_cast<double>(n) * h;
    const double len = t_grid[i] - start;
    if (len > 0.0) {
      const V left[5] = {values[n], values[n_max + 1 + 4 * i], values[n_max + 2 + 4 * i],
                         values[n_max + 3 + 4 * i], values[n_max + 4 + 4 * i]};
      const auto [lf, lc] = simpson_pair(left, 4);
      fine += lf * (len / 12.0);
      coarse += lc * (len / 6.0);
    }
    Estimate<V> e;
    e.value = fine;
    e.coarse = coarse;
    e.richardson_err = std::abs(fine - coarse) / 15.0;
    e.step = h;
    e.samples = n + 1 + (len > 0.0 ? 4 : 0);
    out.push_back(e);
  }
  return out;
}

}  // namespace

double auto_step(double t_max, double a) {
  return std::min(0.05, kPi / (8.0 * std::log(t_max + a + 2.0)));
}

std::vector<Estimate<double>> simpson_series(const std::function<double(double)>& f,
                                             std::span<const double> t_grid, double h,
                                             int threads) {
  return series_impl<double>(f, t_grid, h, threads);
}

std::vector<Estimate<Complex>> simpson_series_complex(const std::function<Complex(double)>& f,
                                                      std::span<const double> t_grid, double h,
                                                      int threads) {
  return series_impl<Complex>(f, t_grid, h, threads);
}

std::vector<Estimate<Complex>> simpson_piecewise(
    const std::function<Complex(double, std::size_t)>& f, std::span<const double> breakpoints,
    std::span<const double> t_grid, double h, int threads) {
  if (breakpoints.size() < 2) throw DomainError("piecewise quadrature needs two breakpoints");
  if (!(h > 0.0)) throw DomainError("quadrature step must be positive");
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i] > breakpoints[i - 1])) {
      throw DomainError("breakpoints must be strictly ascending");
    }
  }
  const std::size_t segments = breakpoints.size() - 1;
  std::vector<std::size_t> panels(segments);
  std::vector<std::size_t> offset(segments + 1, 0);
  for (std::size_t i = 0; i < segments; ++i) {
    const double len = breakpoints[i + 1] - breakpoints[i];
    panels[i] = 4 * std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(len / (4.0 * h))));
    offset[i + 1] = offset[i] + panels[i] + 1;
  }
  std::vector<Complex> values(offset[segments]);
  parallel_for(segments, threads, [&](std::size_t i) {
    const double lo = breakpoints[i];
    const double step = (breakpoints[i + 1] - lo) / static_cast<double>(panels[i]);
    for (std::size_t k = 0; k <= panels[i]; ++k) {
      const double t = k == panels[i] ? breakpoints[i + 1] : lo + static_cast<double>(k) * step;
      values[offset[i] + k] = f(t, i);
    }
  });

  std::vector<Estimate<Complex>> out;
  CompensatedComplexSum fine;
  CompensatedComplexSum coarse;
  std::size_t samples = 0;
  std::size_t next = 0;
  for (double target : t_grid) {
    while (next < segments && breakpoints[next + 1] <= target) {
      const double step = (breakpoints[next + 1] - breakpoints[next]) / static_cast<double>(panels[next]);
      const auto [pf, pc] = simpson_pair(values.data() + offset[next], panels[next]);
      fine.add(pf * (step / 3.0));
      coarse.add(pc * (2.0 * step / 3.0));
      samples += panels[next] + 1;
      ++next;
    }
    if (next == 0 || breakpoints[next] != target) {
      throw DomainError("every upper limit must be one of the breakpoints");
    }
    Estimate<Complex> e;
    e.value = fine.value();
    e.coarse = coarse.value();
    e.richardson_err = std::abs(e.value - e.coarse) / 15.0;
    e.step = h;
    e.samples = samples;
    out.push_back(e);
  }
  return out;
}

}  // namespace mvzeta::quad
