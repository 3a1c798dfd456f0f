// Composite Simpson quadrature over [1, T] on a fixed global grid.
//
// For one grid t_k = 1 + k h the largest n (a multiple of 4) with 1 + n h <= T
// is integrated with step h and with step 2h; the leftover [1 + n h, T] gets
// a 4-panel (resp. 2-panel) rule. The Richardson estimate is
// |I(h) - I(2h)| / 15. Node values are computed concurrently into fixed slots
// and summed in ascending t with compensated accumulation, so the result does
// not depend on the thread count.
#pragma once

#include "mvzeta/numeric.hpp"

#include <functional>
#include <span>
#include <vector>

namespace mvzeta::quad {

template <typename V>
struct Estimate {
  V value{};
  V coarse{};
  double richardson_err = 0.0;
  double step = 0.0;
  std::size_t samples = 0;
};

/// min(0.05, pi / (8 log(T + a + 2)))
double auto_step(double t_max, double a);

/// One estimate per entry of T_grid (ascending, every T >= 1), all from one
/// shared grid with step h.
std::vector<Estimate<double>> simpson_series(const std::function<double(double)>& f,
                                             std::span<const double> t_grid, double h,
                                             int threads = 1);
std::vector<Estimate<Complex>> simpson_series_complex(const std::function<Complex(double)>& f,
                                                      std::span<const double> t_grid, double h,
                                                      int threads = 1);

/// Integrand that is smooth on each segment [b_i, b_{i+1}] but may jump at the
/// breakpoints; f(t, i) must return the segment-i branch (one-sided limits at
/// the ends). Each segment gets 4 ceil(len / 4h) panels. t_grid values must
/// all be breakpoints; results are the cumulative integrals from b_0.
std::vector<Estimate<Complex>> simpson_piecewise(
    const std::function<Complex(double, std::size_t)>& f, std::span<const double> breakpoints,
    std::span<const double> t_grid, double h, int threads = 1);

}  // namespace mvzeta::quad
