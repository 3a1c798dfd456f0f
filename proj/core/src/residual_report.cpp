#include "mvzeta/errors.hpp"
#include "mvzeta/meanvalue.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace mvzeta::mv {

namespace {

constexpr double kRatioSlack = 0.01;
constexpr double kExponentSlack = 0.15;

}  // namespace

ResidualReport residual_report(const std::vector<std::pair<double, MeanSquareResult>>& measured,
                               const Prediction& pred) {
  std::set<double> distinct;
  for (const auto& [T, res] : measured) {
    if (!(T > 1.0 && std::isfinite(T))) throw DomainError("residual_report needs T > 1");
    distinct.insert(T);
  }
  if (distinct.size() < 4) throw DomainError("residual_report needs at least 4 distinct T values");

  std::vector<std::pair<double, MeanSquareResult>> sorted = measured;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });

  ResidualReport rep;
  rep.branch = pred.branch;
  rep.allowed_exponent = pred.error_exponent + kExponentSlack;
  for (const auto& [T, res] : sorted) {
    ResidualPoint pt;
    pt.T = T;
    pt.measured = res.value;
    pt.predicted = pred.main(T);
    pt.ratio = pt.measured / pt.predicted;
    pt.residual = pt.measured - pt.predicted;
    rep.points.push_back(pt);
  }

  rep.monotone = true;
  for (std::size_t i = 1; i < rep.points.size(); ++i) {
    if (std::abs(rep.points[i].ratio - 1.0) >
        std::abs(rep.points[i - 1].ratio - 1.0) + kRatioSlack) {
      rep.monotone = false;
    }
  }

  // Least squares on the points whose residual is not lost in rounding.
  double n = 0.0, sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const ResidualPoint& pt : rep.points) {
    if (std::abs(pt.residual) <= 1e-12 * std::abs(pt.predicted)) continue;
    const double x = std::log(pt.T);
    const double y = std::log(std::abs(pt.residual)) - pred.error_log * std::log(std::log(pt.T));
    n += 1.0;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  if (n >= 2.0 && n * sxx - sx * sx > 0.0) {
    rep.fitted_exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    rep.fitted_constant = std::exp((sy - rep.fitted_exponent * sx) / n);
  } else {
    // Residuals vanish to rounding: nothing left to fit.
    rep.fitted_exponent = 0.0;
    rep.fitted_constant = 0.0;
  }
  rep.pass = rep.monotone && rep.fitted_exponent <= rep.allowed_exponent;
  return rep;
}

}  // namespace mvzeta::mv
