#include "mvzeta/meanvalue.hpp"

#include "mvzeta/errors.hpp"

#include <algorithm>
#include <cmath>

namespace mvzeta::mv {

std::string to_string(Kind kind) {
  switch (kind) {
    case Kind::hurwitz: return "hurwitz";
    case Kind::lerch: return "lerch";
    case Kind::multi_hurwitz: return "multi";
    case Kind::barnes: return "barnes";
  }
  return "unknown";
}

Kind kind_from_string(const std::string& name) {
  if (name == "hurwitz") return Kind::hurwitz;
  if (name == "lerch") return Kind::lerch;
  if (name == "multi" || name == "multi_hurwitz") return Kind::multi_hurwitz;
  if (name == "barnes") return Kind::barnes;
  throw DomainError("unknown kind '" + name + "'");
}

StepRule StepRule::fixed(double h) {
  if (!(h > 0.0 && std::isfinite(h))) throw DomainError("fixed step must be positive");
  return StepRule{h};
}

double StepRule::step(double t_max, double a) const {
  return fixed_h ? *fixed_h : quad::auto_step(t_max, a);
}

double MeanSquareRequest::max_T() const {
  if (kind == Kind::barnes && w && !w->uniform()) return kMaxTLattice;
  return kMaxTSeries;
}

void MeanSquareRequest::validate() const {
  if (!std::isfinite(sigma)) throw DomainError("sigma must be finite");
  zeta::HurwitzParams{a}.validate();
  prec.validate();
  if (!(T >= 2.0 && std::isfinite(T))) throw DomainError("T must be at least 2");
  if (threads < 1) throw DomainError("threads must be positive");
  switch (kind) {
    case Kind::lerch:
      if (!lambda) throw DomainError("lerch mean square needs lambda");
      if (!(*lambda > 0.0 && *lambda <= 1.0)) throw DomainError("lambda must lie in (0, 1]");
      break;
    case Kind::multi_hurwitz:
      if (r < 1) throw DomainError("r must be at least 1");
      break;
    case Kind::barnes:
      if (!w) throw DomainError("barnes mean square needs weights");
      break;
    case Kind::hurwitz:
      break;
  }
  if (T > max_T()) {
    throw ResourceError("T = " + std::to_string(T) + " exceeds the limit " +
                        std::to_string(max_T()) + " for kind " + to_string(kind));
  }
}

std::function<double(double)> integrand(const MeanSquareRequest& req, double t_max) {
  switch (req.kind) {
    case Kind::hurwitz: {
      auto line = std::make_shared<const zeta::HurwitzLine>(req.sigma, req.a, t_max, req.prec);
      return [line](double t) { return std::norm((*line)(t)); };
    }
    case Kind::lerch: {
      const auto twist = zeta::rationalize(*req.lambda);
      if (!twist) {
        throw UnsupportedRegionError("mean square of the Lerch zeta function needs rational lambda");
      }
      auto line = std::make_shared<const zeta::LerchLine>(req.sigma, req.a, *twist, t_max, req.prec);
      return [line](double t) { return std::norm((*line)(t)); };
    }
    case Kind::multi_hurwitz: {
      auto line = std::make_shared<const barnes::BarnesLine>(
          req.sigma, req.a, barnes::Weights::ones(req.r), t_max, req.prec);
      return [line](double t) { return std::norm((*line)(t)); };
    }
    case Kind::barnes: {
      auto line = std::make_shared<const barnes::BarnesLine>(req.sigma, req.a, *req.w, t_max,
                                                             req.prec, req.profile);
      return [line](double t) { return std::norm((*line)(t)); };
    }
  }
  throw DomainError("unknown kind");
}

namespace {

MeanSquareResult to_result(double T, const quad::Estimate<double>& e) {
  MeanSquareResult out;
  out.T = T;
  out.value = e.value;
  out.step = e.step;
  out.richardson_err = e.richardson_err;
  out.samples = e.samples;
  out.accuracy_warning = e.richardson_err > 0.01 * std::abs(e.value);
  if (out.accuracy_warning) out.wall_notes = "richardson estimate above 1% of value";
  return out;
}

}  // namespace

std::vector<MeanSquareResult> mean_square_series(const MeanSquareRequest& req,
                                                 const std::vector<double>& t_grid) {
  if (t_grid.empty()) throw DomainError("empty T grid");
  std::vector<double> grid = t_grid;
  std::sort(grid.begin(), grid.end());
  MeanSquareRequest top = req;
  top.T = grid.back();
  top.validate();
  if (grid.front() < 2.0) throw DomainError("T must be at least 2");
  const double h = req.step_rule.step(top.T, req.a);
  const auto f = integrand(top, top.T);
  const auto estimates = quad::simpson_series(f, grid, h, req.threads);
  std::vector<MeanSquareResult> out;
  for (std::size_t i = 0; i < grid.size(); ++i) out.push_back(to_result(grid[i], estimates[i]));
  return out;
}

MeanSquareResult mean_square(const MeanSquareRequest& req) {
  return mean_square_series(req, {req.T}).front();
}

MeanSquareResult mean_square_of(const std::function<double(double)>& f, double T,
                                const StepRule& rule, double a, int threads) {
  if (!(T >= 1.0)) throw DomainError("T must be at least 1");
  const double grid[] = {T};
  const auto e = quad::simpson_series(f, grid, rule.step(T, a), threads);
  return to_result(T, e.front());
}

MixedMeanResult mixed_mean(int k, int l, double sigma, double a, double T, const StepRule& rule,
                           int threads) {
  if (!std::isfinite(sigma) || sigma <= 0.0 || sigma == std::floor(sigma)) {
    throw DomainError("mixed_mean needs r - 1 < sigma < r for an integer r >= 1");
  }
  const int r = static_cast<int>(std::floor(sigma)) + 1;
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("mixed_mean needs 0 < a <= 1");
  if (k < 0 || l < 0 || k > r - 1 || l > r - 1) throw DomainError("need 0 <= k, l <= r - 1");
  if (k == r - 1 && l == r - 1) throw DomainError("(k, l) = (r-1, r-1) is excluded");
  if (!(T >= 2.0 && T <= kMaxTSeries)) throw DomainError("T must lie in [2, 5000]");
  const zeta::HurwitzLine first(sigma - k, a, T);
  const zeta::HurwitzLine second(sigma - l, a, T);
  const auto f = [&](double t) { return first(t) * std::conj(second(t)); };
  const double grid[] = {T};
  const auto e = quad::simpson_series_complex(f, grid, rule.step(T, a), threads).front();
  return {e.value, e.step, e.richardson_err};
}

}  // namespace mvzeta::mv
