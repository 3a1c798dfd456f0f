#include "mvzeta/combinatorics.hpp"

#include "mvzeta/errors.hpp"

#include <cmath>
#include <string>

namespace mvzeta::comb {

namespace {

std::size_t row_offset(int n) {
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1) / 2;
}

}  // namespace

StirlingTable::StirlingTable(int max_n) : max_n_(max_n) {
  if (max_n < 1 || max_n > kStirlingHardLimit) {
    throw DomainError("StirlingTable: max_n must lie in [1, " +
                      std::to_string(kStirlingHardLimit) + "]");
  }
  entries_.assign(row_offset(max_n + 1), 0);
  entries_[0] = 1;
  for (int n = 0; n < max_n; ++n) {
    const std::size_t cur = row_offset(n);
    const std::size_t next = row_offset(n + 1);
    for (int k = 0; k <= n + 1; ++k) {
      const std::int64_t left = (k >= 1) ? entries_[cur + static_cast<std::size_t>(k - 1)] : 0;
      const std::int64_t same = (k <= n) ? entries_[cur + static_cast<std::size_t>(k)] : 0;
      entries_[next + static_cast<std::size_t>(k)] = left - static_cast<std::int64_t>(n) * same;
    }
  }
}

std::int64_t StirlingTable::signed_value(int n, int k) const {
  if (n < 0 || k < 0 || k > n || n > max_n_) {
    throw DomainError("stirling_first_kind: need 0 <= k <= n <= " + std::to_string(max_n_) +
                      ", got (" + std::to_string(n) + ", " + std::to_string(k) + ")");
  }
  return entries_[row_offset(n) + static_cast<std::size_t>(k)];
}

std::int64_t StirlingTable::unsigned_value(int n, int k) const {
  const std::int64_t v = signed_value(n, k);
  return v < 0 ? -v : v;
}

BernoulliTable::BernoulliTable(int max_k) : max_k_(max_k) {
  if (max_k < 1) throw DomainError("BernoulliTable: max_k must be positive");
  const int top = 2 * max_k;
  exact_.assign(static_cast<std::size_t>(top + 1), Rational(0));
  exact_[0] = 1;
  // sum_{j=0}^{n} C(n+1, j) B_j = 0  =>  B_n = -1/(n+1) sum_{j<n} C(n+1, j) B_j
  for (int n = 1; n <= top; ++n) {
    if (n >= 3 && n % 2 == 1) continue;  // odd Bernoulli numbers vanish past B_1
    Rational acc = 0;
    boost::multiprecision::cpp_int c = 1;  // C(n+1, 0)
    for (int j = 0; j < n; ++j) {
      acc += Rational(c) * exact_[static_cast<std::size_t>(j)];
      c = c * (n + 1 - j) / (j + 1);
    }
    exact_[static_cast<std::size_t>(n)] = -acc / (n + 1);
  }
  approx_.reserve(exact_.size());
  for (const auto& b : exact_) approx_.push_back(b.convert_to<double>());
}

const Rational& BernoulliTable::exact(int k) const {
  if (k < 0 || k > max_index()) {
    throw DomainError("bernoulli: index " + std::to_string(k) + " outside [0, " +
                      std::to_string(max_index()) + "]");
  }
  return exact_[static_cast<std::size_t>(k)];
}

double BernoulliTable::value(int k) const {
  (void)exact(k);
  return approx_[static_cast<std::size_t>(k)];
}

const StirlingTable& stirling_table() {
  static const StirlingTable table(kDefaultMaxN);
  return table;
}

const BernoulliTable& bernoulli_table() {
  static const BernoulliTable table(kDefaultMaxK);
  return table;
}

std::int64_t stirling_first_kind(int n, int k) { return stirling_table().signed_value(n, k); }

Rational bernoulli(int k) { return bernoulli_table().exact(k); }

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n || n > 66) {
    throw DomainError("binomial: arguments out of range");
  }
  if (k > n - k) k = n - k;
  __extension__ typedef unsigned __int128 Wide;
  Wide c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<Wide>(n - k + i) / static_cast<Wide>(i);
  return static_cast<std::uint64_t>(c);
}

double CoefficientTable::polynomial(double y) const {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * y + *it;
  return acc;
}

CoefficientTable reduction_coefficients(int r, double a) {
  if (r < 1 || r > kMaxReductionOrder) {
    throw DomainError("reduction_coefficients: r must lie in [1, " +
                      std::to_string(kMaxReductionOrder) + "]");
  }
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw DomainError("reduction_coefficients: a must be positive and finite");
  }
  // (n+1)(n+2)...(n+r-1) = sum_l |S(r, l+1)| n^l, and n = y - a with y = n + a.
  const auto& stirling = stirling_table();
  double factorial = 1.0;
  for (int i = 2; i < r; ++i) factorial *= i;

  CoefficientTable out;
  out.r = r;
  out.a = a;
  out.coeffs.assign(static_cast<std::size_t>(r), 0.0);
  for (int j = 0; j < r; ++j) {
    double acc = 0.0;
    for (int l = j; l < r; ++l) {
      const double s = static_cast<double>(stirling.unsigned_value(r, l + 1));
      acc += s * static_cast<double>(binomial(l, j)) * std::pow(-a, l - j);
    }
    out.coeffs[static_cast<std::size_t>(j)] = acc / factorial;
  }
  return out;
}

}  // namespace mvzeta::comb
