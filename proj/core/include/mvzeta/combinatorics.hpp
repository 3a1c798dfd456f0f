// Exact combinatorial tables and the coefficients p_{r,j}(a) that write the
// Hurwitz multiple zeta function as a combination of shifted Hurwitz zetas:
//
//   zeta_r(s, a, 1) = sum_{j=0}^{r-1} p_{r,j}(a) zeta_H(s - j, a).
//
// The coefficients are characterised by the polynomial identity
//
//   sum_j p_{r,j}(a) (n + a)^j = C(n + r - 1, r - 1)   for all n >= 0,
//
// i.e. they reproduce the number of lattice points m in N^r with |m| = n.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace mvzeta::comb {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr int kDefaultMaxN = 16;
inline constexpr int kDefaultMaxK = 32;
/// Signed Stirling numbers stay within int64 up to n = 20.
inline constexpr int kStirlingHardLimit = 20;

/// Signed Stirling numbers of the first kind S(n, k), 0 <= k <= n <= max_n,
/// built from S(n+1, k) = S(n, k-1) - n S(n, k).
class StirlingTable {
 public:
  explicit StirlingTable(int max_n = kDefaultMaxN);

  int max_n() const noexcept { return max_n_; }
  std::int64_t signed_value(int n, int k) const;
  std::int64_t unsigned_value(int n, int k) const;

 private:
  int max_n_;
  std::vector<std::int64_t> entries_;  // row-major, row n has n+1 entries
};

/// Bernoulli numbers B_0 .. B_{2 max_k} as exact rationals (B_1 = -1/2).
class BernoulliTable {
 public:
  explicit BernoulliTable(int max_k = kDefaultMaxK);

  int max_k() const noexcept { return max_k_; }
  int max_index() const noexcept { return 2 * max_k_; }
  const Rational& exact(int k) const;
  double value(int k) const;

 private:
  int max_k_;
  std::vector<Rational> exact_;
  std::vector<double> approx_;
};

/// Process-wide tables with the default sizes; built once on first use.
const StirlingTable& stirling_table();
const BernoulliTable& bernoulli_table();

/// Signed S(n, k) from the default table; DomainError outside 0 <= k <= n <= max_n.
std::int64_t stirling_first_kind(int n, int k);

/// Exact B_k from the default table; DomainError for k > 2 max_k.
Rational bernoulli(int k);

/// Exact binomial coefficient for small arguments (n <= 66 fits in uint64).
std::uint64_t binomial(int n, int k);

struct CoefficientTable {
  int r = 1;
  double a = 1.0;
  std::vector<double> coeffs;  // p_{r,0}(a) .. p_{r,r-1}(a)

  double operator[](int j) const { return coeffs.at(static_cast<std::size_t>(j)); }
  /// sum_j p_{r,j}(a) y^j
  double polynomial(double y) const;
};

inline constexpr int kMaxReductionOrder = kDefaultMaxN;

/// p_{r,j}(a) for 1 <= r <= kMaxReductionOrder and a > 0.
CoefficientTable reduction_coefficients(int r, double a);

}  // namespace mvzeta::comb
