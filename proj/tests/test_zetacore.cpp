#include "mvzeta/errors.hpp"
#include "mvzeta/zetacore.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using mvzeta::Complex;
using namespace mvzeta::zeta;

namespace {

constexpr double kPi = std::numbers::pi;

// Reference values from a 40-digit mpmath session, frozen.
struct HurwitzCase {
  double sigma, t, a;
  Complex expected;
};

const HurwitzCase kHurwitzCases[] = {
    {0.5, 100.0, 0.3, {0.5587355946327408726, -1.096772511904413255}},
    {-1.5, 20.0, 0.7, {8.4475917334249508351, -2.5615171383970186695}},
    {2.0, 1000.0, 1.0, {0.95326218434642515392, -0.11072310746059981429}},
    {0.25, 3.0, 2.5, {-0.43952476839974458586, 0.40599381383516397577}},
    {1.5, 0.5, 1.0, {1.6136857738477234832, -0.96609938319275598256}},
};

double rel_err(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

// Plain sum to M with a three-term Euler-Maclaurin tail at M + a.
Complex brute_hurwitz(Complex s, double a, int M) {
  Complex sum = 0.0;
  for (int m = M - 1; m >= 0; --m) sum += std::pow(m + a, -s);
  const double b = M + a;
  sum += std::pow(b, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(b, -s) + s * std::pow(b, -s - 1.0) / 12.0;
  return sum;
}

}  // namespace

TEST(Hurwitz, FrozenReferenceValues) {
  for (const auto& c : kHurwitzCases) {
    const Complex got = hurwitz_zeta({c.sigma, c.t}, {c.a});
    EXPECT_LT(rel_err(got, c.expected), 1e-11) << "s=" << c.sigma << "+" << c.t << "i a=" << c.a;
  }
}

TEST(Hurwitz, AgreesWithBruteForceSum) {
  for (double a : {0.2, 1.0, 3.7}) {
    const Complex s{3.0, 5.0};
    EXPECT_LT(rel_err(hurwitz_zeta({3.0, 5.0}, {a}), brute_hurwitz(s, a, 20000)), 1e-12);
  }
}

TEST(Hurwitz, ClosedForms) {
  EXPECT_NEAR(riemann_zeta(2.0), kPi * kPi / 6.0, 1e-14);
  EXPECT_NEAR(riemann_zeta(4.0), std::pow(kPi, 4) / 90.0, 1e-14);
  EXPECT_NEAR(riemann_zeta(3.0), 1.2020569031595942854, 1e-14);
  for (double a : {0.1, 0.5, 1.0 / 3.0, 2.0}) {
    EXPECT_NEAR(hurwitz_zeta_real(0.0, a), 0.5 - a, 1e-12);
    // zeta_H(-n, a) = -B_{n+1}(a) / (n + 1)
    const double b2 = a * a - a + 1.0 / 6.0;
    const double b3 = a * a * a - 1.5 * a * a + 0.5 * a;
    EXPECT_NEAR(hurwitz_zeta_real(-1.0, a), -b2 / 2.0, 1e-11);
    EXPECT_NEAR(hurwitz_zeta_real(-2.0, a), -b3 / 3.0, 1e-11);
  }
  EXPECT_NEAR(hurwitz_zeta_real(2.0, 0.5), kPi * kPi / 2.0, 1e-13);
}

TEST(Hurwitz, FirstRiemannZero) {
  EXPECT_LT(std::abs(riemann_zeta(LinePoint{0.5, 14.134725141734693790})), 1e-10);
}

TEST(Hurwitz, ShiftRecurrence) {
  const LinePoint s{0.7, 42.0};
  const double a = 0.35;
  const Complex lhs = hurwitz_zeta(s, {a});
  const Complex rhs = hurwitz_zeta(s, {a + 1.0}) + std::pow(a, -s.s());
  EXPECT_LT(rel_err(lhs, rhs), 1e-12);
}

TEST(Hurwitz, ErrorEstimateIsSmall) {
  const auto e = hurwitz_zeta_eval({0.5, 300.0}, {1.0});
  EXPECT_GT(e.error_estimate, 0.0);
  EXPECT_LT(e.error_estimate, 1e-12 * std::max(1.0, std::abs(e.value)));
}

TEST(Hurwitz, DomainChecks) {
  EXPECT_THROW(hurwitz_zeta({1.0, 0.0}, {1.0}), mvzeta::PoleError);
  EXPECT_THROW(hurwitz_zeta({2.0, 0.0}, {0.0}), mvzeta::DomainError);
  EXPECT_THROW(hurwitz_zeta({std::nan(""), 0.0}, {1.0}), mvzeta::DomainError);
  Precision bad;
  bad.rel_tol = 0.0;
  EXPECT_THROW(hurwitz_zeta({2.0, 0.0}, {1.0}, bad), mvzeta::DomainError);
}

TEST(HurwitzLine, MatchesPointwise) {
  const HurwitzLine line(0.75, 0.5, 500.0);
  for (double t : {1.0, 17.3, 250.0, 500.0}) {
    EXPECT_LT(rel_err(line(t), hurwitz_zeta({0.75, t}, {0.5})), 1e-12);
  }
}

TEST(FiniteApprox, WithinBound) {
  for (double t : {10.0, 50.0}) {
    const LinePoint s{0.5, t};
    const double x = t / kPi + 1.0;
    const auto approx = hurwitz_finite_approx(s, {1.0}, x);
    EXPECT_LE(std::abs(approx.value - hurwitz_zeta(s, {1.0})), approx.error_bound);
  }
}

TEST(Lerch, FrozenReferenceValues) {
  struct Case {
    double sigma, t, a, lambda;
    Complex expected;
  };
  const Case cases[] = {
      {0.75, 30.0, 0.4, 1.0 / 3.0, {-1.1026589257152219517, 1.5374772511228273228}},
      {1.5, 10.0, 1.0, 1.0 / std::sqrt(2.0), {0.70964638067746137831, -0.39325173859690552399}},
      {2.0, 3.0, 0.5, 0.75, {-2.2590614307421277976, 3.3663343444795823092}},
  };
  for (const auto& c : cases) {
    const Complex got = lerch_zeta({c.sigma, c.t}, LerchParams::from_real(c.a, c.lambda));
    EXPECT_LT(rel_err(got, c.expected), 1e-10) << "lambda=" << c.lambda;
  }
}

TEST(Lerch, AlternatingSeriesIsEta) {
  // lambda = 1/2, a = 1: sum (-1)^m (m+1)^{-s} = (1 - 2^{1-s}) zeta(s)
  for (double t : {0.0, 7.0, 60.0}) {
    const LinePoint s{0.6, t};
    const Complex eta = (1.0 - std::pow(2.0, 1.0 - s.s())) * riemann_zeta(s);
    EXPECT_LT(rel_err(lerch_zeta(s, LerchParams::with_rational(1.0, 1, 2)), eta), 1e-11);
  }
}

TEST(Lerch, LambdaOneIsHurwitz) {
  const LinePoint s{0.3, 12.0};
  EXPECT_LT(rel_err(lerch_zeta(s, LerchParams::with_rational(0.7, 1, 1)), hurwitz_zeta(s, {0.7})),
            1e-13);
}

TEST(Lerch, RationalizeAndParams) {
  const auto r = rationalize(0.75);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->p, 3);
  EXPECT_EQ(r->q, 4);
  EXPECT_FALSE(rationalize(1.0 / std::sqrt(2.0)).has_value());
  const auto tw = RationalTwist::make(4, 6);
  EXPECT_EQ(tw.p, 2);
  EXPECT_EQ(tw.q, 3);
  EXPECT_THROW(RationalTwist::make(3, 2), mvzeta::DomainError);
  EXPECT_TRUE(LerchParams::from_real(1.0, 0.5).rational.has_value());
  EXPECT_FALSE(LerchParams::from_real(1.0, 0.3183098861837907).rational.has_value());
}

TEST(Lerch, GeneralTwistNeedsConvergentSeries) {
  EXPECT_THROW(lerch_zeta({0.5, 1.0}, LerchParams::with_general(1.0, 1.0 / std::sqrt(2.0))),
               mvzeta::UnsupportedRegionError);
}

TEST(Lerch, LineMatchesPointwise) {
  const LerchLine line(0.5, 0.5, RationalTwist::make(1, 3), 200.0);
  for (double t : {2.0, 99.5, 200.0}) {
    EXPECT_LT(rel_err(line(t), lerch_zeta({0.5, t}, LerchParams::with_rational(0.5, 1, 3))), 1e-11);
  }
}

TEST(FunctionalEquation, ResidualSmall) {
  for (double a : {1.0 / 3.0, 0.5}) {
    for (double lambda : {1.0, 0.5, 0.25}) {
      for (const LinePoint s : {LinePoint{2.0, 3.0}, LinePoint{3.0, 0.0}, LinePoint{4.0, -1.0}}) {
        EXPECT_LE(functional_equation_residual(s, LerchParams::from_real(a, lambda)), 1e-8)
            << "a=" << a << " lambda=" << lambda << " s=" << s.sigma << "+" << s.t << "i";
      }
    }
  }
}

TEST(Gamma, FrozenLogGamma) {
  struct Case {
    Complex z, expected;
  };
  const Case cases[] = {
      {{3.5, 0.0}, {1.2009736023470742248, 0.0}},
      {{0.5, 10.0}, {-14.789024734744293451, 13.030020034911089851}},
      {{-2.5, 1.0}, {-2.3441906524655925559, -8.3041279866579258844}},
      {{1e-3, 50.0}, {-79.572977253014069529, 144.81566620544588557}},
  };
  for (const auto& c : cases) {
    const Complex got = log_gamma(c.z);
    EXPECT_NEAR(got.real(), c.expected.real(), 1e-12 * std::max(1.0, std::abs(c.expected.real())));
    // branches may differ by 2 pi k in the imaginary part
    const double phase = std::remainder(got.imag() - c.expected.imag(), 2.0 * kPi);
    EXPECT_NEAR(phase, 0.0, 1e-10);
  }
  EXPECT_THROW(log_gamma({-2.0, 0.0}), mvzeta::PoleError);
}

TEST(Gamma, ModulusOnCriticalLine) {
  // |Gamma(1/2 + it)|^2 = pi / cosh(pi t)
  for (double t : {0.5, 3.0, 20.0}) {
    EXPECT_NEAR(complex_gamma_mod({0.5, t}) / std::sqrt(kPi / std::cosh(kPi * t)), 1.0, 1e-10);
  }
  EXPECT_NEAR(complex_gamma_mod({0.5, 200.0}) / stirling_envelope({0.5, 200.0}), 1.0, 1e-3);
}

TEST(Gamma, DigammaAndEulerConstants) {
  EXPECT_NEAR(digamma(0.5), -1.9635100260214234794, 1e-13);
  EXPECT_NEAR(digamma(1.0), -kEulerGamma, 1e-14);
  const auto g = gen_euler_constant({0.5});
  EXPECT_NEAR(g.gamma, kEulerGamma, 1e-14);
  EXPECT_NEAR(g.gamma_a, kEulerGamma + 2.0 * std::log(2.0), 1e-13);
}
