#include "mvzeta/errors.hpp"
#include "mvzeta/quadrature.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

using mvzeta::Complex;
namespace quad = mvzeta::quad;

TEST(Simpson, ExactForCubics) {
  const std::vector<double> Ts{2.0, 10.3, 50.0};
  const auto est = quad::simpson_series([](double t) { return t * t * t - 2.0 * t; }, Ts, 0.05);
  ASSERT_EQ(est.size(), Ts.size());
  for (std::size_t i = 0; i < Ts.size(); ++i) {
    const double T = Ts[i];
    const double exact = (std::pow(T, 4) - 1.0) / 4.0 - (T * T - 1.0);
    EXPECT_NEAR(est[i].value, exact, 1e-10 * exact);
    EXPECT_LT(est[i].richardson_err, 1e-9 * exact);
    EXPECT_DOUBLE_EQ(est[i].step, 0.05);
  }
}

TEST(Simpson, SmoothOscillatoryIntegrand) {
  const double T = 40.0;
  const auto est = quad::simpson_series([](double t) { return std::exp(-0.1 * t) * std::cos(3.0 * t); },
                                        std::vector<double>{T}, 0.01);
  // antiderivative of e^{-bt} cos(ct): e^{-bt} (c sin ct - b cos ct) / (b^2 + c^2)
  auto F = [](double t) {
    return std::exp(-0.1 * t) * (3.0 * std::sin(3.0 * t) - 0.1 * std::cos(3.0 * t)) / 9.01;
  };
  const double exact = F(T) - F(1.0);
  EXPECT_NEAR(est[0].value, exact, 1e-9);
  EXPECT_LE(std::abs(est[0].value - exact), 2.0 * est[0].richardson_err + 1e-14);
}

TEST(Simpson, ComplexIntegrand) {
  const double T = 25.0;
  const auto est = quad::simpson_series_complex([](double t) { return std::polar(1.0, t); },
                                                std::vector<double>{T}, 0.01);
  const Complex exact = (std::polar(1.0, T) - std::polar(1.0, 1.0)) / Complex{0.0, 1.0};
  EXPECT_LT(std::abs(est[0].value - exact), 1e-9);
}

TEST(Simpson, ThreadCountDoesNotChangeBits) {
  auto f = [](double t) { return std::sin(t) / t + std::log(t); };
  const std::vector<double> Ts{7.0, 333.3, 1000.0};
  const auto one = quad::simpson_series(f, Ts, 0.02, 1);
  const auto four = quad::simpson_series(f, Ts, 0.02, 4);
  for (std::size_t i = 0; i < Ts.size(); ++i) {
    EXPECT_EQ(one[i].value, four[i].value);
    EXPECT_EQ(one[i].richardson_err, four[i].richardson_err);
  }
}

TEST(Simpson, RejectsBadGrids) {
  auto f = [](double) { return 1.0; };
  EXPECT_THROW(quad::simpson_series(f, std::vector<double>{0.5}, 0.1), mvzeta::DomainError);
  EXPECT_THROW(quad::simpson_series(f, std::vector<double>{3.0, 2.0}, 0.1), mvzeta::DomainError);
  EXPECT_THROW(quad::simpson_series(f, std::vector<double>{3.0}, 0.0), mvzeta::DomainError);
}

TEST(Simpson, AutoStep) {
  EXPECT_DOUBLE_EQ(quad::auto_step(10.0, 1.0), 0.05);
  EXPECT_DOUBLE_EQ(quad::auto_step(5000.0, 1.0), std::acos(-1.0) / (8.0 * std::log(5003.0)));
}

TEST(Piecewise, StepFunctionIsExact) {
  const std::vector<double> bp{1.0, 2.0, 5.0, 9.0};
  const std::vector<double> Ts{2.0, 5.0, 9.0};
  const auto est = quad::simpson_piecewise(
      [](double t, std::size_t seg) { return Complex{static_cast<double>(seg + 1), t}; }, bp, Ts, 0.1);
  ASSERT_EQ(est.size(), 3u);
  EXPECT_NEAR(est[0].value.real(), 1.0, 1e-13);
  EXPECT_NEAR(est[1].value.real(), 7.0, 1e-13);
  EXPECT_NEAR(est[2].value.real(), 19.0, 1e-13);
  EXPECT_NEAR(est[2].value.imag(), (81.0 - 1.0) / 2.0, 1e-12);
}

TEST(Piecewise, GridMustBeBreakpoints) {
  const std::vector<double> bp{1.0, 2.0, 5.0};
  auto f = [](double, std::size_t) { return Complex{1.0, 0.0}; };
  EXPECT_THROW(quad::simpson_piecewise(f, bp, std::vector<double>{3.0}, 0.1), mvzeta::DomainError);
}
