// Copyright 2026 The axidir Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "axidir/special.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "axidir/errors.hpp"
#include "axidir/quadrature.hpp"
#include "fixtures/tables.hpp"

namespace axidir {
namespace {

constexpr double kPi = std::numbers::pi;

double rel_err(double got, double want) {
  return std::fabs(got - want) / std::fmax(1.0, std::fabs(want));
}

TEST(Dimension, RejectsBelowTwo) {
  EXPECT_THROW(Dimension(1.999), DomainError);
  EXPECT_THROW(Dimension(std::nan("")), DomainError);
  EXPECT_DOUBLE_EQ(Dimension(2.0).alpha(), 0.0);
  EXPECT_DOUBLE_EQ(Dimension(5.0).alpha(), 1.5);
}

TEST(SurfaceArea, KnownSpheres) {
  EXPECT_NEAR(surface_area(Dimension(2)), 2 * kPi, 1e-14);
  EXPECT_NEAR(surface_area(Dimension(3)), 4 * kPi, 1e-13);
  EXPECT_NEAR(surface_area(Dimension(4)), 2 * kPi * kPi, 1e-13);
  EXPECT_NEAR(lower_surface_area(Dimension(2)), 2.0, 1e-15);
  EXPECT_NEAR(lower_surface_area(Dimension(3)), 2 * kPi, 1e-14);
  // S^4 = 8 pi^2 / 3.
  EXPECT_NEAR(surface_area(Dimension(5)), 8 * kPi * kPi / 3, 1e-12);
}

TEST(EvalSequence, UnityAtOne) {
  for (double d : {2.0, 2.5, 3.0, 4.0, 5.0}) {
    const auto v = eval_sequence(1.0, 30, Dimension(d)).values;
    for (double p : v) EXPECT_NEAR(p, 1.0, 1e-12) << "D=" << d;
  }
}

TEST(EvalSequence, LegendreAtHalf) {
  EXPECT_NEAR(eval_poly(0.5, 2, Dimension(3)), -0.125, 1e-15);
}

TEST(EvalSequence, ChebyshevIsCosineOfMultipleAngle) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, kPi);
  for (int trial = 0; trial < 50; ++trial) {
    const double phi = u(rng);
    const auto v = eval_sequence(std::cos(phi), 25, Dimension(2)).values;
    for (int m = 0; m <= 25; ++m) EXPECT_NEAR(v[m], std::cos(m * phi), 1e-12);
  }
}

TEST(EvalSequence, LegendreMatchesBonnetRecurrence) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double x = u(rng);
    const auto v = eval_sequence(x, 20, Dimension(3)).values;
    double p0 = 1.0, p1 = x;
    EXPECT_NEAR(v[0], 1.0, 0.0);
    for (int n = 1; n < 20; ++n) {
      EXPECT_NEAR(v[n], p1, 1e-13);
      const double p2 = ((2 * n + 1) * x * p1 - n * p0) / (n + 1);
      p0 = p1;
      p1 = p2;
    }
  }
}

// D = 4: P_n = U_n / (n + 1) with U_n(cos t) = sin((n+1)t) / sin t.
TEST(EvalSequence, FourDimensionsIsScaledSecondKindChebyshev) {
  for (double t : {0.3, 1.1, 2.0, 2.9}) {
    const auto v = eval_sequence(std::cos(t), 15, Dimension(4)).values;
    for (int n = 0; n <= 15; ++n) {
      EXPECT_NEAR(v[n], std::sin((n + 1) * t) / std::sin(t) / (n + 1), 1e-13);
    }
  }
}

TEST(EvalSequence, ParityProperty) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (double d : {2.0, 2.5, 3.0, 4.0}) {
    const double x = u(rng);
    const auto pos = eval_sequence(x, 20, Dimension(d)).values;
    const auto neg = eval_sequence(-x, 20, Dimension(d)).values;
    for (int n = 0; n <= 20; ++n) EXPECT_NEAR(neg[n], (n % 2 ? -1 : 1) * pos[n], 1e-13);
  }
}

TEST(EvalSequence, ClampsTinyOvershootAndRejectsLarge) {
  EXPECT_NEAR(eval_poly(1.0 + 5e-13, 4, Dimension(3)), 1.0, 1e-12);
  EXPECT_THROW(eval_sequence(1.0 + 1e-9, 3, Dimension(3)), DomainError);
  EXPECT_THROW(eval_sequence(0.0, -1, Dimension(3)), DomainError);
}

void expect_rows(const std::vector<fixtures::RationalRow>& rows, double d) {
  for (size_t n = 0; n < rows.size(); ++n) {
    const CoeffList c = power_series_coeffs(static_cast<int>(n), Dimension(d));
    ASSERT_EQ(c.coeffs.size(), n + 1);
    for (size_t k = 0; k <= n; ++k) {
      const double want = rows[n].num[k] / rows[n].den;
      EXPECT_LE(rel_err(c.coeffs[k], want), 1e-12) << "n=" << n << " k=" << k;
    }
  }
}

TEST(PowerSeries, ChebyshevRows) { expect_rows(fixtures::chebyshev_rows(), 2.0); }

TEST(PowerSeries, LegendreRows) { expect_rows(fixtures::legendre_rows(), 3.0); }

TEST(PowerSeries, ParityAndSumProperties) {
  for (double d : {2.0, 2.5, 3.0, 4.0, 6.5}) {
    for (int n = 0; n <= 16; ++n) {
      const CoeffList c = power_series_coeffs(n, Dimension(d));
      long double sum = 0.0L, abs_sum = 0.0L;
      for (int k = 0; k <= n; ++k) {
        if ((n - k) % 2) EXPECT_EQ(c.coeffs[k], 0.0);
        sum += c.coeffs[k];
        abs_sum += std::fabs(c.coeffs[k]);
      }
      // Storing each coefficient rounds it by half an ulp; beyond degree 12
      // that alone exceeds 1e-12 relative to the sum.
      const double tol = n <= 12 ? 1e-12 : 1.2e-16 * static_cast<double>(abs_sum);
      EXPECT_NEAR(static_cast<double>(sum), 1.0, tol) << "D=" << d << " n=" << n;
      EXPECT_GT(c.coeffs[n], 0.0);
    }
  }
}

TEST(PowerSeries, EvaluationMatchesRecurrence) {
  const CoeffList c = power_series_coeffs(6, Dimension(4));
  double horner = 0.0;
  for (int k = 6; k >= 0; --k) horner = horner * 0.3 + c.coeffs[k];
  EXPECT_NEAR(horner, eval_poly(0.3, 6, Dimension(4)), 1e-14);
}

TEST(Beta, Values) {
  EXPECT_EQ(beta_coeff(1, Dimension(2)), 1.0);
  EXPECT_EQ(beta_coeff(1, Dimension(3.7)), 1.0);
  EXPECT_NEAR(beta_coeff(3, Dimension(3)), 0.6, 1e-15);
  EXPECT_NEAR(beta_coeff(2, Dimension(2)), 0.5, 1e-15);
  EXPECT_THROW(beta_coeff(0, Dimension(3)), DomainError);
}

// beta_n is the leading-coefficient ratio c_{n-1}^(n-1) / c_n^(n).
TEST(Beta, MatchesLeadingCoefficientRatio) {
  for (double d : {2.0, 2.5, 3.0, 4.0}) {
    for (int n = 1; n <= 12; ++n) {
      const double lead_prev = power_series_coeffs(n - 1, Dimension(d)).coeffs.back();
      const double lead = power_series_coeffs(n, Dimension(d)).coeffs.back();
      EXPECT_NEAR(beta_coeff(n, Dimension(d)), lead_prev / lead, 1e-13) << d << " " << n;
    }
  }
}

TEST(NormSquared, TwoAndThreeDimensions) {
  EXPECT_NEAR(norm_squared(0, Dimension(2)), kPi, 1e-14);
  for (int n = 1; n <= 20; ++n) EXPECT_NEAR(norm_squared(n, Dimension(2)), kPi / 2, 1e-14);
  for (int n = 0; n <= 20; ++n) {
    EXPECT_NEAR(norm_squared(n, Dimension(3)), 2.0 / (2 * n + 1), 1e-14);
  }
}

TEST(NormSquared, FourDimensionsClosedForm) {
  // int U_n^2 sqrt(1-x^2) dx = pi/2 and P_n = U_n/(n+1).
  for (int n = 0; n <= 20; ++n) {
    EXPECT_NEAR(norm_squared(n, Dimension(4)), kPi / (2.0 * (n + 1) * (n + 1)), 1e-14);
  }
}

TEST(NormSquared, RecurrenceAgreesWithGammaForm) {
  for (double d : {2.0, 2.1, 2.5, 3.0, 3.5, 4.0, 4.5, 5.0}) {
    for (int n = 0; n <= 30; ++n) {
      EXPECT_LE(rel_err(norm_squared_closed(n, Dimension(d)), norm_squared(n, Dimension(d))) /
                    norm_squared(n, Dimension(d)) * std::fmax(1.0, norm_squared(n, Dimension(d))),
                1e-12)
          << "D=" << d << " n=" << n;
    }
  }
}

TEST(NormSquared, MatchesQuadrature) {
  for (double d : {2.0, 2.5, 3.0, 4.0, 5.5}) {
    const Dimension dim(d);
    for (int n = 0; n <= 10; ++n) {
      const double q = integrate_axisym(
          [&](double x) {
            const double p = eval_poly(x, n, dim);
            return p * p;
          },
          dim, 2 * n);
      EXPECT_LE(std::fabs(q - norm_squared(n, dim)) / norm_squared(n, dim), 1e-12)
          << "D=" << d << " n=" << n;
    }
  }
}

TEST(Derivative, EndpointValues) {
  EXPECT_NEAR(derivative(1.0, 3, Dimension(3)), 6.0, 1e-13);
  for (double d : {2.0, 2.5, 3.0, 4.0}) {
    for (int n = 0; n <= 15; ++n) {
      const double want = n * (n + d - 2) / (d - 1);
      EXPECT_LE(rel_err(derivative(1.0, n, Dimension(d)), want), 1e-13);
      EXPECT_LE(rel_err(derivative(-1.0, n, Dimension(d)), (n % 2 ? 1 : -1) * want), 1e-13);
    }
  }
}

TEST(Derivative, LinearTerm) {
  for (double d : {2.0, 3.0, 7.0}) EXPECT_EQ(derivative(0.0, 1, Dimension(d)), 1.0);
}

TEST(Derivative, FiniteDifferenceOracle) {
  const Dimension dim(2);
  const double h = 1e-6;
  const double fd = (eval_poly(0.4 + h, 5, dim) - eval_poly(0.4 - h, 5, dim)) / (2 * h);
  EXPECT_NEAR(derivative(0.4, 5, dim), fd, 1e-6);
}

// 2 (n + alpha)(1 - x^2) P_n' = n (n + 2 alpha)(P_{n-1} - P_{n+1})
TEST(Derivative, SatisfiesLoweringIdentity) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-0.99, 0.99);
  for (double d : {2.0, 2.5, 3.0, 4.0}) {
    const Dimension dim(d);
    const double a = dim.alpha();
    for (int trial = 0; trial < 20; ++trial) {
      const double x = u(rng);
      const auto p = eval_sequence(x, 16, dim).values;
      for (int n = 1; n < 16; ++n) {
        const double lhs = 2 * (n + a) * (1 - x * x) * derivative(x, n, dim);
        const double rhs = n * (n + 2 * a) * (p[n - 1] - p[n + 1]);
        EXPECT_NEAR(lhs, rhs, 1e-11 * n * n);
      }
    }
  }
}

TEST(Derivative, OdeResidual) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-0.95, 0.95);
  const double h = 1e-5;
  for (double d : {2.0, 2.5, 3.0, 4.0}) {
    const Dimension dim(d);
    for (int trial = 0; trial < 20; ++trial) {
      const double x = u(rng);
      for (int n : {2, 5, 9}) {
        const double d2 = (derivative(x + h, n, dim) - derivative(x - h, n, dim)) / (2 * h);
        const double r = (1 - x * x) * d2 - (d - 1) * x * derivative(x, n, dim) +
                         n * (n + d - 2) * eval_poly(x, n, dim);
        EXPECT_NEAR(r, 0.0, 1e-8 * n * n * n) << "D=" << d << " n=" << n << " x=" << x;
      }
    }
  }
}

TEST(ValueAtZero, KnownValues) {
  EXPECT_EQ(value_at_zero(1, Dimension(3)), 0.0);
  EXPECT_NEAR(value_at_zero(2, Dimension(3)), -0.5, 1e-15);
  EXPECT_NEAR(value_at_zero(4, Dimension(2)), 1.0, 1e-15);
  EXPECT_NEAR(value_at_zero(6, Dimension(2)), -1.0, 1e-15);
}

TEST(ValueAtZero, AgreesWithRecurrence) {
  for (double d : {2.0, 2.000001, 2.5, 3.0, 4.0, 7.0}) {
    const auto v = eval_sequence(0.0, 30, Dimension(d)).values;
    for (int n = 0; n <= 30; ++n) {
      EXPECT_NEAR(value_at_zero(n, Dimension(d)), v[n], 1e-14) << d << " " << n;
      EXPECT_NEAR(derivative_at_zero(n, Dimension(d)), derivative(0.0, n, Dimension(d)),
                  1e-12 * (n + 1))
          << d << " " << n;
    }
  }
}

TEST(ValueAtZero, ChebyshevSlope) {
  for (int l = 0; l < 8; ++l) {
    EXPECT_NEAR(derivative_at_zero(2 * l + 1, Dimension(2)), (l % 2 ? -1 : 1) * (2 * l + 1.0),
                1e-13);
  }
}

TEST(CdKernel, OnAxisDiagonal) {
  for (int n = 0; n <= 12; ++n) {
    EXPECT_NEAR(cd_kernel(1.0, 1.0, n, Dimension(3)), (n + 1.0) * (n + 1.0) / 2.0, 1e-12);
  }
}

TEST(CdKernel, QuotientMatchesDirectSum) {
  auto direct = [](double x, double y, int nmax, Dimension dim) {
    const auto px = eval_sequence(x, nmax, dim).values;
    const auto py = eval_sequence(y, nmax, dim).values;
    double s = 0.0;
    for (int n = 0; n <= nmax; ++n) s += px[n] * py[n] / norm_squared(n, dim);
    return s;
  };
  EXPECT_NEAR(cd_kernel(0.2, 0.7, 4, Dimension(2)), direct(0.2, 0.7, 4, Dimension(2)), 1e-10);
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (double d : {2.0, 2.5, 3.0, 4.0}) {
    for (int trial = 0; trial < 30; ++trial) {
      const double x = u(rng), y = u(rng);
      EXPECT_NEAR(cd_kernel(x, y, 9, Dimension(d)), direct(x, y, 9, Dimension(d)), 1e-10);
    }
  }
}

// Just outside the direct-sum band the quotient must still hold 1e-9.
TEST(CdKernel, QuotientAccurateAtCrossover) {
  for (double d : {2.0, 3.0, 4.5}) {
    const Dimension dim(d);
    for (double y : {-0.6, 0.1, 0.8}) {
      const double x = y + 1.001e-6;
      const auto px = eval_sequence(x, 8, dim).values;
      const auto py = eval_sequence(y, 8, dim).values;
      double direct = 0.0;
      for (int n = 0; n <= 8; ++n) direct += px[n] * py[n] / norm_squared(n, dim);
      EXPECT_NEAR(cd_kernel(x, y, 8, dim), direct, 1e-9) << d << " " << y;
    }
  }
}

// Zeros of P_{N+1} turn the kernel into the max-rE closed form
// (1 - r) P_{N+1}(x) / (x - r) up to a constant.
TEST(CdKernel, MaxReClosedFormShape) {
  const Dimension dim(3);
  // Largest zero of P_3 = (5x^3 - 3x)/2.
  const double r = std::sqrt(3.0 / 5.0);
  const double k0 = cd_kernel(0.1, r, 2, dim) / ((1 - r) * eval_poly(0.1, 3, dim) / (0.1 - r));
  for (double x : {-0.9, -0.3, 0.5, 0.95}) {
    const double closed = (1 - r) * eval_poly(x, 3, dim) / (x - r);
    EXPECT_NEAR(cd_kernel(x, r, 2, dim), k0 * closed, 1e-12);
  }
}

// int_{x0}^1 P_n w dx = w(x0) (P_{n-1}(x0) - P_{n+1}(x0)) / (2 (n + alpha))
TEST(CapIntegral, RecurrenceMatchesQuadrature) {
  for (double d : {2.0, 2.5, 3.0, 4.0}) {
    const Dimension dim(d);
    for (double x0 : {-0.7, 0.0, 0.45}) {
      const double w0 = std::pow(1 - x0 * x0, (d - 3) / 2);
      const auto p = eval_sequence(x0, 9, dim).values;
      for (int n = 1; n <= 8; ++n) {
        const double q = integrate_axisym([&](double x) { return eval_poly(x, n, dim); }, dim, n,
                                          x0, 1.0);
        const double closed = w0 * (p[n - 1] - p[n + 1]) / (2 * (n + dim.alpha()));
        EXPECT_NEAR(q, closed, 1e-12) << "D=" << d << " x0=" << x0 << " n=" << n;
      }
    }
  }
}

}  // namespace
}  // namespace axidir
