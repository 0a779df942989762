// Copyright 2026 The freeqg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "freeqg/chebyshev.hpp"

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "freeqg/errors.hpp"
#include "freeqg/random.hpp"
#include "support/oracles.hpp"

namespace freeqg {
namespace {

BigInt horner(const PolyCoeffs& poly, const BigInt& x) {
  BigInt acc = 0;
  for (auto it = poly.coeffs.rbegin(); it != poly.coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

TEST(ChebyshevU, InitialValuesAndRecursion) {
  EXPECT_EQ(chebyshev_u(0, 7.3), 1.0);
  EXPECT_EQ(chebyshev_u(1, 3.0), 3.0);
  EXPECT_EQ(chebyshev_u(3, 3.0), 21.0);
  EXPECT_EQ(chebyshev_u(2, 2.0), 3.0);  // u_n(2) = n + 1, no singularity at q = 1
  EXPECT_EQ(chebyshev_u(40, 2.0), 41.0);
}

TEST(ChebyshevU, IntegerInputsGiveExactIntegers) {
  for (int x = -6; x <= 6; ++x) {
    for (unsigned n = 1; n <= 30; ++n) {
      const BigInt lhs = BigInt(x) * chebyshev_u(n, BigInt(x));
      const BigInt rhs = chebyshev_u(n + 1, BigInt(x)) + chebyshev_u(n - 1, BigInt(x));
      ASSERT_EQ(lhs, rhs) << "x=" << x << " n=" << n;
      if (std::abs(x) <= 3 && n <= 25) {
        ASSERT_EQ(chebyshev_u(n, static_cast<double>(x)), to_double(chebyshev_u(n, BigInt(x))));
      }
    }
  }
}

TEST(ChebyshevU, MatchesClosedFormAboveTwo) {
  for (double t = 2.01; t <= 10.0; t += 0.37) {
    for (unsigned n = 0; n <= 60; ++n) {
      const double expected = testing::chebyshev_closed_form(n, t);
      ASSERT_NEAR(chebyshev_u(n, t), expected, 1e-9 * expected) << "t=" << t << " n=" << n;
    }
  }
}

TEST(ChebyshevCoeffs, LowDegrees) {
  EXPECT_EQ(chebyshev_coeffs(0).coeffs, (std::vector<BigInt>{1}));
  EXPECT_EQ(chebyshev_coeffs(1).coeffs, (std::vector<BigInt>{0, 1}));
  EXPECT_EQ(chebyshev_coeffs(2).coeffs, (std::vector<BigInt>{-1, 0, 1}));
  EXPECT_EQ(chebyshev_coeffs(3).coeffs, (std::vector<BigInt>{0, -2, 0, 1}));
}

TEST(ChebyshevCoeffs, MonicOfDegreeNAndConsistentWithEvaluation) {
  for (unsigned n = 0; n <= 40; ++n) {
    const auto poly = chebyshev_coeffs(n);
    ASSERT_EQ(poly.degree(), n);
    ASSERT_EQ(poly.coeffs.back(), 1);
    for (int x : {-3, 0, 2, 5}) ASSERT_EQ(horner(poly, x), chebyshev_u(n, BigInt(x)));
  }
}

TEST(QOf, Values) {
  EXPECT_EQ(q_of(2.0), 1.0);
  EXPECT_NEAR(q_of(3.0), (3.0 + std::sqrt(5.0)) / 2.0, 1e-15);
  EXPECT_NEAR(q_of(3.0), 2.6180339887, 1e-10);
  EXPECT_NEAR(q_of(4.0), 2.0 + std::sqrt(3.0), 1e-15);
  EXPECT_EQ(q_of(2.5), 2.0);
}

TEST(QOf, InvertsQPlusInverse) {
  for (double t = 2.0; t <= 100.0; t += 0.173) {
    const double q = q_of(t);
    ASSERT_GE(q, 1.0);
    ASSERT_NEAR(q + 1.0 / q, t, 1e-12 * t);
  }
}

TEST(QOf, RejectsBelowTwo) {
  EXPECT_THROW(q_of(1.999), DomainError);
  EXPECT_THROW(q_of(std::nan("")), DomainError);
}

TEST(DimOrth, Examples) {
  EXPECT_EQ(dim_orth(5, 2), 6);
  EXPECT_EQ(dim_orth(0, 7), 1);
  EXPECT_EQ(dim_orth(3, 3), 21);
  EXPECT_EQ(dim_orth(5, 4), 780);
  EXPECT_THROW(dim_orth(3, 1), DomainError);
}

TEST(DimOrth, NEqualsTwoIsNPlusOne) {
  for (unsigned n = 0; n <= 200; ++n) ASSERT_EQ(dim_orth(n, 2), n + 1);
}

TEST(DimOrth, StrictlyIncreasingAndBeyondSixtyFourBits) {
  for (int N = 3; N <= 6; ++N) {
    for (unsigned n = 0; n < 80; ++n) ASSERT_LT(dim_orth(n, N), dim_orth(n + 1, N));
  }
  EXPECT_GT(dim_orth(50, 3), BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST(DimOrth, AgreesWithClosedForm) {
  for (int N = 3; N <= 8; ++N) {
    for (unsigned n = 0; n <= 60; ++n) {
      const double expected = testing::chebyshev_closed_form(n, N);
      ASSERT_NEAR(to_double(dim_orth(n, N)), expected, 1e-9 * expected);
    }
  }
}

TEST(CoeffRatio, Examples) {
  const auto p3 = ChebyParams::make(3);
  const auto p5 = ChebyParams::make(5);
  EXPECT_EQ(coeff_ratio(0, 2.7, p3), 1.0);
  EXPECT_DOUBLE_EQ(coeff_ratio(1, 2.5, p3), 2.5 / 3.0);
  EXPECT_DOUBLE_EQ(coeff_ratio(2, 2.5, p5), 5.25 / 24.0);
  EXPECT_EQ(coeff_ratio(17, 5.0, p5), 1.0);
}

TEST(CoeffRatio, Domain) {
  const auto p4 = ChebyParams::make(4);
  EXPECT_THROW(coeff_ratio(1, 2.4, p4), DomainError);
  EXPECT_THROW(coeff_ratio(1, 4.01, p4), DomainError);
  EXPECT_THROW(coeff_ratio(1, 2.5, ChebyParams{2, 2.5}), DomainError);
  EXPECT_THROW(ChebyParams::make(1), DomainError);
  EXPECT_THROW(ChebyParams::make(3, 3.0), DomainError);
}

TEST(CoeffRatio, IncreasingInTAndDominatedByDecayBound) {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const int N = 3 + static_cast<int>(rng() % 6);
    const double t0 = 2.0 + 0.01 + 0.98 * rng.uniform01();
    const auto params = ChebyParams::make(N, t0);
    const double t = t0 + (N - t0) * rng.uniform01();
    const unsigned n = 1 + static_cast<unsigned>(rng() % 80);
    const double c = coeff_ratio(n, t, params);
    ASSERT_GT(c, 0.0);
    ASSERT_LE(c, 1.0);
    ASSERT_LE(c, decay_constant(t0) * std::pow(t / N, n) + 1e-12);
    const double t_up = std::min<double>(N, t + 1e-3);
    if (t_up > t) ASSERT_LT(c, coeff_ratio(n, t_up, params));
  }
}

TEST(ChebyshevRatio, StaysFiniteFarBeyondDoubleRange) {
  // u_2000(3) ~ 10^836; the ratio itself is ordinary.
  const double ratio = chebyshev_ratio(2000, 2.5, 3.0);
  const double q_t = q_of(2.5), q_s = q_of(3.0);
  const double log_expected = 2001.0 * std::log(q_t / q_s) - std::log(q_t - 1.0 / q_t) +
                              std::log(q_s - 1.0 / q_s);
  EXPECT_GT(ratio, 0.0);
  EXPECT_NEAR(std::log(ratio), log_expected, 1e-9 * std::abs(log_expected));
  EXPECT_EQ(chebyshev_ratio(5000, 4.0, 4.0), 1.0);
  EXPECT_THROW(chebyshev_ratio(3, 1.0, 1.5), DomainError);
}

TEST(DecayConstant, Values) {
  EXPECT_DOUBLE_EQ(decay_constant(2.5), 4.0 / 3.0);
  for (double t0 = 2.001; t0 < 3.0; t0 += 0.05) EXPECT_GT(decay_constant(t0), 1.0);
  EXPECT_GT(decay_constant(2.0 + 1e-9), 1e4);
  EXPECT_THROW(decay_constant(2.0), DomainError);
  EXPECT_THROW(decay_constant(3.0), DomainError);
}

}  // namespace
}  // namespace freeqg
