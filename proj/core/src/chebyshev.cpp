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
#include <string>

#include "freeqg/errors.hpp"

namespace freeqg {

namespace {

void require_open_anchor(double t0) {
  if (!(t0 > 2.0 && t0 < 3.0)) {
    throw DomainError("t0 must lie in the open interval (2, 3), got " +
                      std::to_string(t0));
  }
}

}  // namespace

ChebyParams ChebyParams::make(int N, double t0) {
  if (N < 2) throw DomainError("N must be >= 2, got " + std::to_string(N));
  require_open_anchor(t0);
  return ChebyParams{N, t0};
}

double chebyshev_u(unsigned n, double x) {
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = x;
  for (unsigned k = 1; k < n; ++k) {
    double next = x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

BigInt chebyshev_u(unsigned n, const BigInt& x) {
  BigInt prev = 1;
  if (n == 0) return prev;
  BigInt cur = x;
  for (unsigned k = 1; k < n; ++k) {
    BigInt next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

PolyCoeffs chebyshev_coeffs(unsigned n) {
  std::vector<BigInt> prev{1};
  if (n == 0) return PolyCoeffs{prev};
  std::vector<BigInt> cur{0, 1};
  for (unsigned k = 1; k < n; ++k) {
    // x * cur - prev
    std::vector<BigInt> next(cur.size() + 1);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] = cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return PolyCoeffs{cur};
}

double q_of(double t) {
  if (!(t >= 2.0)) {
    throw DomainError("q(t) needs t >= 2, got " + std::to_string(t));
  }
  return (t + std::sqrt(t * t - 4.0)) / 2.0;
}

BigInt dim_orth(unsigned n, int N) {
  if (N < 2) throw DomainError("N must be >= 2, got " + std::to_string(N));
  return chebyshev_u(n, BigInt(N));
}

double chebyshev_ratio(unsigned n, double t, double s) {
  if (!(s >= 2.0)) {
    throw DomainError("chebyshev_ratio needs a denominator point s >= 2");
  }
  constexpr double kRescaleAbove = 0x1.0p+500;
  double num_prev = 1.0, num = t;
  double den_prev = 1.0, den = s;
  if (n == 0) return 1.0;
  for (unsigned k = 1; k < n; ++k) {
    double num_next = t * num - num_prev;
    double den_next = s * den - den_prev;
    num_prev = num;
    num = num_next;
    den_prev = den;
    den = den_next;
    if (den > kRescaleAbove) {
      // u_k(s) >= u_{k-1}(s) > 0 for s >= 2; scale all four by the same power
      // of two so the ratio is unchanged bit for bit.
      num_prev *= 0x1.0p-500;
      num *= 0x1.0p-500;
      den_prev *= 0x1.0p-500;
      den *= 0x1.0p-500;
    }
  }
  return num / den;
}

double coeff_ratio(unsigned n, double t, const ChebyParams& params) {
  if (params.N < 3) {
    throw DomainError("coefficient nets need N >= 3, got " +
                      std::to_string(params.N));
  }
  require_open_anchor(params.t0);
  if (!(t >= params.t0 && t <= params.N)) {
    throw DomainError("t must lie in [t0, N] = [" + std::to_string(params.t0) +
                      ", " + std::to_string(params.N) + "], got " +
                      std::to_string(t));
  }
  return chebyshev_ratio(n, t, static_cast<double>(params.N));
}

double decay_constant(double t0) {
  require_open_anchor(t0);
  const double q = q_of(t0);
  return 1.0 / (1.0 - 1.0 / (q * q));
}

}  // namespace freeqg
