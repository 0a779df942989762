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

#ifndef FREEQG_CHEBYSHEV_HPP
#define FREEQG_CHEBYSHEV_HPP

#include <vector>

#include "freeqg/bigint.hpp"

namespace freeqg {

/// Decay anchor used when the caller does not pick one; q(2.5) = 2.
inline constexpr double kDefaultT0 = 2.5;

/// Quantum group dimension N together with the decay anchor t0.
///
/// Invariants: N >= 2 and 2 < t0 < 3. Construct through make() to have them
/// checked.
struct ChebyParams {
  int N = 3;
  double t0 = kDefaultT0;

  static ChebyParams make(int N, double t0 = kDefaultT0);
};

/// Integer coefficients of a polynomial, index i holding the coefficient of x^i.
struct PolyCoeffs {
  std::vector<BigInt> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  bool operator==(const PolyCoeffs&) const = default;
};

/// Dilated Chebyshev polynomial of the second kind, u_0 = 1, u_1 = x,
/// x u_n = u_{n+1} + u_{n-1}. Always evaluated by the three-term recursion;
/// the closed form in q(x) is singular at x = 2.
double chebyshev_u(unsigned n, double x);

/// Exact integer evaluation of u_n at an integer point.
BigInt chebyshev_u(unsigned n, const BigInt& x);

PolyCoeffs chebyshev_coeffs(unsigned n);

/// q(t) = (t + sqrt(t^2 - 4)) / 2, the root >= 1 of q + 1/q = t.
/// Throws DomainError for t < 2.
double q_of(double t);

/// Dimension of the n-th irreducible of O_N^+, i.e. u_n(N) in exact
/// arithmetic. Throws DomainError for N < 2.
BigInt dim_orth(unsigned n, int N);

/// u_n(t) / u_n(s) for any real t and s >= 2.
///
/// Both recursions are run side by side and rescaled together, so the ratio
/// stays finite long after u_n(s) itself would overflow a double.
double chebyshev_ratio(unsigned n, double t, double s);

/// u_n(t) / u_n(N) for t in [t0, N], N >= 3.
double coeff_ratio(unsigned n, double t, const ChebyParams& params);

/// C_{t0} = (1 - q(t0)^{-2})^{-1}. Throws DomainError unless 2 < t0 < 3.
double decay_constant(double t0);

}  // namespace freeqg

#endif  // FREEQG_CHEBYSHEV_HPP
