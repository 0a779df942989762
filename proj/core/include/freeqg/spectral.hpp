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

#ifndef FREEQG_SPECTRAL_HPP
#define FREEQG_SPECTRAL_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace freeqg {

/// Semicircle law on [-2, 2]: the distribution of chi_1 under the Haar state.
double semicircle_density(double x);
double semicircle_cdf(double x);

/// Default panel count for semicircle_moment.
inline constexpr unsigned kDefaultSubdivisions = 10000;

/// Integral of x^k against the semicircle density by composite Simpson.
///
/// The integral is taken in the angle variable x = 2 sin(theta), where the
/// integrand is smooth; in x itself the square-root edge limits Simpson to
/// about h^{3/2}. Requires subdivisions >= 64; odd counts are rounded up.
double semicircle_moment(unsigned k, unsigned subdivisions = kDefaultSubdivisions);

/// i.i.d. semicircle samples by rejection from the uniform box
/// [-2, 2] x [0, 1/pi], driven by SplitMix64 seeded with `seed`.
std::vector<double> semicircle_sample(std::uint64_t seed, std::size_t count);

/// Kolmogorov-Smirnov distance between the empirical law of `samples` and the
/// semicircle law.
/// Throws DomainError for an empty sample.
double ks_distance_to_semicircle(std::span<const double> samples);

enum class Algebra { Reduced, Full };

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool operator==(const Interval&) const = default;
};

/// Spectrum of chi_1: [-2, 2] in the reduced algebra, [-N, N] in the full one.
Interval spectrum_interval(Algebra algebra, int N);

}  // namespace freeqg

#endif  // FREEQG_SPECTRAL_HPP
