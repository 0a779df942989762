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

#include "freeqg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "freeqg/errors.hpp"
#include "freeqg/random.hpp"

namespace freeqg {

namespace {
constexpr double kPi = std::numbers::pi;
}  // namespace

double semicircle_density(double x) {
  if (!(std::abs(x) <= 2.0)) return 0.0;
  return std::sqrt(4.0 - x * x) / (2.0 * kPi);
}

double semicircle_cdf(double x) {
  if (x <= -2.0) return 0.0;
  if (x >= 2.0) return 1.0;
  return 0.5 + x * std::sqrt(4.0 - x * x) / (4.0 * kPi) + std::asin(x / 2.0) / kPi;
}

double semicircle_moment(unsigned k, unsigned subdivisions) {
  if (subdivisions < 64) {
    throw DomainError("semicircle_moment needs at least 64 subdivisions, got " +
                      std::to_string(subdivisions));
  }
  if (subdivisions % 2 != 0) ++subdivisions;

  // x = 2 sin(theta): x^k rho(x) dx = (2 sin theta)^k (2 / pi) cos^2(theta) dtheta
  // on [-pi/2, pi/2]. Nodes (i - n/2) h are exactly symmetric and summed in
  // mirrored pairs, so odd moments cancel to the last bit.
  const auto integrand = [k](double theta) {
    const double c = std::cos(theta);
    return std::pow(2.0 * std::sin(theta), static_cast<double>(k)) * (2.0 / kPi) * c * c;
  };
  const unsigned half = subdivisions / 2;
  const double h = kPi / subdivisions;
  const auto weight = [subdivisions](unsigned i) {
    if (i == 0 || i == subdivisions) return 1.0;
    return i % 2 == 1 ? 4.0 : 2.0;
  };
  double sum = weight(half) * integrand(0.0);
  for (unsigned j = 1; j <= half; ++j) {
    const double theta = static_cast<double>(j) * h;
    sum += weight(half + j) * (integrand(-theta) + integrand(theta));
  }
  return sum * h / 3.0;
}

std::vector<double> semicircle_sample(std::uint64_t seed, std::size_t count) {
  SplitMix64 rng(seed);
  std::vector<double> out;
  out.reserve(count);
  const double ceiling = 1.0 / kPi;
  while (out.size() < count) {
    const double x = -2.0 + 4.0 * rng.uniform01();
    const double y = ceiling * rng.uniform01();
    if (y < semicircle_density(x)) out.push_back(x);
  }
  return out;
}

double ks_distance_to_semicircle(std::span<const double> samples) {
  if (samples.empty()) throw DomainError("KS distance needs at least one sample");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = semicircle_cdf(sorted[i]);
    worst = std::max({worst, f - static_cast<double>(i) / n,
                      static_cast<double>(i + 1) / n - f});
  }
  return worst;
}

Interval spectrum_interval(Algebra algebra, int N) {
  if (N < 2) throw DomainError("N must be >= 2, got " + std::to_string(N));
  if (algebra == Algebra::Reduced) return {-2.0, 2.0};
  return {-static_cast<double>(N), static_cast<double>(N)};
}

}  // namespace freeqg
