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

#include "freeqg/multiplier_nets.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <type_traits>

#include "freeqg/errors.hpp"

namespace freeqg {

namespace {

// Shared precondition of every coefficient net: N >= 3, 2 < t0 < 3 and
// t in [t0, N] (or [t0, N) when `open_right`).
void require_net_domain(double t, const ChebyParams& params, bool open_right = false) {
  if (params.N < 3) {
    throw DomainError("coefficient nets need N >= 3, got " + std::to_string(params.N));
  }
  ChebyParams::make(params.N, params.t0);
  const double N = params.N;
  const bool inside = open_right ? (t >= params.t0 && t < N) : (t >= params.t0 && t <= N);
  if (!inside) {
    throw DomainError("t = " + std::to_string(t) + " outside [" +
                      std::to_string(params.t0) + ", " + std::to_string(params.N) +
                      (open_right ? ")" : "]"));
  }
}

std::vector<double> ratio_table(unsigned max_level, double t, int N) {
  // u_n(t)/u_n(N) for n = 0..max_level, each by its own joint recursion so
  // every entry is bit-identical to chebyshev_ratio(n, t, N).
  std::vector<double> out(max_level + 1);
  for (unsigned n = 0; n <= max_level; ++n) out[n] = chebyshev_ratio(n, t, N);
  return out;
}

double form_coeff(const AlternatingForm& form, double r, std::span<const double> ratios) {
  double value = std::pow(r, static_cast<double>(form.circle_weight()));
  for (unsigned k : form.blocks) value *= ratios[k];
  return value;
}

double envelope_ratio(double t, int N) { return t / static_cast<double>(N); }

}  // namespace

CentralStateO CentralStateO::make(double t, int N) {
  if (N < 3) throw DomainError("central states need N >= 3, got " + std::to_string(N));
  if (!(std::abs(t) <= N)) {
    throw DomainError("central state point t = " + std::to_string(t) +
                      " outside [-N, N]");
  }
  return CentralStateO{t, N};
}

double central_coeff_orth(unsigned n, const CentralStateO& state) {
  return chebyshev_ratio(n, state.t, static_cast<double>(state.N));
}

unsigned level(const Label& label) {
  return std::visit(
      [](const auto& l) -> unsigned {
        if constexpr (std::is_same_v<std::decay_t<decltype(l)>, OrthLabel>) {
          return l.n;
        } else {
          return static_cast<unsigned>(l.size());
        }
      },
      label);
}

std::string label_text(const Label& label) {
  if (const auto* orth = std::get_if<OrthLabel>(&label)) return std::to_string(orth->n);
  return std::get<FreeWord>(label).display();
}

unsigned MultiplierCoeffs::max_level() const {
  unsigned top = 0;
  for (const auto& [label, value] : entries) top = std::max(top, level(label));
  return top;
}

std::vector<double> MultiplierCoeffs::level_max() const {
  if (entries.empty()) return {};
  std::vector<double> out(max_level() + 1, 0.0);
  for (const auto& [label, value] : entries) {
    auto& slot = out[level(label)];
    slot = std::max(slot, std::abs(value));
  }
  return out;
}

double net_l2_norm(const MultiplierCoeffs& coeffs) {
  double sup = 0.0;
  for (const auto& [label, value] : coeffs.entries) sup = std::max(sup, std::abs(value));
  return sup;
}

double r_of(double t, const ChebyParams& params) {
  require_net_domain(t, params);
  if (t == params.N) return 1.0;
  const double qt = q_of(t);
  const double qN = q_of(static_cast<double>(params.N));
  return (1.0 - 1.0 / (qt * qt)) / (1.0 - 1.0 / (qN * qN));
}

double free_product_coeff(const AlternatingForm& form, double r, double t, int N) {
  double value = std::pow(r, static_cast<double>(form.circle_weight()));
  for (unsigned k : form.blocks) value *= chebyshev_ratio(k, t, static_cast<double>(N));
  return value;
}

double a_coeff(const FreeWord& word, double t, const ChebyParams& params) {
  const double r = r_of(t, params);
  return free_product_coeff(alternating_form(word), r, t, params.N);
}

double dominating_tail_sup(double constant, double ratio, unsigned from_level) {
  if (!(constant >= 0.0)) throw DomainError("envelope constant must be >= 0");
  if (!(ratio >= 0.0)) throw DomainError("envelope ratio must be >= 0");
  if (constant == 0.0) return 0.0;
  if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
  if (ratio == 0.0) return from_level == 0 ? constant : 0.0;

  // log of (n+1)^2 ratio^n; the successive quotient ((n+2)/(n+1))^2 ratio
  // decreases in n, so the sequence rises to a single peak and then falls.
  const double log_ratio = std::log(ratio);
  const auto log_term = [&](double n) { return 2.0 * std::log1p(n) + n * log_ratio; };

  // The quotient is >= 1 exactly while n + 1 <= 1 / (ratio^{-1/2} - 1). Start
  // the scan a little below that point; everything skipped is still rising.
  const double rising_until = 1.0 / std::expm1(-0.5 * log_ratio) - 1.0;
  double n = static_cast<double>(from_level);
  if (rising_until - 2.0 > n) n = std::floor(rising_until - 2.0);

  double best = log_term(n);
  for (;;) {
    const double next = log_term(n + 1.0);
    if (!(next > best)) break;
    best = next;
    n += 1.0;
  }
  return constant * std::exp(best);
}

double k_a(const MultiplierCoeffs& coeffs, unsigned from_level) {
  double sup = 0.0;
  const auto per_level = coeffs.level_max();
  for (std::size_t n = from_level; n < per_level.size(); ++n) {
    const double weight = static_cast<double>(n + 1) * static_cast<double>(n + 1);
    sup = std::max(sup, weight * per_level[n]);
  }
  if (coeffs.envelope) {
    const auto beyond = static_cast<unsigned>(per_level.size());
    const unsigned start = std::max({from_level, beyond, coeffs.envelope->from_level});
    sup = std::max(sup, dominating_tail_sup(coeffs.envelope->constant,
                                            coeffs.envelope->ratio, start));
  }
  return sup;
}

double ultra_bound(double ka, double rd_constant) {
  if (!(ka >= 0.0)) throw DomainError("k_a must be >= 0");
  if (!(rd_constant > 0.0)) throw DomainError("RD constant must be > 0");
  return std::numbers::pi * rd_constant * ka / std::sqrt(6.0);
}

namespace {

double tail_bound_impl(double t, unsigned m, int N, double t0,
                       const std::optional<double>& rd, const char* rd_name) {
  if (!rd) throw DomainError(std::string("RD constant ") + rd_name + " is required");
  if (!(*rd > 0.0)) throw DomainError(std::string("RD constant ") + rd_name + " must be > 0");
  require_net_domain(t, ChebyParams{N, t0}, /*open_right=*/true);
  const double sup = dominating_tail_sup(decay_constant(t0), envelope_ratio(t, N), m + 1);
  return ultra_bound(sup, *rd);
}

}  // namespace

double tail_bound_orth(double t, unsigned m, int N, const BoundParams& bounds) {
  return tail_bound_impl(t, m, N, bounds.t0, bounds.D, "D");
}

double tail_bound_unitary(double t, unsigned m, int N, const BoundParams& bounds) {
  return tail_bound_impl(t, m, N, bounds.t0, bounds.R, "R");
}

double tail_bound(Group group, double t, unsigned m, int N, const BoundParams& bounds) {
  return group == Group::Orth ? tail_bound_orth(t, m, N, bounds)
                              : tail_bound_unitary(t, m, N, bounds);
}

TruncationCertificate choose_truncation(double t, double eps, int N, Group group,
                                        const BoundParams& bounds) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw DomainError("eps must be a positive number");
  const auto bound_at = [&](unsigned m) { return tail_bound(group, t, m, N, bounds); };

  TruncationCertificate cert{group, t, N, 0, bound_at(0), eps, false};
  if (cert.tail_bound <= eps) {
    cert.satisfied = true;
    return cert;
  }
  // bound(lo) > eps >= bound(hi), then bisect.
  std::uint64_t lo = 0;
  std::uint64_t hi = 1;
  constexpr std::uint64_t kMaxOrder = std::numeric_limits<unsigned>::max();
  while (bound_at(static_cast<unsigned>(hi)) > eps) {
    lo = hi;
    hi *= 2;
    if (hi > kMaxOrder) throw ResourceError("truncation order exceeds the supported range");
  }
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    (bound_at(static_cast<unsigned>(mid)) > eps ? lo : hi) = mid;
  }
  cert.m = static_cast<unsigned>(hi);
  cert.tail_bound = bound_at(cert.m);
  cert.satisfied = cert.tail_bound <= eps;
  return cert;
}

MultiplierCoeffs truncated_coeffs(Group group, double t, unsigned m,
                                  const ChebyParams& params, std::optional<double> r,
                                  std::size_t entry_cap) {
  require_net_domain(t, params);
  MultiplierCoeffs out;
  out.group = group;
  out.t = t;
  out.N = params.N;
  out.t0 = params.t0;

  if (group == Group::Orth) {
    if (r) throw DomainError("a Poisson parameter r only applies to U_N^+");
    if (static_cast<std::uint64_t>(m) + 1 > entry_cap) {
      throw ResourceError("coefficient table would exceed the entry cap");
    }
    const auto ratios = ratio_table(m, t, params.N);
    for (unsigned n = 0; n <= m; ++n) out.entries.emplace(OrthLabel{n}, ratios[n]);
    return out;
  }

  if (m >= 63 || (std::uint64_t{2} << m) - 1 > entry_cap) {
    throw ResourceError("U_N^+ table to level " + std::to_string(m) + " has " +
                        (m >= 63 ? std::string("too many") :
                                   std::to_string((std::uint64_t{2} << m) - 1)) +
                        " entries, cap is " + std::to_string(entry_cap));
  }
  if (r && !(*r >= 0.0 && *r <= 1.0)) throw DomainError("r must lie in [0, 1]");
  out.r = r ? *r : r_of(t, params);
  const auto ratios = ratio_table(m, t, params.N);
  for (auto& word : words_up_to(m)) {
    const double value = form_coeff(alternating_form(word), *out.r, ratios);
    out.entries.emplace(std::move(word), value);
  }
  return out;
}

MultiplierCoeffs net_coeffs(Group group, double t, unsigned stored_levels,
                            const ChebyParams& params, std::size_t entry_cap) {
  MultiplierCoeffs out =
      truncated_coeffs(group, t, stored_levels, params, std::nullopt, entry_cap);
  out.envelope = GeometricEnvelope{decay_constant(params.t0), envelope_ratio(t, params.N),
                                   stored_levels + 1};
  return out;
}

std::vector<std::pair<Label, double>> approx_identity_weights(Group group, double t,
                                                              unsigned m,
                                                              const ChebyParams& params,
                                                              std::size_t entry_cap) {
  require_net_domain(t, params, /*open_right=*/true);
  const MultiplierCoeffs coeffs = truncated_coeffs(group, t, m, params, std::nullopt, entry_cap);
  std::vector<std::pair<Label, double>> out;
  out.reserve(coeffs.entries.size());
  for (const auto& [label, value] : coeffs.entries) {
    if (const auto* orth = std::get_if<OrthLabel>(&label)) {
      out.emplace_back(label, value * to_double(dim_orth(orth->n, params.N)));
    } else {
      const auto& word = std::get<FreeWord>(label);
      const double conj_coeff = coeffs.entries.at(involution(word));
      out.emplace_back(label, conj_coeff * to_double(dim_unitary(word, params.N)));
    }
  }
  return out;
}

std::vector<double> t_grid(double t0, int N, unsigned points) {
  if (points < 2) throw DomainError("a t-grid needs at least 2 points");
  std::vector<double> out(points);
  const double step = (static_cast<double>(N) - t0) / static_cast<double>(points - 1);
  for (unsigned i = 0; i + 1 < points; ++i) out[i] = t0 + step * static_cast<double>(i);
  out.back() = static_cast<double>(N);
  return out;
}

double poisson_coeff(double r, long n) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("Poisson parameter r must lie in [0, 1)");
  return std::pow(r, static_cast<double>(std::labs(n)));
}

}  // namespace freeqg
