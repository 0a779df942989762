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

#ifndef FREEQG_MULTIPLIER_NETS_HPP
#define FREEQG_MULTIPLIER_NETS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "freeqg/chebyshev.hpp"
#include "freeqg/free_word.hpp"
#include "freeqg/fusion_orth.hpp"
#include "freeqg/fusion_unitary.hpp"

namespace freeqg {

enum class Group { Orth, Unit };

/// Default cap on the number of entries in a U_N^+ coefficient table.
inline constexpr std::size_t kDefaultEntryCap = std::size_t{1} << 20;

/// Point-evaluation state psi_t(chi_n) = u_n(t) on the character algebra of
/// O_N^+, which is C([-N, N]).
struct CentralStateO {
  double t = 0.0;
  int N = 3;

  /// Throws DomainError unless N >= 3 and |t| <= N.
  static CentralStateO make(double t, int N);
};

/// psi(chi_n) / d_n = u_n(t) / u_n(N), the eigenvalue of the central
/// multiplier on level n.
double central_coeff_orth(unsigned n, const CentralStateO& state);

using Label = std::variant<OrthLabel, FreeWord>;

/// n for OrthLabel{n}, |g| for a word.
unsigned level(const Label& label);
std::string label_text(const Label& label);

/// Geometric majorant: every coefficient at level n >= from_level is at most
/// constant * ratio^n in absolute value.
struct GeometricEnvelope {
  double constant = 1.0;
  double ratio = 0.0;
  unsigned from_level = 0;
};

/// Eigenvalues of a central multiplier, keyed by irreducible label.
///
/// Labels that are not stored are zero, unless `envelope` is set, in which
/// case levels beyond the stored ones are only known through the envelope.
struct MultiplierCoeffs {
  Group group = Group::Orth;
  double t = 0.0;
  int N = 3;
  double t0 = kDefaultT0;
  std::optional<double> r;
  std::map<Label, double> entries;
  std::optional<GeometricEnvelope> envelope;

  unsigned max_level() const;
  /// Largest |coefficient| per stored level, index = level.
  std::vector<double> level_max() const;
};

/// RD constants of the Haagerup inequalities. They are never defaulted: the
/// values must come from the caller.
struct BoundParams {
  std::optional<double> D;  // O_N^+
  std::optional<double> R;  // U_N^+
  double t0 = kDefaultT0;
};

/// Certified choice of truncation order for a target accuracy.
struct TruncationCertificate {
  Group group = Group::Orth;
  double t = 0.0;
  int N = 3;
  unsigned m = 0;
  double tail_bound = 0.0;
  double target_eps = 0.0;
  bool satisfied = false;
};

/// sup |entry| over stored labels; 0 for an empty table.
double net_l2_norm(const MultiplierCoeffs& coeffs);

/// r(t) = (1 - q(t)^{-2}) / (1 - q(N)^{-2}) for t in [t0, N], N >= 3.
double r_of(double t, const ChebyParams& params);

/// r^{sum |eps|} * prod_s u_{k(s)}(t) / u_{k(s)}(N): the eigenvalue of the
/// free product of the Poisson multiplier P_r and T_t on the given form.
double free_product_coeff(const AlternatingForm& form, double r, double t, int N);

/// a_t(g) = free_product_coeff(alternating_form(g), r(t), t, N).
double a_coeff(const FreeWord& word, double t, const ChebyParams& params);

/// sup_{n >= from_level} (n+1)^2 * constant * ratio^n for 0 <= ratio < 1.
///
/// (n+1)^2 ratio^n is unimodal, so the scan stops at the first descent.
double dominating_tail_sup(double constant, double ratio, unsigned from_level);

/// sup_{n >= from_level} (n+1)^2 * max_{level(a) = n} |a|, using the envelope
/// for levels beyond the stored table.
double k_a(const MultiplierCoeffs& coeffs, unsigned from_level);

/// pi * rd_constant * ka / sqrt(6), the L^2 -> L^infty bound from property RD.
double ultra_bound(double ka, double rd_constant);

/// Upper bound for ||T_t - T_{t,m}|| on C(O_N^+); needs bounds.D and t in [t0, N).
double tail_bound_orth(double t, unsigned m, int N, const BoundParams& bounds);

/// Upper bound for ||Psi_t - Psi_{t,m}|| on C(U_N^+); needs bounds.R.
double tail_bound_unitary(double t, unsigned m, int N, const BoundParams& bounds);

double tail_bound(Group group, double t, unsigned m, int N, const BoundParams& bounds);

/// Smallest m whose tail bound is <= eps.
TruncationCertificate choose_truncation(double t, double eps, int N, Group group,
                                        const BoundParams& bounds);

/// Coefficients of the truncated net over labels of level <= m. For Unit,
/// `r` overrides r(t) (the two-parameter net Phi_{r,t}); it must lie in [0, 1]
/// and is rejected for Orth.
/// Throws ResourceError if the table would exceed `entry_cap` entries.
MultiplierCoeffs truncated_coeffs(Group group, double t, unsigned m,
                                  const ChebyParams& params,
                                  std::optional<double> r = std::nullopt,
                                  std::size_t entry_cap = kDefaultEntryCap);

/// The untruncated net: levels <= stored_levels tabulated, the rest covered
/// by the C_{t0} (t/N)^n envelope.
MultiplierCoeffs net_coeffs(Group group, double t, unsigned stored_levels,
                            const ChebyParams& params,
                            std::size_t entry_cap = kDefaultEntryCap);

/// Weights (alpha, a_t(conj alpha) d_alpha) of the central approximate
/// identity, levels <= m, t in [t0, N).
std::vector<std::pair<Label, double>> approx_identity_weights(
    Group group, double t, unsigned m, const ChebyParams& params,
    std::size_t entry_cap = kDefaultEntryCap);

/// `points` values evenly spaced over [t0, N], the last one exactly N.
std::vector<double> t_grid(double t0, int N, unsigned points);

/// Poisson kernel multiplier P_r(z^n) = r^{|n|} z^n, 0 <= r < 1.
double poisson_coeff(double r, long n);

}  // namespace freeqg

#endif  // FREEQG_MULTIPLIER_NETS_HPP
