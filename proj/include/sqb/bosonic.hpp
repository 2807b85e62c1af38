// Copyright 2026 The sqbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Squashed-entanglement bounds for the pure-loss bosonic broadcast channel,
// where receiver i gets a fraction eta_i of the input light and the
// environment the remaining 1 - eta. The squashing channel is itself a
// beamsplitter of transmissivity x = eta_E' on the environment mode.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

#include "sqb/errors.hpp"
#include "sqb/measures.hpp"

namespace sqb::bosonic {

template <typename Real>
inline constexpr Real kInf = std::numeric_limits<Real>::infinity();

/// Entropy in bits of a thermal state with mean photon number x.
template <typename Real>
Real g(Real x) {
  if (!(x >= Real(0))) throw DomainError("g(x) needs x >= 0");
  if (x == Real(0)) return Real(0);
  return (x + 1) * std::log2(x + 1) - x * std::log2(x);
}

struct BroadcastSpec {
  std::vector<double> etas;
  std::optional<double> mean_photon;

  double eta_total() const { return std::accumulate(etas.begin(), etas.end(), 0.0); }
  /// Throws DomainError unless every eta_i >= 0, sum <= 1 (+1e-12) and N_S >= 0.
  void validate() const;
};

/// Photon-number dependent bound at squashing transmissivity x. For esq:
///   (1/2) [ sum_i g((eta_i + (1-eta) x) N) - g((1-eta) x N)
///           + g((eta + (1-eta)(1-x)) N) - g((1-eta)(1-x) N) ]
/// and for esq_tilde the pairing with x and 1-x exchanged between the sum
/// and the collective term.
template <typename Real>
Real finite_ns_bound(const std::vector<Real>& etas, Real eta_total, Real ns, Real x, Measure measure) {
  if (!(ns >= 0)) throw DomainError("finite_ns_bound: N_S must be >= 0");
  if (!(x >= 0 && x <= 1)) throw DomainError("finite_ns_bound: eta_E' must lie in [0, 1]");
  const Real loss = std::max(Real(0), Real(1) - eta_total);
  const Real xi = measure == Measure::esq ? x : Real(1) - x;  // per-receiver side
  const Real xc = Real(1) - xi;                                // collective side
  Real sum = 0;
  for (Real eta_i : etas) sum += g((eta_i + loss * xi) * ns) - g(loss * xi * ns);
  sum += g((eta_total + loss * xc) * ns) - g(loss * xc * ns);
  return std::max(Real(0), sum / 2);
}

/// N_S -> infinity limit:
///   (1/2) [ sum_i log2(eta_i / ((1-eta) x) + 1) + log2(eta / ((1-eta)(1-x)) + 1) ]
/// for esq, x <-> 1-x for esq_tilde. +inf when eta = 1 or x hits 0 or 1
/// with light on that side.
template <typename Real>
Real asymptotic_bound(const std::vector<Real>& etas, Real eta_total, Real x, Measure measure) {
  if (!(x >= 0 && x <= 1)) throw DomainError("asymptotic_bound: eta_E' must lie in [0, 1]");
  const Real loss = Real(1) - eta_total;
  auto term = [&](Real eta, Real share) -> Real {
    if (eta == Real(0)) return Real(0);
    const Real denom = loss * share;
    if (!(denom > 0)) return kInf<Real>;
    return std::log2(eta / denom + Real(1));
  };
  if (!(loss > 0)) return eta_total > 0 ? kInf<Real> : Real(0);
  const Real xi = measure == Measure::esq ? x : Real(1) - x;
  Real sum = 0;
  for (Real eta_i : etas) sum += term(eta_i, xi);
  sum += term(eta_total, Real(1) - xi);
  return sum / 2;
}

/// Derivative condition of the esq-paired asymptotic bound,
///   sum_i 1/(x^2 (1-eta)/eta_i + x) - 1/((1-x)^2 (1-eta)/eta + 1-x),
/// which decreases from +inf at 0+ to -inf at 1-. Zero etas drop out.
template <typename Real>
Real stationarity_residual(const std::vector<Real>& etas, Real eta_total, Real x) {
  const Real loss = std::max(Real(0), Real(1) - eta_total);
  Real lhs = 0;
  for (Real eta_i : etas)
    if (eta_i > 0) lhs += Real(1) / (x * x * loss / eta_i + x);
  const Real y = Real(1) - x;
  return lhs - Real(1) / (y * y * loss / eta_total + y);
}

double finite_ns_bound(const BroadcastSpec& spec, double eta_eprime, Measure measure);
double asymptotic_bound(const BroadcastSpec& spec, double eta_eprime, Measure measure);

/// Minimizer of the esq-paired asymptotic bound: the root of
/// stationarity_residual, by bisection on [1e-9, 1 - 1e-9] to 1e-12.
/// Throws RootError when the residual does not change sign (no light
/// reaches any receiver).
double optimal_eta_star(const BroadcastSpec& spec);

struct CutBounds {
  double b_cut = 0.0;   // RC ; B
  double c_cut = 0.0;   // RB ; C
  double bc_cut = 0.0;  // R ; BC
  double tripartite = 0.0;
};

struct BoundReport {
  double eta_b = 0.0;
  double eta_c = 0.0;
  double bound_b_cut = 0.0;
  double bound_c_cut = 0.0;
  double bound_bc_cut = 0.0;
  /// Minimum over x of the tripartite asymptotic bound (at x = eta_star).
  double tripartite_bound = 0.0;
  /// The tripartite bound with eta_star substituted into the mirrored
  /// (x <-> 1-x) arrangement. Larger than tripartite_bound in general, and
  /// still a valid bound.
  double tripartite_bound_as_printed = 0.0;
  double eta_star = 0.5;
  /// Photon-number dependent values at the same squashing parameters.
  std::optional<double> mean_photon;
  std::optional<CutBounds> finite_ns;
};

/// Two-receiver report. Cuts use x = 1/2, which is optimal for them.
/// eta_b + eta_c >= 1 gives +inf bounds.
BoundReport theorem3_report(double eta_b, double eta_c, std::optional<double> mean_photon = std::nullopt);

/// Bound on a bipartite cut isolating a receiver group that collects
/// eta_group of the light, out of eta_total reaching all receivers:
/// log2(2 eta_group / (1 - eta_total) + 1) asymptotically.
double cut_bound_asymptotic(double eta_group, double eta_total);
double cut_bound_finite_ns(double eta_group, double eta_total, double ns);

}  // namespace sqb::bosonic
