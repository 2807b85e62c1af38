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

#include "sqb/bosonic.hpp"

#include <cmath>

namespace sqb::bosonic {

namespace {

constexpr double kEtaSlack = 1e-12;

}  // namespace

void BroadcastSpec::validate() const {
  if (etas.empty()) throw DomainError("bosonic spec: at least one receiver is required");
  for (double e : etas)
    if (!(e >= 0.0) || !std::isfinite(e)) throw DomainError("bosonic spec: every eta_i must be >= 0");
  if (eta_total() > 1.0 + kEtaSlack) throw DomainError("bosonic spec: eta_total = sum eta_i must be <= 1");
  if (mean_photon && !(*mean_photon >= 0.0 && std::isfinite(*mean_photon)))
    throw DomainError("bosonic spec: N_S must be finite and >= 0");
}

double finite_ns_bound(const BroadcastSpec& spec, double eta_eprime, Measure measure) {
  spec.validate();
  if (!spec.mean_photon) throw DomainError("finite_ns_bound: spec has no mean photon number");
  return finite_ns_bound<double>(spec.etas, std::min(1.0, spec.eta_total()), *spec.mean_photon, eta_eprime, measure);
}

double asymptotic_bound(const BroadcastSpec& spec, double eta_eprime, Measure measure) {
  spec.validate();
  return asymptotic_bound<double>(spec.etas, std::min(1.0, spec.eta_total()), eta_eprime, measure);
}

double optimal_eta_star(const BroadcastSpec& spec) {
  spec.validate();
  const double eta = std::min(1.0, spec.eta_total());
  if (!(eta > 0)) throw RootError("optimal_eta_star: no light reaches any receiver, the bound is flat in eta_E'");
  double lo = 1e-9, hi = 1.0 - 1e-9;
  double flo = stationarity_residual(spec.etas, eta, lo);
  const double fhi = stationarity_residual(spec.etas, eta, hi);
  if (!(flo > 0 && fhi < 0)) throw RootError("optimal_eta_star: stationarity residual does not change sign");
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    const double fm = stationarity_residual(spec.etas, eta, mid);
    if (fm == 0.0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double cut_bound_asymptotic(double eta_group, double eta_total) {
  if (!(eta_group >= 0 && eta_total >= eta_group - kEtaSlack && eta_total <= 1 + kEtaSlack))
    throw DomainError("cut bound: need 0 <= eta_group <= eta_total <= 1");
  if (eta_group == 0) return 0.0;
  const double loss = 1.0 - eta_total;
  if (!(loss > 0)) return kInf<double>;
  return std::log2(2.0 * eta_group / loss + 1.0);
}

double cut_bound_finite_ns(double eta_group, double eta_total, double ns) {
  if (!(eta_group >= 0 && eta_total >= eta_group - kEtaSlack && eta_total <= 1 + kEtaSlack))
    throw DomainError("cut bound: need 0 <= eta_group <= eta_total <= 1");
  if (!(ns >= 0)) throw DomainError("cut bound: N_S must be >= 0");
  const double half_loss = 0.5 * std::max(0.0, 1.0 - eta_total);
  return std::max(0.0, g((eta_group + half_loss) * ns) - g(half_loss * ns));
}

BoundReport theorem3_report(double eta_b, double eta_c, std::optional<double> mean_photon) {
  if (!(eta_b >= 0 && eta_c >= 0)) throw DomainError("theorem3_report: eta_b and eta_c must be >= 0");
  if (mean_photon && !(*mean_photon >= 0)) throw DomainError("theorem3_report: N_S must be >= 0");
  BoundReport r;
  r.eta_b = eta_b;
  r.eta_c = eta_c;
  r.mean_photon = mean_photon;
  const double eta = eta_b + eta_c;

  if (eta >= 1.0) {
    // Lossless (or unphysical) splitting: nothing bounds the rates.
    r.bound_b_cut = r.bound_c_cut = r.bound_bc_cut = kInf<double>;
    r.tripartite_bound = r.tripartite_bound_as_printed = kInf<double>;
    if (eta == 1.0 && eta_b > 0 && eta_c > 0) {
      BroadcastSpec spec{{eta_b, eta_c}, std::nullopt};
      r.eta_star = optimal_eta_star(spec);
    }
    if (mean_photon && eta <= 1.0) {
      CutBounds f;
      f.b_cut = cut_bound_finite_ns(eta_b, eta, *mean_photon);
      f.c_cut = cut_bound_finite_ns(eta_c, eta, *mean_photon);
      f.bc_cut = cut_bound_finite_ns(eta, eta, *mean_photon);
      f.tripartite = finite_ns_bound<double>({eta_b, eta_c}, eta, *mean_photon, r.eta_star, Measure::esq);
      r.finite_ns = f;
    }
    return r;
  }

  r.bound_b_cut = cut_bound_asymptotic(eta_b, eta);
  r.bound_c_cut = cut_bound_asymptotic(eta_c, eta);
  r.bound_bc_cut = cut_bound_asymptotic(eta, eta);

  const std::vector<double> etas{eta_b, eta_c};
  if (eta > 0) {
    r.eta_star = optimal_eta_star(BroadcastSpec{etas, std::nullopt});
    r.tripartite_bound = asymptotic_bound<double>(etas, eta, r.eta_star, Measure::esq);
    r.tripartite_bound_as_printed = asymptotic_bound<double>(etas, eta, r.eta_star, Measure::esq_tilde);
  }

  if (mean_photon) {
    CutBounds f;
    f.b_cut = cut_bound_finite_ns(eta_b, eta, *mean_photon);
    f.c_cut = cut_bound_finite_ns(eta_c, eta, *mean_photon);
    f.bc_cut = cut_bound_finite_ns(eta, eta, *mean_photon);
    f.tripartite = finite_ns_bound<double>(etas, eta, *mean_photon, r.eta_star, Measure::esq);
    r.finite_ns = f;
  }
  return r;
}

}  // namespace sqb::bosonic
