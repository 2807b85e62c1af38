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

#include "sqb/squash.hpp"

#include <algorithm>
#include <cmath>

#include "sqb/errors.hpp"
#include "sqb/simplex.hpp"

namespace sqb {

namespace {

const Label kSquashed = "__squashed_E";

CMatrix isometry_from_params(std::span<const double> params, Eigen::Index n, Eigen::Index cols) {
  return unitary_from_params(params, n).leftCols(cols);
}

}  // namespace

void SquashConfig::validate() const {
  if (!(tol > 0)) throw SpecError("squash config: tol must be positive");
  if (restarts < 1) throw SpecError("squash config: restarts must be at least 1");
  if (max_iters < 0) throw SpecError("squash config: max_iters must be non-negative");
  if (squash_output_dim < 0 || ancilla_dim < 0) throw SpecError("squash config: dimensions must be non-negative");
  if (dim_cap < 1) throw SpecError("squash config: dim_cap must be positive");
}

BlockSpec block_spec_for(const MultipartiteState& state, const Partition& partition, Labels conditioning) {
  const LabelSet ground = partition.ground();
  LabelSet labels = make_set(state.labels());
  for (const auto& c : conditioning) labels.erase(std::remove(labels.begin(), labels.end(), c), labels.end());
  if (ground != labels)
    throw SpecError("partition " + partition.to_string() + " does not cover the state's subsystems {" +
                    format_set(labels) + "}");
  if (!partition.nontrivial()) throw SpecError("partition " + partition.to_string() + " is trivial");
  return BlockSpec{partition.blocks(), std::move(conditioning)};
}

double esq_exact_pure(const MultipartiteState& state, const Partition& partition, Measure measure) {
  const BlockSpec spec = block_spec_for(state, partition);
  if (!state.is_pure()) throw NotPure("squashed entanglement in closed form needs a pure state");
  return 0.5 * conditional_information(state, spec, measure);
}

std::vector<CMatrix> squashing_kraus(const std::vector<double>& params, int purifier_dim, int output_dim,
                                     int ancilla_dim) {
  const Eigen::Index n = Eigen::Index(output_dim) * ancilla_dim;
  if (static_cast<Eigen::Index>(params.size()) != n * n) throw DimMismatch("squashing_kraus: wrong parameter count");
  if (n < purifier_dim) throw DimMismatch("squashing_kraus: dilation smaller than the purifier");
  const CMatrix w = isometry_from_params(std::span<const double>(params), n, purifier_dim);
  std::vector<CMatrix> kraus(ancilla_dim, CMatrix(output_dim, purifier_dim));
  for (int j = 0; j < ancilla_dim; ++j)
    for (int e = 0; e < output_dim; ++e) kraus[j].row(e) = w.row(Eigen::Index(e) * ancilla_dim + j);
  return kraus;
}

SquashResult esq_upper_variational(const MultipartiteState& state, const Partition& partition, Measure measure,
                                   const SquashConfig& config) {
  config.validate();
  const BlockSpec plain = block_spec_for(state, partition);

  int rank = 0;
  const CVector phi = purification_vector(state, &rank);
  SquashResult result;
  result.measure = measure;
  result.extension.purifier_dim = rank;

  if (rank == 1) {
    result.value_bits = 0.5 * conditional_information(state, plain, measure);
    result.converged = true;
    result.extension.kind = "pure";
    return result;
  }

  const int k = config.squash_output_dim > 0 ? config.squash_output_dim : rank;
  const int f = config.ancilla_dim > 0 ? config.ancilla_dim : std::max(2, (rank + k - 1) / k);
  const Eigen::Index n = Eigen::Index(k) * f;
  if (n < rank)
    throw SpecError("squash config: output_dim * ancilla_dim = " + std::to_string(n) + " is below the purifier rank " +
                    std::to_string(rank));
  const Eigen::Index dl = state.dim();
  if (dl * std::max(k, rank) > config.dim_cap)
    throw TooLarge("squashing problem of total dimension " + std::to_string(dl * std::max(k, rank)) +
                   " exceeds the cap of " + std::to_string(config.dim_cap));

  result.extension.output_dim = k;
  result.extension.ancilla_dim = f;

  Labels ext_labels = state.labels();
  ext_labels.push_back(kSquashed);
  BlockSpec conditioned = plain;
  conditioned.conditioning = {kSquashed};

  // Trivial squashing channels: keep E as is, or throw it away.
  Dims id_dims = state.dims();
  id_dims.push_back(rank);
  const auto identity_state = MultipartiteState::assume_valid(phi * phi.adjoint(), ext_labels, id_dims);
  const double identity_value = 0.5 * conditional_information(identity_state, conditioned, measure);
  const double discard_value = 0.5 * conditional_information(state, plain, measure);

  // Nothing can go below zero: a trivial channel at zero is optimal.
  if (std::min(identity_value, discard_value) <= kRankTol) {
    const bool keep = identity_value <= discard_value;
    result.value_bits = std::max(0.0, keep ? identity_value : discard_value);
    result.converged = true;
    result.extension.kind = keep ? "identity" : "discard";
    return result;
  }

  // phi as a dl x rank matrix: rows index the state, columns the purifier.
  CMatrix phi_mat(dl, rank);
  for (Eigen::Index l = 0; l < dl; ++l)
    for (Eigen::Index e = 0; e < rank; ++e) phi_mat(l, e) = phi[l * rank + e];

  Dims sq_dims = state.dims();
  sq_dims.push_back(k);
  const Objective objective = [&](const RVector& x) {
    const CMatrix w = isometry_from_params(std::span<const double>(x.data(), x.size()), n, rank);
    const CMatrix psi = phi_mat * w.transpose();  // dl x (k * f)
    CMatrix v(dl * k, f);
    for (Eigen::Index l = 0; l < dl; ++l)
      for (Eigen::Index e = 0; e < k; ++e) v.row(l * k + e) = psi.row(l).segment(e * f, f);
    const auto omega = MultipartiteState::assume_valid(v * v.adjoint(), ext_labels, sq_dims);
    const double value = 0.5 * conditional_information(omega, conditioned, measure);
    return std::isfinite(value) ? value : 1e300;
  };

  MultiStartOptions opts;
  opts.restarts = config.restarts;
  opts.seed = config.seed;
  opts.threads = config.threads;
  opts.simplex.max_iters = config.max_iters;
  opts.simplex.ftol = config.tol;
  opts.simplex.xtol = 1e-9;
  const MultiStartResult search = minimize_multistart(objective, n * n, opts);

  result.value_bits = search.best.value;
  result.converged = search.best.converged;
  result.extension.kind = "stinespring";
  result.extension.best_restart = search.best_restart;
  result.extension.params.assign(search.best.x.data(), search.best.x.data() + search.best.x.size());
  if (identity_value <= result.value_bits) {
    result.value_bits = identity_value;
    result.converged = true;
    result.extension.kind = "identity";
    result.extension.params.clear();
    result.extension.best_restart = -1;
  }
  if (discard_value < result.value_bits) {
    result.value_bits = discard_value;
    result.converged = true;
    result.extension.kind = "discard";
    result.extension.params.clear();
    result.extension.best_restart = -1;
  }
  // Conditional informations are nonnegative; only rounding noise can dip below.
  if (result.value_bits < 0.0 && result.value_bits > -kNegativeEigenTol) result.value_bits = 0.0;
  return result;
}

double esq_cq_average(const std::vector<std::pair<double, MultipartiteState>>& ensemble, const Partition& partition,
                      Measure measure) {
  if (ensemble.empty()) throw SpecError("esq_cq_average: empty ensemble");
  double total_p = 0.0, value = 0.0;
  for (const auto& [p, rho] : ensemble) {
    if (p < 0) throw DomainError("esq_cq_average: negative probability");
    total_p += p;
    value += p * esq_exact_pure(rho, partition, measure);
  }
  if (std::abs(total_p - 1.0) > 1e-9) throw DomainError("esq_cq_average: probabilities do not sum to 1");
  return value;
}

}  // namespace sqb
