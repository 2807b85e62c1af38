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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sqb/measures.hpp"
#include "sqb/partitions.hpp"

namespace sqb {

struct SquashConfig {
  /// Dimension of the squashed purifier E'. 0 selects the purifier rank.
  int squash_output_dim = 0;
  /// Dimension of the Stinespring factor traced out after the squashing
  /// unitary. 0 selects max(2, ceil(rank / squash_output_dim)).
  int ancilla_dim = 0;
  int restarts = 20;
  int max_iters = 2000;
  double tol = 1e-8;
  std::uint64_t seed = 0;
  /// Largest allowed dim(state) * dim(E').
  Eigen::Index dim_cap = 64;
  int threads = 1;

  void validate() const;
};

/// Where the reported value came from.
struct SquashExtension {
  /// "pure" (closed form), "identity" (E' = E), "discard" (E' trivial) or
  /// "stinespring" (optimized channel, parameters in `params`).
  std::string kind;
  int purifier_dim = 1;
  int output_dim = 1;
  int ancilla_dim = 1;
  int best_restart = -1;
  std::vector<double> params;
};

struct SquashResult {
  double value_bits = 0.0;
  Measure measure = Measure::esq;
  bool converged = false;
  SquashExtension extension;
};

/// Blocks of `partition` as a BlockSpec on `state`; the partition must cover
/// exactly the labels of the state.
BlockSpec block_spec_for(const MultipartiteState& state, const Partition& partition, Labels conditioning = {});

/// Squashed entanglement of a pure state: half the unconditioned measure.
/// Throws NotPure when the largest eigenvalue is below 1 - 1e-9.
double esq_exact_pure(const MultipartiteState& state, const Partition& partition, Measure measure);

/// Upper bound on the squashed entanglement from a search over squashing
/// channels E -> E' acting on a purification of `state`. The channel is the
/// Stinespring dilation exp(iH) restricted to the purifier, followed by a
/// partial trace; H is optimized by multi-start Nelder-Mead. The identity
/// and fully discarding channels are always evaluated too, so the result
/// never exceeds half of either unsquashed value.
SquashResult esq_upper_variational(const MultipartiteState& state, const Partition& partition, Measure measure,
                                   const SquashConfig& config = {});

/// sum_x p(x) Esq(rho_x) for an ensemble of pure states; equals the squashed
/// entanglement of the flagged state with the flag held by the first block.
double esq_cq_average(const std::vector<std::pair<double, MultipartiteState>>& ensemble, const Partition& partition,
                      Measure measure = Measure::esq);

/// Squashing channel with Kraus operators read from a Stinespring isometry
/// (output index e' * ancilla + j). Exposed for tests.
std::vector<CMatrix> squashing_kraus(const std::vector<double>& params, int purifier_dim, int output_dim,
                                     int ancilla_dim);

}  // namespace sqb
