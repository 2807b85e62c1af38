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
#include <random>

#include "sqb/state.hpp"

namespace sqb {

using Rng = std::mt19937_64;

/// Independent stream for (seed, stream); used to give every optimizer
/// restart its own generator.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

CMatrix random_ginibre(Rng& rng, Eigen::Index rows, Eigen::Index cols);
/// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
CMatrix random_unitary(Rng& rng, Eigen::Index n);
/// Isometry C^in -> C^out, out >= in.
CMatrix random_isometry(Rng& rng, Eigen::Index out, Eigen::Index in);
CVector random_pure_vector(Rng& rng, Eigen::Index n);

MultipartiteState random_pure_state(Rng& rng, const Labels& labels, const Dims& dims);
/// Induced measure: trace over an environment of dimension env_dim (default
/// full rank).
MultipartiteState random_mixed_state(Rng& rng, const Labels& labels, const Dims& dims, int env_dim = 0);
/// Channel with Kraus rank `kraus_rank` from a random Stinespring isometry.
QuantumChannel random_channel(Rng& rng, int input_dim, const Labels& output_labels, const Dims& output_dims,
                              int kraus_rank = 2);

}  // namespace sqb
