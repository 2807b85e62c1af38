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

#include <array>
#include <map>
#include <string>
#include <vector>

#include "sqb/squash.hpp"

namespace sqb {

/// Reference system held by the sender, and the channel input it is
/// entangled with.
inline const Label kReference = "R";
inline const Label kChannelInput = "A";

enum class MeasureUsed { esq, esq_tilde, min_of_both };
std::string_view to_string(MeasureUsed m);

/// Search over pure channel inputs phi_RA with |R| = |A|.
struct InputSearchConfig {
  int restarts = 4;
  int max_iters = 500;
  double tol = 1e-8;
  std::uint64_t seed = 0;
};

struct InputFingerprint {
  std::vector<double> schmidt;  // squared Schmidt coefficients, descending
};

struct OptimizerMetadata {
  int restarts = 0;
  std::uint64_t seed = 0;
  bool converged = false;
  /// True when the output state at the reported input was pure, so the inner
  /// infimum was evaluated in closed form.
  bool exact_inner = false;
};

/// One inequality (1/2) sum_M |A(M,G)| (E_M + K_M) <= bound_bits.
struct RateConstraint {
  Partition partition;
  ConstraintCoefficients coefficients;
  /// M -> |A(M,G)| / 2
  std::map<LabelSet, double> weights;
  double bound_bits = 0.0;
  MeasureUsed measure_used = MeasureUsed::esq;
  InputFingerprint input;
  OptimizerMetadata optimizer;
};

/// N_{A->B1..Bm}(phi_RA) for a pure input on {R, A}.
MultipartiteState channel_output_state(const QuantumChannel& channel, const MultipartiteState& input);

/// Pure input sum_i sqrt(p_i) |i>_R (x) U|i>_A from d softmax weights and d^2
/// unitary generator parameters. All-zero parameters give the maximally
/// entangled input.
MultipartiteState input_from_params(const RVector& params, int d);

/// Bound for one partition at a fixed input: E_sq for bipartitions,
/// min{E_sq, E~_sq} otherwise (pure outputs in closed form, mixed outputs by
/// esq_upper_variational).
double bound_at_input(const QuantumChannel& channel, const MultipartiteState& input, const Partition& partition,
                      const SquashConfig& squash_cfg, bool* exact = nullptr);

/// Partitions of {R, B1..Bm}; an empty list means every nontrivial one.
std::vector<RateConstraint> evaluate_bounds(const QuantumChannel& channel, std::vector<Partition> partitions,
                                            const InputSearchConfig& cfg, const SquashConfig& squash_cfg);

/// Rate variables (E_AB, E_AC, E_BC, E_ABC, K_AB, K_AC, K_BC, K_ABC) with the
/// sender's reference R playing the role of A.
struct NamedConstraint {
  std::string name;  // "AC cut B", "AB cut C", "A cut BC", "ABC"
  std::array<double, 8> coefficients{};
  RateConstraint constraint;
};

/// The four two-receiver inequalities. Requires exactly two output labels.
std::array<NamedConstraint, 4> two_receiver_report(const QuantumChannel& channel, const InputSearchConfig& cfg,
                                                   const SquashConfig& squash_cfg);

}  // namespace sqb
