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

#include <span>
#include <string_view>
#include <vector>

#include "sqb/errors.hpp"
#include "sqb/state.hpp"

namespace sqb {

/// The two multipartite generalizations of conditional mutual information
/// and their squashed counterparts. For two blocks they coincide.
enum class Measure { esq, esq_tilde };

std::string_view to_string(Measure m);

/// Groupings A_1; ...; A_m | E of the subsystems of a state.
struct BlockSpec {
  std::vector<Labels> blocks;
  Labels conditioning;

  /// Throws SpecError unless there are >= 2 non-empty, pairwise disjoint
  /// blocks, the conditioning set is disjoint from all of them, and every
  /// label exists in `state`.
  void validate(const MultipartiteState& state) const;
};

/// -sum p log2 p over the spectrum of a density matrix, dropping eigenvalues
/// below 1e-12. Eigenvalues in [-1e-10, 0) are clamped to 0; anything more
/// negative is rejected.
template <typename Derived>
double von_neumann_entropy(const Eigen::MatrixBase<Derived>& rho) {
  const auto ev = hermitian_eigenvalues(rho);
  double h = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    const double p = static_cast<double>(ev[i]);
    if (p < -kNegativeEigenTol) throw InvalidState("density matrix has eigenvalue " + std::to_string(p));
    if (p > kRankTol) h -= p * std::log2(p);
  }
  return h;
}

/// Entropy in bits of the reduction to `subset` (non-empty).
double entropy(const MultipartiteState& state, std::span<const Label> subset);

/// I(A;B|E) = H(AE) + H(BE) - H(E) - H(ABE). E may be empty.
double qcmi(const MultipartiteState& state, std::span<const Label> a, std::span<const Label> b,
            std::span<const Label> e);

/// I(A_1;...;A_m|E) = sum_i H(A_i|E) - H(A_1...A_m|E).
double cmi_total(const MultipartiteState& state, const BlockSpec& spec);

/// I~(A_1;...;A_m|E) = sum_i H(A_[m]\i|E) - (m-1) H(A_1...A_m|E).
double cmi_dual_measure(const MultipartiteState& state, const BlockSpec& spec);

/// I~ through its second expansion, H(A_1..A_m|E) - sum_i H(A_i|A_[m]\i E).
/// Algebraically equal to cmi_dual_measure; kept as an independent route.
double cmi_dual_measure_conditional_form(const MultipartiteState& state, const BlockSpec& spec);

struct ConditionalInformation {
  double total = 0.0;  // I
  double dual = 0.0;   // I~
  double get(Measure m) const { return m == Measure::esq ? total : dual; }
};

/// Both measures, sharing the entropy evaluations they have in common.
ConditionalInformation conditional_informations(const MultipartiteState& state, const BlockSpec& spec);

double conditional_information(const MultipartiteState& state, const BlockSpec& spec, Measure measure);

}  // namespace sqb
