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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sqb/linalg.hpp"

namespace sqb {

using Label = std::string;
using Labels = std::vector<Label>;

/// Tolerances on the density-operator invariants.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kNegativeEigenTol = 1e-10;
/// Eigenvalues at or below this are treated as zero (rank, entropy sums).
inline constexpr double kRankTol = 1e-12;

/// Density operator on an ordered list of labelled subsystems.
///
/// Values are immutable; every operation below returns a new state. The
/// matrix index is the mixed-radix number formed by the subsystem indices
/// with labels()[0] most significant.
class MultipartiteState {
 public:
  /// Validates every invariant (Hermitian, unit trace, positive, dims/labels
  /// consistent) and throws InvalidState / DimMismatch / LabelCollision.
  static MultipartiteState from_matrix(CMatrix matrix, Labels labels, Dims dims);

  /// Checks only the structural invariants. For results of operations that
  /// preserve positivity and trace by construction.
  static MultipartiteState assume_valid(CMatrix matrix, Labels labels, Dims dims);

  static MultipartiteState from_pure(const CVector& psi, Labels labels, Dims dims);

  const CMatrix& matrix() const { return matrix_; }
  const Labels& labels() const { return labels_; }
  const Dims& dims() const { return dims_; }
  Eigen::Index dim() const { return matrix_.rows(); }

  bool has_label(const Label& label) const;
  /// Position of label; throws LabelNotFound.
  int position(const Label& label) const;
  int dim_of(const Label& label) const { return dims_[position(label)]; }

  /// Largest eigenvalue >= 1 - tol.
  bool is_pure(double tol = 1e-9) const;

 private:
  MultipartiteState(CMatrix matrix, Labels labels, Dims dims);

  CMatrix matrix_;
  Labels labels_;
  Dims dims_;
};

/// CPTP map given by Kraus operators, with a labelled factorization of the
/// output space (one factor per receiver for broadcast channels).
class QuantumChannel {
 public:
  /// Throws InvalidChannel when sum K^dagger K differs from identity by more
  /// than 1e-9, DimMismatch on inconsistent shapes.
  static QuantumChannel from_kraus(std::vector<CMatrix> kraus, int input_dim, Labels output_labels,
                                   Dims output_dims);
  static QuantumChannel from_isometry(const CMatrix& v, Labels output_labels, Dims output_dims);

  const std::vector<CMatrix>& kraus() const { return kraus_; }
  int input_dim() const { return input_dim_; }
  int output_dim() const { return static_cast<int>(product(output_dims_)); }
  const Labels& output_labels() const { return output_labels_; }
  const Dims& output_dims() const { return output_dims_; }

 private:
  QuantumChannel() = default;

  std::vector<CMatrix> kraus_;
  int input_dim_ = 0;
  Labels output_labels_;
  Dims output_dims_;
};

/// Parameters of U (Phi (x) rho_shield) U^dagger with Phi a GHZ key state and
/// U = sum_i |i1..im><i1..im| (x) U^{i1..im} a twisting unitary.
struct PrivateStateSpec {
  int num_parties = 2;
  int key_dim = 2;
  Dims shield_dims;
  /// key_dim^num_parties unitaries on the joint shield space, indexed by the
  /// key tuple read as a base-key_dim number. Empty means all identity.
  std::vector<CMatrix> twist_unitaries;
  /// Joint shield state; maximally mixed when absent.
  std::optional<CMatrix> shield_state;

  void validate() const;
};

struct PrivateStateCheck {
  bool is_private = false;
  /// Trace distance from the ideal measured key state.
  double deviation = 0.0;
};

MultipartiteState tensor(std::span<const MultipartiteState> parts);
MultipartiteState tensor(const MultipartiteState& a, const MultipartiteState& b);

/// Reduced state on `keep`; the relative order of kept labels is preserved.
MultipartiteState partial_trace(const MultipartiteState& state, std::span<const Label> keep);

/// Purification with a purifier of dimension equal to the numerical rank,
/// appended as the last subsystem.
MultipartiteState purify(const MultipartiteState& state, const Label& purifier_label);
/// Same, returning the purified state vector.
CVector purification_vector(const MultipartiteState& state, int* purifier_dim = nullptr);

/// Applies the channel to subsystem `target`, which is replaced in place by
/// the channel's output labels.
MultipartiteState apply_channel(const QuantumChannel& channel, const MultipartiteState& state,
                                const Label& target);

MultipartiteState make_ghz(const Labels& labels, int d);
MultipartiteState maximally_mixed(const Label& label, int d);
MultipartiteState basis_state(const Label& label, int d, int index);

MultipartiteState make_private_state(const PrivateStateSpec& spec, const Labels& key_labels,
                                     const Labels& shield_labels);

PrivateStateCheck check_private_state(const MultipartiteState& state, const Labels& key_labels,
                                      const Labels& shield_labels, int d);

double trace_distance(const MultipartiteState& a, const MultipartiteState& b);

/// Eigenvalues with [-1e-10, 0] clamped to 0; throws InvalidState below that.
RVector density_eigenvalues(const CMatrix& rho);

}  // namespace sqb
