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

#include "sqb/state.hpp"

#include <algorithm>
#include <set>

#include "sqb/errors.hpp"

namespace sqb {

namespace {

void check_structure(const CMatrix& m, const Labels& labels, const Dims& dims) {
  if (labels.size() != dims.size())
    throw DimMismatch("state: " + std::to_string(labels.size()) + " labels but " + std::to_string(dims.size()) +
                      " dims");
  if (std::any_of(dims.begin(), dims.end(), [](int d) { return d < 1; }))
    throw DimMismatch("state: subsystem dimensions must be positive");
  if (std::set<Label>(labels.begin(), labels.end()).size() != labels.size())
    throw LabelCollision("state: labels are not unique");
  if (m.rows() != m.cols()) throw DimMismatch("state: matrix is not square");
  if (m.rows() != product(dims))
    throw DimMismatch("state: product of dims (" + std::to_string(product(dims)) + ") != matrix dimension (" +
                      std::to_string(m.rows()) + ")");
}

// Index of every label of `wanted` inside `labels`, in `wanted` order.
std::vector<int> positions_of(const MultipartiteState& s, std::span<const Label> wanted) {
  std::vector<int> pos;
  pos.reserve(wanted.size());
  for (const auto& l : wanted) pos.push_back(s.position(l));
  return pos;
}

}  // namespace

MultipartiteState::MultipartiteState(CMatrix matrix, Labels labels, Dims dims)
    : matrix_(std::move(matrix)), labels_(std::move(labels)), dims_(std::move(dims)) {}

MultipartiteState MultipartiteState::assume_valid(CMatrix matrix, Labels labels, Dims dims) {
  check_structure(matrix, labels, dims);
  return MultipartiteState(std::move(matrix), std::move(labels), std::move(dims));
}

MultipartiteState MultipartiteState::from_matrix(CMatrix matrix, Labels labels, Dims dims) {
  check_structure(matrix, labels, dims);
  if (!matrix.allFinite()) throw InvalidState("density matrix has non-finite entries");
  const double herm = hermiticity_defect(matrix);
  if (herm > kHermitianTol)
    throw InvalidState("density matrix is not Hermitian (max deviation " + std::to_string(herm) + ")");
  const Complex tr = matrix.trace();
  if (std::abs(tr - Complex(1.0)) > kTraceTol)
    throw InvalidState("density matrix trace is " + std::to_string(tr.real()) + ", expected 1");
  CMatrix h = hermitian_part(matrix);
  density_eigenvalues(h);
  return MultipartiteState(std::move(h), std::move(labels), std::move(dims));
}

MultipartiteState MultipartiteState::from_pure(const CVector& psi, Labels labels, Dims dims) {
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > 1e-9) throw InvalidState("state vector is not normalized");
  return assume_valid(psi * psi.adjoint(), std::move(labels), std::move(dims));
}

bool MultipartiteState::has_label(const Label& label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

int MultipartiteState::position(const Label& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw LabelNotFound("unknown subsystem label '" + label + "'");
  return static_cast<int>(it - labels_.begin());
}

bool MultipartiteState::is_pure(double tol) const {
  return hermitian_eigenvalues(matrix_).maxCoeff() >= 1.0 - tol;
}

RVector density_eigenvalues(const CMatrix& rho) {
  RVector ev = hermitian_eigenvalues(rho);
  if (ev.size() > 0 && ev.minCoeff() < -kNegativeEigenTol)
    throw InvalidState("density matrix is not positive semidefinite (eigenvalue " +
                       std::to_string(ev.minCoeff()) + ")");
  return ev.cwiseMax(0.0);
}

// ---------------------------------------------------------------------------
// channels

QuantumChannel QuantumChannel::from_kraus(std::vector<CMatrix> kraus, int input_dim, Labels output_labels,
                                          Dims output_dims) {
  if (kraus.empty()) throw InvalidChannel("channel has no Kraus operators");
  if (input_dim < 1) throw DimMismatch("channel input dimension must be positive");
  if (output_labels.size() != output_dims.size()) throw DimMismatch("channel output labels/dims differ in length");
  if (std::set<Label>(output_labels.begin(), output_labels.end()).size() != output_labels.size())
    throw LabelCollision("channel output labels are not unique");
  const auto out_dim = product(output_dims);
  CMatrix sum = CMatrix::Zero(input_dim, input_dim);
  for (const auto& k : kraus) {
    if (k.rows() != out_dim || k.cols() != input_dim)
      throw DimMismatch("Kraus operator has shape " + std::to_string(k.rows()) + "x" + std::to_string(k.cols()) +
                        ", expected " + std::to_string(out_dim) + "x" + std::to_string(input_dim));
    sum += k.adjoint() * k;
  }
  const double defect = (sum - CMatrix::Identity(input_dim, input_dim)).cwiseAbs().maxCoeff();
  if (defect > 1e-9)
    throw InvalidChannel("channel is not trace preserving: sum K^dagger K deviates from identity by " +
                         std::to_string(defect));
  QuantumChannel ch;
  ch.kraus_ = std::move(kraus);
  ch.input_dim_ = input_dim;
  ch.output_labels_ = std::move(output_labels);
  ch.output_dims_ = std::move(output_dims);
  return ch;
}

QuantumChannel QuantumChannel::from_isometry(const CMatrix& v, Labels output_labels, Dims output_dims) {
  return from_kraus({v}, static_cast<int>(v.cols()), std::move(output_labels), std::move(output_dims));
}

// ---------------------------------------------------------------------------
// operations

MultipartiteState tensor(std::span<const MultipartiteState> parts) {
  if (parts.empty()) throw SpecError("tensor: no parts");
  CMatrix m = parts[0].matrix();
  Labels labels = parts[0].labels();
  Dims dims = parts[0].dims();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    for (const auto& l : parts[i].labels())
      if (std::find(labels.begin(), labels.end(), l) != labels.end())
        throw LabelCollision("tensor: label '" + l + "' appears in more than one part");
    m = kron(m, parts[i].matrix());
    labels.insert(labels.end(), parts[i].labels().begin(), parts[i].labels().end());
    dims.insert(dims.end(), parts[i].dims().begin(), parts[i].dims().end());
  }
  return MultipartiteState::assume_valid(std::move(m), std::move(labels), std::move(dims));
}

MultipartiteState tensor(const MultipartiteState& a, const MultipartiteState& b) {
  const MultipartiteState parts[] = {a, b};
  return tensor(parts);
}

MultipartiteState partial_trace(const MultipartiteState& state, std::span<const Label> keep) {
  if (keep.empty()) throw EmptySubset("partial_trace: nothing to keep");
  auto pos = positions_of(state, keep);
  std::sort(pos.begin(), pos.end());
  if (std::adjacent_find(pos.begin(), pos.end()) != pos.end())
    throw LabelCollision("partial_trace: repeated label");
  Labels labels;
  Dims dims;
  for (int p : pos) {
    labels.push_back(state.labels()[p]);
    dims.push_back(state.dims()[p]);
  }
  if (pos.size() == state.labels().size()) return state;
  return MultipartiteState::assume_valid(partial_trace_positions(state.matrix(), state.dims(), pos),
                                         std::move(labels), std::move(dims));
}

CVector purification_vector(const MultipartiteState& state, int* purifier_dim) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(state.matrix());
  const RVector& ev = solver.eigenvalues();
  if (ev.minCoeff() < -kNegativeEigenTol) throw InvalidState("purify: state is not positive semidefinite");
  std::vector<Eigen::Index> support;
  for (Eigen::Index k = ev.size() - 1; k >= 0; --k)
    if (ev[k] > kRankTol) support.push_back(k);
  const auto r = static_cast<Eigen::Index>(support.size());
  const auto n = state.dim();
  double weight = 0.0;
  for (auto k : support) weight += ev[k];
  CVector psi = CVector::Zero(n * r);
  for (Eigen::Index j = 0; j < r; ++j) {
    const double amp = std::sqrt(ev[support[j]] / weight);
    for (Eigen::Index i = 0; i < n; ++i) psi[i * r + j] = amp * solver.eigenvectors()(i, support[j]);
  }
  if (purifier_dim) *purifier_dim = static_cast<int>(r);
  return psi;
}

MultipartiteState purify(const MultipartiteState& state, const Label& purifier_label) {
  if (state.has_label(purifier_label)) throw LabelCollision("purify: label '" + purifier_label + "' already present");
  int r = 0;
  CVector psi = purification_vector(state, &r);
  Labels labels = state.labels();
  Dims dims = state.dims();
  labels.push_back(purifier_label);
  dims.push_back(r);
  return MultipartiteState::assume_valid(psi * psi.adjoint(), std::move(labels), std::move(dims));
}

MultipartiteState apply_channel(const QuantumChannel& channel, const MultipartiteState& state, const Label& target) {
  const int p = state.position(target);
  const int din = state.dims()[p];
  if (din != channel.input_dim())
    throw DimMismatch("apply_channel: subsystem '" + target + "' has dimension " + std::to_string(din) +
                      " but the channel expects " + std::to_string(channel.input_dim()));
  const int n = static_cast<int>(state.labels().size());
  for (const auto& l : channel.output_labels())
    if (l != target && state.has_label(l))
      throw LabelCollision("apply_channel: output label '" + l + "' already present");

  // Move the target to the last slot so the map acts on contiguous blocks.
  std::vector<int> to_back;
  for (int k = 0; k < n; ++k)
    if (k != p) to_back.push_back(k);
  to_back.push_back(p);
  const CMatrix rho = permute_subsystems(state.matrix(), state.dims(), to_back);

  const int dout = channel.output_dim();
  const Eigen::Index rest = state.dim() / din;
  CMatrix out = CMatrix::Zero(rest * dout, rest * dout);
  for (const auto& k : channel.kraus()) {
    const CMatrix kd = k.adjoint();
    for (Eigen::Index j = 0; j < rest; ++j)
      for (Eigen::Index i = 0; i < rest; ++i)
        out.block(i * dout, j * dout, dout, dout).noalias() += k * rho.block(i * din, j * din, din, din) * kd;
  }

  Labels labels;
  Dims dims;
  for (int k = 0; k < n; ++k)
    if (k != p) {
      labels.push_back(state.labels()[k]);
      dims.push_back(state.dims()[k]);
    }
  const int nout = static_cast<int>(channel.output_labels().size());
  labels.insert(labels.end(), channel.output_labels().begin(), channel.output_labels().end());
  dims.insert(dims.end(), channel.output_dims().begin(), channel.output_dims().end());

  // Put the outputs back where the target was.
  std::vector<int> back;
  for (int k = 0; k < p; ++k) back.push_back(k);
  for (int k = 0; k < nout; ++k) back.push_back(n - 1 + k);
  for (int k = p; k < n - 1; ++k) back.push_back(k);
  CMatrix placed = permute_subsystems(out, dims, back);
  Labels final_labels;
  Dims final_dims;
  for (int k : back) {
    final_labels.push_back(labels[k]);
    final_dims.push_back(dims[k]);
  }
  return MultipartiteState::assume_valid(hermitian_part(placed), std::move(final_labels), std::move(final_dims));
}

MultipartiteState make_ghz(const Labels& labels, int d) {
  const int m = static_cast<int>(labels.size());
  if (m < 2) throw SpecError("make_ghz: needs at least two parties");
  if (d < 2) throw SpecError("make_ghz: Schmidt rank must be at least 2");
  Dims dims(m, d);
  const auto n = product(dims);
  Eigen::Index step = 0;
  for (Eigen::Index s = 1, k = 0; k < m; ++k, s *= d) step += s;
  CVector psi = CVector::Zero(n);
  for (int i = 0; i < d; ++i) psi[i * step] = 1.0 / std::sqrt(static_cast<double>(d));
  return MultipartiteState::from_pure(psi, labels, std::move(dims));
}

MultipartiteState maximally_mixed(const Label& label, int d) {
  return MultipartiteState::assume_valid(CMatrix::Identity(d, d) / static_cast<double>(d), {label}, {d});
}

MultipartiteState basis_state(const Label& label, int d, int index) {
  if (index < 0 || index >= d) throw DomainError("basis_state: index out of range");
  CVector v = CVector::Zero(d);
  v[index] = 1.0;
  return MultipartiteState::from_pure(v, {label}, {d});
}

void PrivateStateSpec::validate() const {
  if (num_parties < 2) throw SpecError("private state: need at least two parties");
  if (key_dim < 2) throw SpecError("private state: key dimension must be at least 2");
  if (static_cast<int>(shield_dims.size()) != num_parties)
    throw DimMismatch("private state: need one shield dimension per party");
  if (std::any_of(shield_dims.begin(), shield_dims.end(), [](int d) { return d < 1; }))
    throw DimMismatch("private state: shield dimensions must be positive");
  const auto s = product(shield_dims);
  Eigen::Index keys = 1;
  for (int i = 0; i < num_parties; ++i) keys *= key_dim;
  if (!twist_unitaries.empty()) {
    if (static_cast<Eigen::Index>(twist_unitaries.size()) != keys)
      throw DimMismatch("private state: expected " + std::to_string(keys) + " twisting unitaries");
    for (const auto& u : twist_unitaries) {
      if (u.rows() != s || u.cols() != s) throw DimMismatch("private state: twisting unitary has wrong shape");
      if ((u.adjoint() * u - CMatrix::Identity(s, s)).cwiseAbs().maxCoeff() > 1e-10)
        throw SpecError("private state: twisting unitary is not unitary");
    }
  }
  if (shield_state) {
    if (shield_state->rows() != s || shield_state->cols() != s)
      throw DimMismatch("private state: shield state has wrong shape");
    MultipartiteState::from_matrix(*shield_state, {"shield"}, {static_cast<int>(s)});
  }
}

MultipartiteState make_private_state(const PrivateStateSpec& spec, const Labels& key_labels,
                                     const Labels& shield_labels) {
  spec.validate();
  if (static_cast<int>(key_labels.size()) != spec.num_parties ||
      static_cast<int>(shield_labels.size()) != spec.num_parties)
    throw DimMismatch("make_private_state: need one key and one shield label per party");
  const auto s = product(spec.shield_dims);
  const MultipartiteState key = make_ghz(key_labels, spec.key_dim);
  const CMatrix shield = spec.shield_state ? *spec.shield_state : CMatrix(CMatrix::Identity(s, s) / double(s));
  CMatrix rho = kron(key.matrix(), shield);
  if (!spec.twist_unitaries.empty()) {
    const auto keys = key.dim();
    CMatrix u = CMatrix::Zero(keys * s, keys * s);
    for (Eigen::Index k = 0; k < keys; ++k) u.block(k * s, k * s, s, s) = spec.twist_unitaries[k];
    rho = u * rho * u.adjoint();
  }
  Labels labels = key_labels;
  labels.insert(labels.end(), shield_labels.begin(), shield_labels.end());
  Dims dims(spec.num_parties, spec.key_dim);
  dims.insert(dims.end(), spec.shield_dims.begin(), spec.shield_dims.end());
  return MultipartiteState::assume_valid(hermitian_part(rho), std::move(labels), std::move(dims));
}

PrivateStateCheck check_private_state(const MultipartiteState& state, const Labels& key_labels,
                                      const Labels& shield_labels, int d) {
  for (const auto& l : key_labels)
    if (state.dim_of(l) != d) throw DimMismatch("check_private_state: key '" + l + "' is not of dimension d");
  for (const auto& l : shield_labels) state.position(l);

  const Label purifier = "__purifier";
  const MultipartiteState pure = purify(state, purifier);
  const auto& dims = pure.dims();
  const auto key_pos = positions_of(pure, key_labels);

  // Measure every key system in the computational basis: drop coherences
  // between different key outcomes.
  const auto n = pure.dim();
  std::vector<Eigen::Index> strides(dims.size(), 1);
  for (int k = static_cast<int>(dims.size()) - 2; k >= 0; --k) strides[k] = strides[k + 1] * dims[k + 1];
  std::vector<Eigen::Index> code(n, 0);
  for (Eigen::Index i = 0; i < n; ++i)
    for (int p : key_pos) code[i] = code[i] * d + (i / strides[p]) % d;
  CMatrix measured = pure.matrix();
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i)
      if (code[i] != code[j]) measured(i, j) = 0.0;

  Labels keep;
  for (const auto& l : pure.labels())
    if (std::find(shield_labels.begin(), shield_labels.end(), l) == shield_labels.end()) keep.push_back(l);
  const auto dephased = MultipartiteState::assume_valid(std::move(measured), pure.labels(), pure.dims());
  const MultipartiteState keyed = partial_trace(dephased, keep);
  const Label e_only[] = {purifier};
  const MultipartiteState sigma = partial_trace(keyed, e_only);

  // (1/d) sum_i |i..i><i..i| (x) sigma_E over the keys that remain in `keyed`.
  Labels keys_kept;
  for (const auto& l : keyed.labels())
    if (l != purifier) keys_kept.push_back(l);
  const auto nkeys = static_cast<Eigen::Index>(keys_kept.size());
  Eigen::Index kdim = 1, step = 0;
  for (Eigen::Index k = 0, s = 1; k < nkeys; ++k, s *= d) {
    kdim *= d;
    step += s;
  }
  CMatrix ideal_key = CMatrix::Zero(kdim, kdim);
  for (int i = 0; i < d; ++i) ideal_key(i * step, i * step) = 1.0 / d;
  // keyed has the purifier last and the key labels in state order; any other
  // (non-key, non-shield) subsystems are not allowed to carry key data.
  if (keyed.dim() != kdim * sigma.dim())
    throw SpecError("check_private_state: state has systems that are neither key nor shield");
  const CMatrix ideal = kron(ideal_key, sigma.matrix());
  PrivateStateCheck result;
  result.deviation = trace_norm_half(keyed.matrix() - ideal);
  result.is_private = result.deviation <= 1e-8;
  return result;
}

double trace_distance(const MultipartiteState& a, const MultipartiteState& b) {
  if (a.labels() != b.labels() || a.dims() != b.dims())
    throw DimMismatch("trace_distance: states have different subsystem structure");
  return trace_norm_half(a.matrix() - b.matrix());
}

}  // namespace sqb
