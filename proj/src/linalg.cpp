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

#include "sqb/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace sqb {

namespace {

std::vector<Eigen::Index> strides_of(std::span<const int> dims) {
  std::vector<Eigen::Index> strides(dims.size(), 1);
  for (int k = static_cast<int>(dims.size()) - 2; k >= 0; --k) strides[k] = strides[k + 1] * dims[k + 1];
  return strides;
}

// Offsets into the full index space for every joint value of the factors at
// `positions`, enumerated with positions[0] as the most significant digit.
std::vector<Eigen::Index> offsets_of(std::span<const int> dims, std::span<const int> positions) {
  const auto strides = strides_of(dims);
  std::vector<Eigen::Index> offsets{0};
  for (int p : positions) {
    std::vector<Eigen::Index> next;
    next.reserve(offsets.size() * dims[p]);
    for (Eigen::Index base : offsets)
      for (int digit = 0; digit < dims[p]; ++digit) next.push_back(base + digit * strides[p]);
    offsets = std::move(next);
  }
  return offsets;
}

}  // namespace

Eigen::Index product(std::span<const int> dims) {
  return std::accumulate(dims.begin(), dims.end(), Eigen::Index{1},
                         [](Eigen::Index a, int b) { return a * b; });
}

CMatrix permute_subsystems(const CMatrix& m, std::span<const int> dims, std::span<const int> perm) {
  const auto off = offsets_of(dims, perm);
  const auto n = static_cast<Eigen::Index>(off.size());
  CMatrix out(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) out(i, j) = m(off[i], off[j]);
  return out;
}

CMatrix partial_trace_positions(const CMatrix& m, std::span<const int> dims, std::span<const int> keep) {
  std::vector<int> traced;
  for (int k = 0; k < static_cast<int>(dims.size()); ++k)
    if (std::find(keep.begin(), keep.end(), k) == keep.end()) traced.push_back(k);
  const auto kept_off = offsets_of(dims, keep);
  const auto traced_off = offsets_of(dims, traced);
  const auto n = static_cast<Eigen::Index>(kept_off.size());
  CMatrix out = CMatrix::Zero(n, n);
  for (Eigen::Index t : traced_off)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < n; ++i) out(i, j) += m(kept_off[i] + t, kept_off[j] + t);
  return out;
}

double trace_norm_half(const CMatrix& hermitian) {
  return 0.5 * hermitian_eigenvalues(hermitian).cwiseAbs().sum();
}

}  // namespace sqb
