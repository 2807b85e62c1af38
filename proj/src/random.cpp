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

#include "sqb/random.hpp"

namespace sqb {

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

CMatrix random_ginibre(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> normal;
  CMatrix g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  return g;
}

CMatrix random_unitary(Rng& rng, Eigen::Index n) {
  Eigen::HouseholderQR<CMatrix> qr(random_ginibre(rng, n, n));
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < n; ++k) {
    const double a = std::abs(r(k, k));
    if (a > 0) q.col(k) *= r(k, k) / a;
  }
  return q;
}

CMatrix random_isometry(Rng& rng, Eigen::Index out, Eigen::Index in) {
  return random_unitary(rng, out).leftCols(in);
}

CVector random_pure_vector(Rng& rng, Eigen::Index n) {
  CVector v = random_ginibre(rng, n, 1);
  return v / v.norm();
}

MultipartiteState random_pure_state(Rng& rng, const Labels& labels, const Dims& dims) {
  return MultipartiteState::from_pure(random_pure_vector(rng, product(dims)), labels, dims);
}

MultipartiteState random_mixed_state(Rng& rng, const Labels& labels, const Dims& dims, int env_dim) {
  const auto n = product(dims);
  const CMatrix g = random_ginibre(rng, n, env_dim > 0 ? env_dim : n);
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return MultipartiteState::assume_valid(hermitian_part(rho), labels, dims);
}

QuantumChannel random_channel(Rng& rng, int input_dim, const Labels& output_labels, const Dims& output_dims,
                              int kraus_rank) {
  const auto dout = product(output_dims);
  const CMatrix v = random_isometry(rng, dout * kraus_rank, input_dim);
  std::vector<CMatrix> kraus;
  for (int k = 0; k < kraus_rank; ++k) kraus.push_back(v.middleRows(k * dout, dout));
  return QuantumChannel::from_kraus(std::move(kraus), input_dim, output_labels, output_dims);
}

}  // namespace sqb
