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

#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace sqb {

template <typename Real>
using ComplexT = std::complex<Real>;
template <typename Real>
using CMatrixT = Eigen::Matrix<ComplexT<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using CVectorT = Eigen::Matrix<ComplexT<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using RVectorT = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using Scalar = double;
using Complex = ComplexT<Scalar>;
using CMatrix = CMatrixT<Scalar>;
using CVector = CVectorT<Scalar>;
using RVector = RVectorT<Scalar>;

/// Subsystem dimensions, outermost (most significant) factor first.
using Dims = std::vector<int>;

Eigen::Index product(std::span<const int> dims);

template <typename Derived>
typename Derived::PlainObject hermitian_part(const Eigen::MatrixBase<Derived>& m) {
  return (m + m.adjoint()) / typename Derived::Scalar(2);
}

/// Largest absolute entry of m - m^dagger.
template <typename Derived>
auto hermiticity_defect(const Eigen::MatrixBase<Derived>& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// Eigenvalues (ascending) of the Hermitian part of m.
template <typename Derived>
RVectorT<typename Eigen::NumTraits<typename Derived::Scalar>::Real> hermitian_eigenvalues(
    const Eigen::MatrixBase<Derived>& m) {
  using Plain = typename Derived::PlainObject;
  Eigen::SelfAdjointEigenSolver<Plain> solver(hermitian_part(m), Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

template <typename A, typename B>
CMatrixT<typename Eigen::NumTraits<typename A::Scalar>::Real> kron(const Eigen::MatrixBase<A>& a,
                                                                    const Eigen::MatrixBase<B>& b) {
  using Real = typename Eigen::NumTraits<typename A::Scalar>::Real;
  CMatrixT<Real> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = ComplexT<Real>(a(i, j)) * b.template cast<ComplexT<Real>>();
  return out;
}

/// Hermitian n x n matrix from n^2 real parameters: the diagonal first, then
/// (re, im) pairs of the strict upper triangle in row-major order.
template <typename Real>
CMatrixT<Real> hermitian_from_params(std::span<const Real> params, Eigen::Index n) {
  CMatrixT<Real> h = CMatrixT<Real>::Zero(n, n);
  std::size_t k = 0;
  for (Eigen::Index i = 0; i < n; ++i) h(i, i) = params[k++];
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const ComplexT<Real> z(params[k], params[k + 1]);
      k += 2;
      h(i, j) = z;
      h(j, i) = std::conj(z);
    }
  return h;
}

/// exp(iH) for Hermitian H, through its eigendecomposition.
template <typename Derived>
typename Derived::PlainObject unitary_exp(const Eigen::MatrixBase<Derived>& h) {
  using Plain = typename Derived::PlainObject;
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  Eigen::SelfAdjointEigenSolver<Plain> solver(hermitian_part(h));
  const auto& v = solver.eigenvectors();
  const auto phases =
      solver.eigenvalues().unaryExpr([](Real x) { return std::polar(Real(1), x); }).eval();
  return v * phases.asDiagonal() * v.adjoint();
}

template <typename Real>
CMatrixT<Real> unitary_from_params(std::span<const Real> params, Eigen::Index n) {
  return unitary_exp(hermitian_from_params(params, n));
}

/// Reorders tensor factors. perm[k] is the original position of the factor
/// that ends up at position k.
CMatrix permute_subsystems(const CMatrix& m, std::span<const int> dims, std::span<const int> perm);

/// Partial trace keeping the (strictly increasing) factor positions in keep.
CMatrix partial_trace_positions(const CMatrix& m, std::span<const int> dims, std::span<const int> keep);

/// Sum of |eigenvalues| / 2 of a Hermitian difference.
double trace_norm_half(const CMatrix& hermitian);

}  // namespace sqb
