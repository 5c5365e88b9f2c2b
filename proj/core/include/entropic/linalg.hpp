// Copyright 2026 The entropic Authors
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

#include <complex>
#include <utility>

#include <Eigen/Dense>

namespace entropic {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Elements of the operator space O (all n x n complex matrices) with the
/// Hilbert-Schmidt inner product <A, B> = tr(A* B).
using OperatorSpaceElement = Matrix;

/// Every matrix residual in this library is measured in the Frobenius norm.
double frobenius(const Matrix& m);

/// Hilbert-Schmidt inner product tr(A* B).
Complex hs_inner(const Matrix& a, const Matrix& b);

/// tr(A B) without forming the product.
Complex trace_of_product(const Matrix& a, const Matrix& b);

/// A B - B A.
Matrix commutator(const Matrix& a, const Matrix& b);

/// Row-major Kronecker product: the left factor is the slow index.
Matrix kron(const Matrix& a, const Matrix& b);

/// Hermitian operator on C^n. Construction symmetrizes (A + A*)/2 and warns on
/// std::clog when the correction exceeds 1e-12 * max(1, |A|_F).
class HermitianOperator {
 public:
  HermitianOperator() = default;
  explicit HermitianOperator(const Matrix& m);

  /// Rejects inputs that are not Hermitian within `tol` (entrywise) instead of
  /// symmetrizing them.
  static HermitianOperator checked(const Matrix& m, double tol = 1e-12);
  static HermitianOperator zero(Index n);
  static HermitianOperator identity(Index n);
  static HermitianOperator diagonal(const RealVector& d);

  Index dim() const noexcept { return m_.rows(); }
  const Matrix& matrix() const noexcept { return m_; }
  double symmetrization_correction() const noexcept { return correction_; }

  /// All entries real within `tol` in the standard basis.
  bool is_real(double tol = 1e-12) const;
  double trace() const { return m_.trace().real(); }

  HermitianOperator& operator+=(const HermitianOperator& other);
  HermitianOperator& operator-=(const HermitianOperator& other);
  HermitianOperator& operator*=(double s);

  friend HermitianOperator operator+(HermitianOperator a, const HermitianOperator& b) { return a += b; }
  friend HermitianOperator operator-(HermitianOperator a, const HermitianOperator& b) { return a -= b; }
  friend HermitianOperator operator*(double s, HermitianOperator a) { return a *= s; }
  friend HermitianOperator operator-(HermitianOperator a) { return a *= -1.0; }

 private:
  struct Trusted {};
  HermitianOperator(Matrix m, Trusted) : m_(std::move(m)) {}
  friend struct SpectralDecomposition;

  Matrix m_;
  double correction_ = 0.0;
};

/// A = U diag(eigenvalues) U*, eigenvalues ascending, U unitary.
/// Reconstruction error is measured in the Frobenius norm.
struct SpectralDecomposition {
  RealVector eigenvalues;
  Matrix eigenvectors;

  Index dim() const noexcept { return eigenvalues.size(); }

  /// U diag(f(lambda)) U* for a real scalar function.
  template <class F>
  HermitianOperator apply(F&& f) const {
    RealVector mapped = eigenvalues.unaryExpr(std::forward<F>(f));
    return from_diagonal(mapped);
  }

  /// U diag(f(lambda)) U* for a complex-valued scalar function (e.g. e^{-itx}).
  template <class F>
  Matrix apply_complex(F&& f) const {
    Eigen::VectorXcd mapped(eigenvalues.size());
    for (Index i = 0; i < eigenvalues.size(); ++i) mapped(i) = f(eigenvalues(i));
    return eigenvectors * mapped.asDiagonal() * eigenvectors.adjoint();
  }

  HermitianOperator from_diagonal(const RealVector& d) const;
  Matrix reconstruct() const;
  /// |A - U Lambda U*|_F / max(1, |A|_F).
  double reconstruction_error(const Matrix& a) const;

  double min() const { return eigenvalues(0); }
  double max() const { return eigenvalues(eigenvalues.size() - 1); }
};

SpectralDecomposition eig(const HermitianOperator& a);
/// Throws DomainError when `a` is not Hermitian within `tol`.
SpectralDecomposition eig(const Matrix& a, double tol = 1e-12);

/// f(A) through the spectral theorem; no domain check.
template <class F>
HermitianOperator matrix_function(const HermitianOperator& a, F&& f) {
  return eig(a).apply(std::forward<F>(f));
}

/// Strict positivity as used for faithful states: max eigenvalue > 0 and
/// min eigenvalue > 1e-12 * max eigenvalue.
bool is_strictly_positive(const SpectralDecomposition& s, double rel_tol = 1e-12);

HermitianOperator matrix_exp(const HermitianOperator& a);
/// Throws DomainError unless `a` is strictly positive.
HermitianOperator matrix_log(const HermitianOperator& a);
/// A^s for strictly positive A; throws DomainError otherwise.
HermitianOperator matrix_power(const HermitianOperator& a, double s);

/// log(sum_i exp(x_i)), ignoring -inf entries. Returns -inf for an empty or
/// all -inf input.
double log_sum_exp(const RealVector& x);

}  // namespace entropic
