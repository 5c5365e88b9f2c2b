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

#include "entropic/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

#include "entropic/errors.hpp"

namespace entropic {

namespace {

std::string describe(const char* what, double residual, double tolerance) {
  std::ostringstream os;
  os << what << ": residual " << residual << " exceeds tolerance " << tolerance;
  return os.str();
}

double hermiticity_defect(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

void require_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    std::ostringstream os;
    os << what << ": matrix is " << m.rows() << "x" << m.cols() << ", expected square";
    throw DimensionError(os.str());
  }
}

}  // namespace

InvariantViolation::InvariantViolation(const std::string& name, double residual, double tolerance)
    : std::runtime_error(describe(name.c_str(), residual, tolerance)),
      name_(name),
      residual_(residual),
      tolerance_(tolerance) {}

double frobenius(const Matrix& m) { return m.norm(); }

Complex hs_inner(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("hs_inner: shape mismatch");
  return (a.conjugate().cwiseProduct(b)).sum();
}

Complex trace_of_product(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) throw DimensionError("trace_of_product: shape mismatch");
  return (a.cwiseProduct(b.transpose())).sum();
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix kron(const Matrix& a, const Matrix& b) { return Eigen::kroneckerProduct(a, b).eval(); }

HermitianOperator::HermitianOperator(const Matrix& m) {
  require_square(m, "HermitianOperator");
  m_ = 0.5 * (m + m.adjoint());
  correction_ = m.size() == 0 ? 0.0 : (m - m_).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, m.norm());
  if (correction_ > 1e-12 * scale) {
    std::clog << "warning: HermitianOperator symmetrization corrected entries by " << correction_ << '\n';
  }
}

HermitianOperator HermitianOperator::checked(const Matrix& m, double tol) {
  require_square(m, "HermitianOperator");
  const double defect = m.size() == 0 ? 0.0 : hermiticity_defect(m);
  if (defect > tol) {
    std::ostringstream os;
    os << "matrix is not Hermitian: max |A - A*| = " << defect << " > " << tol;
    throw DomainError(os.str());
  }
  return HermitianOperator(Matrix(0.5 * (m + m.adjoint())), Trusted{});
}

HermitianOperator HermitianOperator::zero(Index n) { return HermitianOperator(Matrix::Zero(n, n), Trusted{}); }

HermitianOperator HermitianOperator::identity(Index n) {
  return HermitianOperator(Matrix::Identity(n, n), Trusted{});
}

HermitianOperator HermitianOperator::diagonal(const RealVector& d) {
  return HermitianOperator(Matrix(d.cast<Complex>().asDiagonal()), Trusted{});
}

bool HermitianOperator::is_real(double tol) const {
  return m_.size() == 0 || m_.imag().cwiseAbs().maxCoeff() <= tol;
}

HermitianOperator& HermitianOperator::operator+=(const HermitianOperator& other) {
  if (other.dim() != dim()) throw DimensionError("HermitianOperator +: dimension mismatch");
  m_ += other.m_;
  return *this;
}

HermitianOperator& HermitianOperator::operator-=(const HermitianOperator& other) {
  if (other.dim() != dim()) throw DimensionError("HermitianOperator -: dimension mismatch");
  m_ -= other.m_;
  return *this;
}

HermitianOperator& HermitianOperator::operator*=(double s) {
  m_ *= s;
  return *this;
}

HermitianOperator SpectralDecomposition::from_diagonal(const RealVector& d) const {
  Matrix m = eigenvectors * d.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
  // Exact Hermiticity; the product is Hermitian up to rounding.
  return HermitianOperator(Matrix(0.5 * (m + m.adjoint())), HermitianOperator::Trusted{});
}

Matrix SpectralDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
}

double SpectralDecomposition::reconstruction_error(const Matrix& a) const {
  return (a - reconstruct()).norm() / std::max(1.0, a.norm());
}

SpectralDecomposition eig(const HermitianOperator& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a.matrix(), Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw DomainError("eig: eigensolver did not converge");
  return SpectralDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

SpectralDecomposition eig(const Matrix& a, double tol) { return eig(HermitianOperator::checked(a, tol)); }

bool is_strictly_positive(const SpectralDecomposition& s, double rel_tol) {
  if (s.dim() == 0) return false;
  const double hi = s.max();
  return hi > 0.0 && s.min() > rel_tol * hi;
}

HermitianOperator matrix_exp(const HermitianOperator& a) {
  return matrix_function(a, [](double x) { return std::exp(x); });
}

HermitianOperator matrix_log(const HermitianOperator& a) {
  auto s = eig(a);
  if (!is_strictly_positive(s)) throw DomainError("matrix_log: operator is not strictly positive");
  return s.apply([](double x) { return std::log(x); });
}

HermitianOperator matrix_power(const HermitianOperator& a, double exponent) {
  auto s = eig(a);
  if (!is_strictly_positive(s)) throw DomainError("matrix_power: operator is not strictly positive");
  return s.apply([exponent](double x) { return std::pow(x, exponent); });
}

double log_sum_exp(const RealVector& x) {
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  double hi = kNegInf;
  for (double v : x) hi = std::max(hi, v);
  if (hi == kNegInf) return kNegInf;
  double acc = 0.0;
  for (double v : x) {
    if (v != kNegInf) acc += std::exp(v - hi);
  }
  return hi + std::log(acc);
}

}  // namespace entropic
