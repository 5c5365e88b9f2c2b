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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

namespace entropic::testing {

Atoms bin(std::vector<std::pair<double, double>> points, double tol, double drop_below) {
  std::sort(points.begin(), points.end());
  Atoms out;
  for (const auto& [x, w] : points) {
    if (!out.empty() && x - out.back().first <= tol) {
      out.back().second += w;
    } else {
      out.emplace_back(x, w);
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(), [&](const auto& a) { return std::abs(a.second) < drop_below; }),
            out.end());
  return out;
}

double classical_functional(const RVector& w, double alpha, long t) {
  const long n = w.size();
  double sum = 0.0;
  for (long j = 0; j < n; ++j) {
    const long k = ((j + t) % n + n) % n;
    sum += std::pow(w(j), 1.0 - alpha) * std::pow(w(k), alpha);
  }
  return std::log(sum / w.sum());
}

RVector classical_mean_ep(const RVector& w, long t) {
  const long n = w.size();
  RVector out(n);
  for (long j = 0; j < n; ++j) out(j) = std::log(w(j) / w(((j + t) % n + n) % n)) / static_cast<double>(t);
  return out;
}

CMatrix propagator(const CMatrix& h, double t) { return (CMatrix(std::complex<double>(0.0, -t) * h)).exp(); }

CMatrix mlog(const CMatrix& a) { return a.log(); }

CMatrix mexp(const CMatrix& a) { return a.exp(); }

CMatrix mpow(const CMatrix& a, double s) { return CMatrix(s * a.log()).exp(); }

double quantum_functional(const CMatrix& h, const CMatrix& w0, double p, double alpha, double t) {
  const CMatrix u = propagator(h, t);
  const CMatrix w_minus_t = u.adjoint() * w0 * u;
  if (std::isinf(p)) {
    const CMatrix k = (1.0 - alpha) * mlog(w0) + alpha * mlog(w_minus_t);
    return std::log(k.exp().trace().real());
  }
  const CMatrix outer = mpow(w0, (1.0 - alpha) / p);
  CMatrix bracket = outer * mpow(w_minus_t, 2.0 * alpha / p) * outer;
  bracket = 0.5 * (bracket + bracket.adjoint()).eval();
  return std::log(mpow(bracket, p / 2.0).trace().real());
}

double relative_entropy(const CMatrix& rho, const CMatrix& nu) {
  return (rho * (mlog(nu) - mlog(rho))).trace().real();
}

double renyi(const CMatrix& rho, const CMatrix& nu, double alpha) {
  return std::log((mpow(rho, alpha) * mpow(nu, 1.0 - alpha)).trace().real());
}

double mean_ep(const CMatrix& h, const CMatrix& w0, double t) {
  const CMatrix u = propagator(h, t);
  return -relative_entropy(u * w0 * u.adjoint(), w0) / t;
}

Atoms fcs(const CMatrix& h, const CMatrix& w0, double t) {
  const Eigen::SelfAdjointEigenSolver<CMatrix> es(w0);
  const CMatrix& f = es.eigenvectors();
  const RVector& nu = es.eigenvalues();
  const CMatrix uf = propagator(h, t) * f;
  std::vector<std::pair<double, double>> points;
  for (Eigen::Index i = 0; i < nu.size(); ++i) {
    for (Eigen::Index j = 0; j < nu.size(); ++j) {
      const double overlap = std::norm(f.col(j).dot(uf.col(i)));
      points.emplace_back((std::log(nu(i)) - std::log(nu(j))) / t, nu(i) * overlap);
    }
  }
  return bin(std::move(points));
}

Atoms modular(const CMatrix& h, const CMatrix& w0, double t) {
  const CMatrix u = propagator(h, t);
  const CMatrix w_t = u * w0 * u.adjoint();
  // vec(A X B) = (B^T kron A) vec(X), column-major vec
  const CMatrix w0_inv = w0.inverse();
  CMatrix delta = Eigen::kroneckerProduct(CMatrix(w0_inv.transpose()), w_t).eval();
  delta = 0.5 * (delta + delta.adjoint()).eval();
  const Eigen::SelfAdjointEigenSolver<CMatrix> es(delta);
  const CMatrix root = mpow(w0, 0.5);
  const Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(root.data(), root.size());
  std::vector<std::pair<double, double>> points;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    points.emplace_back(-std::log(es.eigenvalues()(k)) / t, std::norm(es.eigenvectors().col(k).dot(v)));
  }
  return bin(std::move(points));
}

CMatrix Gen::hermitian(int n, bool real) {
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = {normal(), real ? 0.0 : normal()};
  }
  return (m + m.adjoint()) / (2.0 * std::sqrt(static_cast<double>(n)));
}

CMatrix Gen::density(int n, bool real) {
  const CMatrix e = CMatrix(-hermitian(n, real)).exp();
  CMatrix rho = e / e.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

RVector Gen::probabilities(int n) {
  RVector w(n);
  for (int i = 0; i < n; ++i) w(i) = std::exp(normal());
  return w / w.sum();
}

}  // namespace entropic::testing
