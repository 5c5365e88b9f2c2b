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

#include "entropic/fcs.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "entropic/errors.hpp"

namespace entropic::quantum {

namespace {

constexpr double kBinTol = 1e-10;
constexpr double kDropBelow = 1e-14;
constexpr double kNegativeTol = 1e-12;

void require_positive_time(double t, const char* what) {
  if (!(t > 0.0)) {
    std::ostringstream os;
    os << what << ": time must be > 0, got " << t;
    throw DomainError(os.str());
  }
}

}  // namespace

double ProjectionFamily::invariant_residual() const {
  if (projectors.empty()) return 0.0;
  const Index n = projectors.front().dim();
  double worst = 0.0;
  Matrix sum = Matrix::Zero(n, n);
  for (std::size_t a = 0; a < projectors.size(); ++a) {
    const Matrix& p = projectors[a].matrix();
    worst = std::max(worst, frobenius(p * p - p));
    sum += p;
    for (std::size_t b = a + 1; b < projectors.size(); ++b) {
      worst = std::max(worst, frobenius(p * projectors[b].matrix()));
    }
  }
  return std::max(worst, frobenius(sum - Matrix::Identity(n, n)));
}

ProjectionFamily spectral_resolution(const HermitianOperator& a, double rel_tol) {
  if (!(rel_tol > 0.0)) throw DomainError("spectral_resolution: tolerance must be > 0");
  const auto s = eig(a);
  const Index n = s.dim();
  ProjectionFamily out;
  if (n == 0) return out;
  const double tol = rel_tol * std::max(1.0, s.eigenvalues.cwiseAbs().maxCoeff());

  Index start = 0;
  while (start < n) {
    Index end = start + 1;
    while (end < n && s.eigenvalues(end) - s.eigenvalues(end - 1) <= tol) ++end;
    const auto block = s.eigenvectors.middleCols(start, end - start);
    out.eigenvalues.push_back(s.eigenvalues.segment(start, end - start).mean());
    out.projectors.push_back(HermitianOperator(Matrix(block * block.adjoint())));
    start = end;
  }
  return out;
}

SpectralMeasure fcs_distribution(const QuantumSystem& sys, double t) {
  require_positive_time(t, "fcs_distribution");
  const auto resolution = spectral_resolution(entropy_observable(sys));
  const Matrix v = sys.propagator(t);
  const Matrix& omega = sys.reference_state().matrix();

  const std::size_t k = resolution.projectors.size();
  std::vector<Atom> points;
  points.reserve(k * k);
  for (std::size_t a = 0; a < k; ++a) {
    // reduced (unnormalized) state after the first measurement, evolved
    const Matrix& p = resolution.projectors[a].matrix();
    const Matrix evolved = v * (omega * p) * v.adjoint();
    for (std::size_t b = 0; b < k; ++b) {
      const double w = trace_of_product(evolved, resolution.projectors[b].matrix()).real();
      points.push_back({(resolution.eigenvalues[b] - resolution.eigenvalues[a]) / t, w});
    }
  }
  return SpectralMeasure::from_points(std::move(points), kBinTol, kDropBelow, kNegativeTol);
}

double fcs_cgf(const SpectralMeasure& measure, double alpha, double t) {
  if (measure.empty()) throw DomainError("fcs_cgf: empty measure");
  return measure.log_laplace(alpha, t);
}

OperatorSpaceElement relative_modular_apply(const QuantumSystem& sys, double t, const OperatorSpaceElement& a) {
  if (a.rows() != sys.dim() || a.cols() != sys.dim()) throw DimensionError("relative_modular_apply: shape mismatch");
  const DensityMatrix omega_t = schrodinger_evolve(sys, sys.reference_state(), t);
  const Matrix omega0_inv = sys.reference_state().power(-1.0).matrix();
  return omega_t.matrix() * a * omega0_inv;
}

SpectralMeasure modular_spectral_measure(const QuantumSystem& sys, double t) {
  require_positive_time(t, "modular_spectral_measure");
  const auto& ref = sys.reference_state().spectrum();
  const DensityMatrix omega_t = schrodinger_evolve(sys, sys.reference_state(), t);
  const auto& evolved = omega_t.spectrum();

  // <e_i, f_j> with e_i eigenvectors of omega_t, f_j of omega_0
  const Eigen::MatrixXd overlap = (evolved.eigenvectors.adjoint() * ref.eigenvectors).cwiseAbs2();
  const Index n = ref.dim();
  std::vector<Atom> points;
  points.reserve(static_cast<std::size_t>(n * n));
  for (Index i = 0; i < n; ++i) {
    const double log_mu = std::log(evolved.eigenvalues(i));
    for (Index j = 0; j < n; ++j) {
      const double nu = ref.eigenvalues(j);
      points.push_back({-(log_mu - std::log(nu)) / t, nu * overlap(i, j)});
    }
  }
  return SpectralMeasure::from_points(std::move(points), kBinTol, kDropBelow, kNegativeTol);
}

FcsModularIdentity fcs_modular_identity(const QuantumSystem& sys, double t) {
  constexpr double kTol = 1e-10;
  FcsModularIdentity out;
  out.fcs = fcs_distribution(sys, t);
  out.modular = modular_spectral_measure(sys, t);
  out.tv_distance = total_variation(out.fcs, out.modular, kBinTol);
  out.tilted_tv_distance = total_variation(out.modular, reflect_and_tilt(out.fcs, t), kBinTol);
  if (sys.is_tri() && out.tv_distance > kTol) {
    throw InvariantViolation("FCS equals modular spectral measure", out.tv_distance, kTol);
  }
  if (out.tilted_tv_distance > kTol) {
    throw InvariantViolation("modular measure is the tilted reflection of FCS", out.tilted_tv_distance, kTol);
  }
  return out;
}

}  // namespace entropic::quantum
