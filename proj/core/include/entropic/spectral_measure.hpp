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

#include <vector>

namespace entropic {

struct Atom {
  double value;
  double weight;
};

/// Finite discrete measure with strictly increasing atom values.
class SpectralMeasure {
 public:
  SpectralMeasure() = default;

  /// Sorts raw points by value and merges chains of consecutive values no
  /// further apart than `bin_tol`; the merged atom sits at the mean of its
  /// members. Aggregated weights in [-negative_tol, 0) are clamped to zero,
  /// more negative ones throw InvariantViolation. Atoms whose aggregated
  /// weight is below `drop_below` are removed afterwards.
  static SpectralMeasure from_points(std::vector<Atom> points, double bin_tol = 1e-10,
                                     double drop_below = 1e-14, double negative_tol = 1e-12);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  bool empty() const noexcept { return atoms_.empty(); }
  double total() const noexcept { return total_; }

  /// Sum of weights of atoms within `tol` of `value` (0 if none).
  double weight_at(double value, double tol = 1e-10) const;
  double mean() const;

  /// log sum_x e^{-alpha t x} w(x).
  double log_laplace(double alpha, double t) const;

 private:
  std::vector<Atom> atoms_;
  double total_ = 0.0;
};

/// (1/2) sum_x |mu(x) - nu(x)| after aligning atoms within `tol`.
double total_variation(const SpectralMeasure& mu, const SpectralMeasure& nu, double tol = 1e-10);

/// max_x |mu(-x) - e^{-t x} mu(x)| over atoms of mu; a missing mirror atom
/// counts as weight 0.
double fluctuation_relation_residual(const SpectralMeasure& mu, double t, double tol = 1e-10);

/// Measure with an atom at -x of weight e^{-t x} w(x) for every atom (x, w)
/// of mu. A measure satisfying the fluctuation relation is a fixed point.
SpectralMeasure reflect_and_tilt(const SpectralMeasure& mu, double t);

}  // namespace entropic
