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

#include "entropic/spectral_measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "entropic/errors.hpp"

namespace entropic {

SpectralMeasure SpectralMeasure::from_points(std::vector<Atom> points, double bin_tol, double drop_below,
                                             double negative_tol) {
  std::stable_sort(points.begin(), points.end(), [](const Atom& a, const Atom& b) { return a.value < b.value; });

  SpectralMeasure out;
  std::size_t i = 0;
  while (i < points.size()) {
    std::size_t j = i + 1;
    double value_sum = points[i].value;
    double weight_sum = points[i].weight;
    while (j < points.size() && points[j].value - points[j - 1].value <= bin_tol) {
      value_sum += points[j].value;
      weight_sum += points[j].weight;
      ++j;
    }
    if (weight_sum < 0.0) {
      if (weight_sum < -negative_tol) {
        throw InvariantViolation("spectral measure weight nonnegativity", -weight_sum, negative_tol);
      }
      weight_sum = 0.0;
    }
    if (weight_sum >= drop_below && weight_sum > 0.0) {
      out.atoms_.push_back({value_sum / static_cast<double>(j - i), weight_sum});
    }
    i = j;
  }
  for (const auto& a : out.atoms_) out.total_ += a.weight;
  return out;
}

double SpectralMeasure::weight_at(double value, double tol) const {
  double w = 0.0;
  for (const auto& a : atoms_) {
    if (std::abs(a.value - value) <= tol) w += a.weight;
  }
  return w;
}

double SpectralMeasure::mean() const {
  double m = 0.0;
  for (const auto& a : atoms_) m += a.value * a.weight;
  return m / total_;
}

double SpectralMeasure::log_laplace(double alpha, double t) const {
  if (atoms_.empty()) throw DomainError("log_laplace: empty measure");
  double hi = -std::numeric_limits<double>::infinity();
  for (const auto& a : atoms_) hi = std::max(hi, -alpha * t * a.value + std::log(a.weight));
  double acc = 0.0;
  for (const auto& a : atoms_) acc += std::exp(-alpha * t * a.value + std::log(a.weight) - hi);
  return hi + std::log(acc);
}

double total_variation(const SpectralMeasure& mu, const SpectralMeasure& nu, double tol) {
  // Merge the two atom lists; signed weights cancel within each bin.
  std::vector<Atom> merged;
  merged.reserve(mu.size() + nu.size());
  for (const auto& a : mu.atoms()) merged.push_back(a);
  for (const auto& a : nu.atoms()) merged.push_back({a.value, -a.weight});
  std::stable_sort(merged.begin(), merged.end(), [](const Atom& a, const Atom& b) { return a.value < b.value; });

  double tv = 0.0;
  std::size_t i = 0;
  while (i < merged.size()) {
    double diff = merged[i].weight;
    std::size_t j = i + 1;
    while (j < merged.size() && merged[j].value - merged[j - 1].value <= tol) {
      diff += merged[j].weight;
      ++j;
    }
    tv += std::abs(diff);
    i = j;
  }
  return 0.5 * tv;
}

double fluctuation_relation_residual(const SpectralMeasure& mu, double t, double tol) {
  double worst = 0.0;
  for (const auto& a : mu.atoms()) {
    const double mirrored = mu.weight_at(-a.value, tol);
    worst = std::max(worst, std::abs(mirrored - std::exp(-t * a.value) * a.weight));
  }
  return worst;
}

SpectralMeasure reflect_and_tilt(const SpectralMeasure& mu, double t) {
  std::vector<Atom> points;
  points.reserve(mu.size());
  for (const auto& a : mu.atoms()) points.push_back({-a.value, std::exp(-t * a.value) * a.weight});
  return SpectralMeasure::from_points(std::move(points), 0.0, 0.0);
}

}  // namespace entropic
