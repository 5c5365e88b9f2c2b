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

#include <cmath>
#include <type_traits>
#include <utility>

namespace entropic {

namespace detail {

template <class T>
double max_abs(const T& x) {
  if constexpr (std::is_arithmetic_v<T>) {
    return std::abs(x);
  } else {
    return x.cwiseAbs().maxCoeff();
  }
}

template <class F, class T>
T simpson_step(F& f, double a, double b, const T& fa, const T& fm, const T& fb, const T& whole,
               double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const T flm = f(lm);
  const T frm = f(rm);
  const T left = ((m - a) / 6.0) * (fa + 4.0 * flm + fm);
  const T right = ((b - m) / 6.0) * (fm + 4.0 * frm + fb);
  const T delta = left + right - whole;
  if (depth <= 0 || max_abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature of f over [a, b] with Richardson correction.
/// Works for scalars and Eigen matrices; the error criterion is the largest
/// absolute entry of the difference between refinement levels.
template <class F>
auto adaptive_simpson(F&& f, double a, double b, double abs_tol, int max_depth = 40) {
  using T = std::decay_t<decltype(f(a))>;
  const T fa = f(a);
  const T fb = f(b);
  const T fm = f(0.5 * (a + b));
  const T whole = ((b - a) / 6.0) * (fa + 4.0 * fm + fb);
  return T(detail::simpson_step(f, a, b, fa, fm, fb, whole, abs_tol, max_depth));
}

}  // namespace entropic
