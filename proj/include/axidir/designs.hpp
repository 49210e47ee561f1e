// Copyright 2026 The axidir Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Order weightings a_n for axisymmetric patterns
//   g(x) = 1/S_{D-2} sum_n a_n / N_n^2 P_n(x).

#ifndef AXIDIR_DESIGNS_HPP_
#define AXIDIR_DESIGNS_HPP_

#include <string_view>
#include <vector>

#include "axidir/dimension.hpp"

namespace axidir {

enum class Normalization {
  kA0Unity,  // a_0 = 1
  kG1Unity,  // g(1) = 1
  kRaw,      // as produced by the closed form
};

std::string_view normalization_name(Normalization n);

struct WeightVector {
  Dimension dim;
  int order;
  std::vector<double> a;
  Normalization normalization;
};

// g(1) of the pattern described by w.
double on_axis_value(const WeightVector& w);

// Rescales w so that the target convention holds. Kraw only relabels.
WeightVector normalize(const WeightVector& w, Normalization target);

WeightVector basic(int order, Dimension dim);

struct MaxReSolution {
  WeightVector weights;
  double r_e_max;
  int iterations;  // Newton steps taken
};

// Weights P_n(r) with r the largest zero of P_{N+1}.
MaxReSolution max_re(int order, Dimension dim);

// Maximizes the front-to-back energy ratio. Needs order >= 1.
WeightVector supercardioid(int order, Dimension dim);

struct ApproxSupercardioid {
  WeightVector weights;
  double exponent;    // beta applied to the inphase weights
  bool extrapolated;  // outside 1 <= N <= 10, 2 <= D <= 3
};

ApproxSupercardioid supercardioid_approx(int order, Dimension dim);

// Pattern proportional to (1 + x)^N.
WeightVector inphase(int order, Dimension dim);

// g' proportional to (1-x)^L (1+x)^M with M = N - L - 1; g(1) = 1, g(-1) = 0.
WeightVector maxflat(int order, int flat_l, Dimension dim);

// Indicator of x >= x0: a_n = int_{x0}^1 P_n w dx.
WeightVector cap(int order, double x0, Dimension dim);

// Product of the caps with opening angles 1.375 s and 0.75 s (degrees).
WeightVector cap_trapezoid(int order, double spacing_deg, Dimension dim);

}  // namespace axidir

#endif  // AXIDIR_DESIGNS_HPP_
