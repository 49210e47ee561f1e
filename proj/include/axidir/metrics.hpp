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

// Pattern evaluation and the P, E, Q, rV, rE, FBR measures. Weights are
// real; complex weights are not supported.

#ifndef AXIDIR_METRICS_HPP_
#define AXIDIR_METRICS_HPP_

#include <optional>
#include <span>
#include <vector>

#include "axidir/designs.hpp"

namespace axidir {

struct PatternMetrics {
  double P = 0.0;
  double E = 0.0;
  double Q = 0.0;
  std::optional<double> rV;  // absent when a_0 = 0
  double rE = 0.0;
  double FBR = 0.0;
};

// c_n = a_n / (S_{D-2} N_n^2), so g(x) = sum_n c_n P_n(x).
std::vector<double> pattern_coeffs(const WeightVector& w);

double eval_pattern(const WeightVector& w, double x);

// Batched evaluation through the SIMD kernels.
void eval_pattern(const WeightVector& w, std::span<const double> x, std::span<double> out);

PatternMetrics compute_metrics(const WeightVector& w);

// Same quantities from quadrature of g, g^2, g x and g^2 x.
PatternMetrics compute_metrics_numeric(const WeightVector& w);

}  // namespace axidir

#endif  // AXIDIR_METRICS_HPP_
