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

// Ultraspherical polynomials P_n standardized to P_n(1) = 1, for real
// D >= 2. D = 2 gives Chebyshev T_n, D = 3 gives Legendre P_n.
//
// Conversion to the classical Gegenbauer standardization:
// C_n^(alpha)(x) = (2 alpha)^(rising n) / n! * P_n(x).

#ifndef AXIDIR_SPECIAL_HPP_
#define AXIDIR_SPECIAL_HPP_

#include <vector>

#include "axidir/dimension.hpp"

namespace axidir {

// Surface of the unit sphere embedded in R^d, 2 pi^(d/2) / Gamma(d/2).
// Accepts any d > 0; d = 1 yields 2 (the two points of S^0).
double sphere_surface(double d);

// S_{D-1}, the surface of the unit sphere in D dimensions.
double surface_area(Dimension dim);

// S_{D-2}, the surface of the unit sphere one dimension down.
double lower_surface_area(Dimension dim);

struct PolySequence {
  Dimension dim;
  double x;
  std::vector<double> values;  // values[n] = P_n(x), n = 0..N
};

// Three-term recurrence; |x| may overshoot 1 by 1e-12 and is clamped.
PolySequence eval_sequence(double x, int max_degree, Dimension dim);

// Single value P_n(x).
double eval_poly(double x, int n, Dimension dim);

struct CoeffList {
  int degree;
  Dimension dim;
  std::vector<double> coeffs;  // power-series coefficients c_0..c_n
};

CoeffList power_series_coeffs(int n, Dimension dim);

// beta_n in x P_{n-1} = beta_n P_n + (1 - beta_n) P_{n-2}; beta_1 = 1.
double beta_coeff(int n, Dimension dim);

// Squared norm int P_n^2 w dx with w = (1-x^2)^((D-3)/2), by the product
// recurrence seeded with N_0^2 = S_{D-1}/S_{D-2}.
double norm_squared(int n, Dimension dim);

// Gamma closed form of the same quantity (cross-check).
double norm_squared_closed(int n, Dimension dim);

// P_n'(x). Differentiated recurrence, exact at the endpoints too.
double derivative(double x, int n, Dimension dim);

double value_at_zero(int n, Dimension dim);
double derivative_at_zero(int n, Dimension dim);

// sum_{n<=N} P_n(x) P_n(x0) / N_n^2.
double cd_kernel(double x, double x0, int max_degree, Dimension dim);

// Coefficients of P_{n+1} = a[n] x P_n - c[n] P_{n-1}, filled for n = 1..N-1
// (index 0 unused; P_1 = x is set directly).
struct RecurrenceTable {
  std::vector<double> a;
  std::vector<double> c;
  int max_degree = 0;
};

RecurrenceTable recurrence_table(int max_degree, Dimension dim);

}  // namespace axidir

#endif  // AXIDIR_SPECIAL_HPP_
