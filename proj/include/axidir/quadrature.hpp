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

// Quadrature over the axisymmetric measure w(x) dx, w = (1-x^2)^((D-3)/2).
//
// Integrals are taken in phi = arccos x, where the measure becomes
// sin^(D-2)(phi) dphi. The phi range is split at pi/2 (and at any extra
// breakpoints) and each piece gets a Gauss-Jacobi rule whose weight absorbs
// the (phi)^(D-2) or (pi-phi)^(D-2) behaviour at an end touching a pole, so
// convergence stays spectral for non-integer D.

#ifndef AXIDIR_QUADRATURE_HPP_
#define AXIDIR_QUADRATURE_HPP_

#include <functional>
#include <span>
#include <vector>

#include "axidir/dimension.hpp"

namespace axidir {

// sum_i w[i] f(x[i]) approximates int f(x) w(x) dx over the rule's range.
struct AxisymRule {
  std::vector<double> x;
  std::vector<double> w;
};

// Gauss-Jacobi nodes/weights on [-1, 1] for (1-t)^a (1+t)^b, a, b > -1.
AxisymRule gauss_jacobi(int n, double a, double b);

// Nodes per segment used for a given polynomial degree hint.
int node_count(Dimension dim, int degree_hint);

AxisymRule axisym_rule(Dimension dim, int nodes_per_segment, double x_lo = -1.0,
                       double x_hi = 1.0, std::span<const double> breaks = {});

using RealFn = std::function<double(double)>;

double integrate_axisym(const RealFn& f, Dimension dim, int degree_hint);

// Over [x_lo, x_hi]; breaks mark jumps of f inside the range.
double integrate_axisym(const RealFn& f, Dimension dim, int degree_hint, double x_lo,
                        double x_hi, std::span<const double> breaks = {});

// gamma_n = (1/N_n^2) int f P_n w dx, n = 0..N.
std::vector<double> transform_coeffs(const RealFn& f, int max_degree, Dimension dim,
                                     std::span<const double> breaks = {});

// Half-interval Gram matrix g_nm = int_0^1 P_n P_m w dx / (N_n^2 N_m^2).
class GramMatrix {
 public:
  GramMatrix(int order, Dimension dim);

  int order() const { return order_; }
  Dimension dim() const { return dim_; }
  double operator()(int n, int m) const { return g_[index(n, m)]; }
  double& at(int n, int m) { return g_[index(n, m)]; }

  // The back half-interval counterpart, (-1)^(n+m) g_nm.
  GramMatrix back() const;

  double quadratic_form(std::span<const double> a) const;

 private:
  size_t index(int n, int m) const {
    return static_cast<size_t>(n) * static_cast<size_t>(order_ + 1) + static_cast<size_t>(m);
  }

  int order_;
  Dimension dim_;
  std::vector<double> g_;
};

// Entries by quadrature.
GramMatrix gram_front(int order, Dimension dim);

// Entries from values and derivatives at x = 0 (valid for every D).
GramMatrix gram_front_closed(int order, Dimension dim);

}  // namespace axidir

#endif  // AXIDIR_QUADRATURE_HPP_
