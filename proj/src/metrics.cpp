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

#include "axidir/metrics.hpp"

#include <cmath>

#include "axidir/errors.hpp"
#include "axidir/kernels.hpp"
#include "axidir/quadrature.hpp"
#include "axidir/special.hpp"
#include "wide_gram.hpp"

namespace axidir {
namespace {

void require_nonzero(const WeightVector& w) {
  if (w.a.size() != static_cast<size_t>(w.order) + 1) throw DomainError("weight length mismatch");
  for (double x : w.a) {
    if (x != 0.0) return;
  }
  throw DomainError("weight vector is zero");
}

}  // namespace

std::vector<double> pattern_coeffs(const WeightVector& w) {
  const double s = lower_surface_area(w.dim);
  std::vector<double> c(w.a.size());
  for (int n = 0; n <= w.order; ++n) c[n] = w.a[n] / (s * norm_squared(n, w.dim));
  return c;
}

double eval_pattern(const WeightVector& w, double x) {
  const auto p = eval_sequence(x, w.order, w.dim).values;
  const auto c = pattern_coeffs(w);
  double g = 0.0;
  for (int n = 0; n <= w.order; ++n) g += c[n] * p[n];
  return g;
}

void eval_pattern(const WeightVector& w, std::span<const double> x, std::span<double> out) {
  kernels::pattern_eval(recurrence_table(w.order, w.dim), pattern_coeffs(w), x, out);
}

PatternMetrics compute_metrics(const WeightVector& w) {
  require_nonzero(w);
  const Dimension dim = w.dim;
  double energy = 0.0, on_axis = 0.0, re_num = 0.0;
  for (int n = 0; n <= w.order; ++n) {
    const double inv = 1.0 / norm_squared(n, dim);
    energy += w.a[n] * w.a[n] * inv;
    on_axis += w.a[n] * inv;
    if (n < w.order) re_num += 2.0 * beta_coeff(n + 1, dim) * w.a[n] * w.a[n + 1] * inv;
  }
  const double s = lower_surface_area(dim);
  PatternMetrics m;
  m.P = w.a[0];
  m.E = energy / s;
  const double g1 = on_axis / s;
  m.Q = surface_area(dim) * g1 * g1 / m.E;
  if (w.a[0] != 0.0) m.rV = (w.order >= 1 ? w.a[1] : 0.0) / w.a[0];
  m.rE = re_num / energy;
  const auto h = detail::half_energies(w.a, dim);
  m.FBR = static_cast<double>(h.front / h.back);
  return m;
}

PatternMetrics compute_metrics_numeric(const WeightVector& w) {
  require_nonzero(w);
  const Dimension dim = w.dim;
  const int nodes = node_count(dim, 2 * w.order + 2);
  const double s = lower_surface_area(dim);

  struct Moments {
    double g = 0, gx = 0, g2 = 0, g2x = 0;
  };
  auto moments = [&](double lo, double hi) {
    const AxisymRule r = axisym_rule(dim, nodes, lo, hi);
    std::vector<double> g(r.x.size());
    eval_pattern(w, r.x, g);
    Moments mo;
    for (size_t i = 0; i < g.size(); ++i) {
      const double wg = r.w[i] * g[i];
      mo.g += wg;
      mo.gx += wg * r.x[i];
      mo.g2 += wg * g[i];
      mo.g2x += wg * g[i] * r.x[i];
    }
    return mo;
  };
  const Moments front = moments(0.0, 1.0);
  const Moments back = moments(-1.0, 0.0);

  PatternMetrics m;
  const double ig = front.g + back.g;
  const double ig2 = front.g2 + back.g2;
  m.P = s * ig;
  m.E = s * ig2;
  const double g1 = eval_pattern(w, 1.0);
  m.Q = surface_area(dim) * g1 * g1 / m.E;
  if (w.a[0] != 0.0) m.rV = (front.gx + back.gx) / ig;
  m.rE = (front.g2x + back.g2x) / ig2;
  m.FBR = front.g2 / back.g2;
  return m;
}

}  // namespace axidir
