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

#include "axidir/special.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace axidir {
namespace {

constexpr double kOvershoot = 1e-12;

double clamp_unit(double x) {
  if (!(std::fabs(x) <= 1.0 + kOvershoot)) {
    throw DomainError("x = " + std::to_string(x) + " outside [-1, 1]");
  }
  return std::fmax(-1.0, std::fmin(1.0, x));
}

void require_degree(int n) {
  if (n < 0) throw DomainError("degree must be >= 0");
}

}  // namespace

double sphere_surface(double d) {
  if (!(d > 0.0)) throw DomainError("sphere dimension must be > 0");
  return 2.0 * std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(0.5 * d);
}

double surface_area(Dimension dim) { return sphere_surface(dim.d()); }

double lower_surface_area(Dimension dim) { return sphere_surface(dim.d() - 1.0); }

RecurrenceTable recurrence_table(int max_degree, Dimension dim) {
  require_degree(max_degree);
  RecurrenceTable t;
  t.max_degree = max_degree;
  t.a.assign(static_cast<size_t>(max_degree) + 1, 0.0);
  t.c.assign(static_cast<size_t>(max_degree) + 1, 0.0);
  const double d = dim.d();
  for (int n = 1; n < max_degree; ++n) {
    const double den = n + d - 2.0;
    t.a[n] = (2.0 * n + d - 2.0) / den;
    t.c[n] = n / den;
  }
  return t;
}

PolySequence eval_sequence(double x, int max_degree, Dimension dim) {
  require_degree(max_degree);
  x = clamp_unit(x);
  PolySequence s{dim, x, std::vector<double>(static_cast<size_t>(max_degree) + 1)};
  auto& v = s.values;
  v[0] = 1.0;
  if (max_degree >= 1) v[1] = x;
  const double d = dim.d();
  for (int n = 1; n < max_degree; ++n) {
    const double den = n + d - 2.0;
    v[n + 1] = ((2.0 * n + d - 2.0) / den) * x * v[n] - (n / den) * v[n - 1];
  }
  return s;
}

double eval_poly(double x, int n, Dimension dim) {
  return eval_sequence(x, n, dim).values.back();
}

CoeffList power_series_coeffs(int n, Dimension dim) {
  require_degree(n);
  const long double two_alpha = 2.0L * dim.alpha();
  std::vector<long double> c(static_cast<size_t>(n) + 1, 0.0L);
  c[n % 2] = 1.0L;
  for (int k = n % 2; k + 2 <= n; k += 2) {
    c[k + 2] = -static_cast<long double>(n - k) * (n + k + two_alpha) /
               ((k + 1.0L) * (k + 2.0L)) * c[k];
  }
  long double at_one = 0.0L;
  for (long double ck : c) at_one += ck;
  CoeffList out{n, dim, std::vector<double>(c.size())};
  for (size_t k = 0; k < c.size(); ++k) {
    out.coeffs[k] = static_cast<double>(c[k] / at_one);
  }
  return out;
}

double beta_coeff(int n, Dimension dim) {
  if (n < 1) throw DomainError("beta_n needs n >= 1");
  if (n == 1) return 1.0;
  const double a = dim.alpha();
  return (n - 1.0 + 2.0 * a) / (2.0 * (n - 1.0 + a));
}

double norm_squared(int n, Dimension dim) {
  require_degree(n);
  const double a = dim.alpha();
  double nn = surface_area(dim) / lower_surface_area(dim);
  for (int k = 1; k <= n; ++k) {
    // 1 - beta_{k+1} = k / (2 (k + alpha))
    nn *= (k / (2.0 * (k + a))) / beta_coeff(k, dim);
  }
  return nn;
}

double norm_squared_closed(int n, Dimension dim) {
  require_degree(n);
  const double d = dim.d();
  const double ratio = surface_area(dim) / lower_surface_area(dim);
  if (n == 0) return ratio;
  const double lg = std::lgamma(n + 1.0) + std::lgamma(d - 1.0) - std::lgamma(n + d - 2.0);
  return std::exp(lg) / (2.0 * n + d - 2.0) * ratio;
}

double derivative(double x, int n, Dimension dim) {
  require_degree(n);
  x = clamp_unit(x);
  if (n == 0) return 0.0;
  const double d = dim.d();
  double p_prev = 1.0, p = x;
  double dp_prev = 0.0, dp = 1.0;
  for (int k = 1; k < n; ++k) {
    const double den = k + d - 2.0;
    const double a = (2.0 * k + d - 2.0) / den;
    const double c = k / den;
    const double p_next = a * x * p - c * p_prev;
    const double dp_next = a * (p + x * dp) - c * dp_prev;
    p_prev = p;
    p = p_next;
    dp_prev = dp;
    dp = dp_next;
  }
  return dp;
}

double value_at_zero(int n, Dimension dim) {
  require_degree(n);
  if (n % 2 == 1) return 0.0;
  const int m = n / 2;
  if (m == 0) return 1.0;
  // (2m)!/m! * (alpha)^(m) / (2 alpha)^(2m), with alpha/(2 alpha) = 1/2 taken
  // out so the alpha -> 0 limit is exact.
  const long double a = dim.alpha();
  long double r = 0.5L;
  for (int j = 1; j <= 2 * m - 1; ++j) {
    r /= 2.0L * a + j;
    if (j <= m) r *= m + j;
    if (j <= m - 1) r *= a + j;
  }
  return static_cast<double>(m % 2 ? -r : r);
}

double derivative_at_zero(int n, Dimension dim) {
  require_degree(n);
  if (n % 2 == 0) return 0.0;
  const int l = (n - 1) / 2;
  // 2 (2l+1)!/l! * (alpha)^(l+1) / (2 alpha)^(2l+1) with alpha/(2 alpha)
  // cancelled, as in value_at_zero.
  const long double a = dim.alpha();
  long double r = 1.0L;
  for (int j = 1; j <= 2 * l; ++j) {
    r /= 2.0L * a + j;
    if (j <= l + 1) r *= l + j;
    if (j <= l) r *= a + j;
  }
  return static_cast<double>(l % 2 ? -r : r);
}

double cd_kernel(double x, double x0, int max_degree, Dimension dim) {
  require_degree(max_degree);
  x = clamp_unit(x);
  x0 = clamp_unit(x0);
  const int nmax = max_degree;
  if (std::fabs(x - x0) <= 1e-6) {
    const auto px = eval_sequence(x, nmax, dim).values;
    const auto py = eval_sequence(x0, nmax, dim).values;
    double sum = 0.0;
    for (int n = 0; n <= nmax; ++n) sum += px[n] * py[n] / norm_squared(n, dim);
    return sum;
  }
  const auto px = eval_sequence(x, nmax + 1, dim).values;
  const auto py = eval_sequence(x0, nmax + 1, dim).values;
  const double num = px[nmax + 1] * py[nmax] - px[nmax] * py[nmax + 1];
  return beta_coeff(nmax + 1, dim) * num / ((x - x0) * norm_squared(nmax, dim));
}

}  // namespace axidir
