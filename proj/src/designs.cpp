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

#include "axidir/designs.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "axidir/errors.hpp"
#include "axidir/quadrature.hpp"
#include "axidir/special.hpp"
#include "wide_gram.hpp"

namespace axidir {
namespace {

using detail::wide;

void require_order(int order) {
  if (order < 0) throw DomainError("order must be >= 0");
}

WeightVector make(Dimension dim, int order, std::vector<double> a, Normalization n) {
  return WeightVector{dim, order, std::move(a), n};
}

// Row-major dense matrix helpers for the generalized eigenproblem.
struct Mat {
  int n;
  std::vector<wide> v;
  explicit Mat(int size) : n(size), v(static_cast<size_t>(size) * size, 0) {}
  wide& operator()(int i, int j) { return v[static_cast<size_t>(i) * n + j]; }
  wide operator()(int i, int j) const { return v[static_cast<size_t>(i) * n + j]; }
};

// Lower Cholesky factor; throws if b is not positive definite.
Mat cholesky(const Mat& b) {
  Mat l(b.n);
  for (int j = 0; j < b.n; ++j) {
    wide d = b(j, j);
    for (int k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > 0)) throw DegenerateProblem("back-half Gram matrix is not positive definite");
    l(j, j) = sqrtq(d);
    for (int i = j + 1; i < b.n; ++i) {
      wide s = b(i, j);
      for (int k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }
  return l;
}

// Solves L y = rhs column by column, i.e. returns L^{-1} m.
Mat forward_solve(const Mat& l, const Mat& m) {
  Mat y(m.n);
  for (int c = 0; c < m.n; ++c) {
    for (int i = 0; i < m.n; ++i) {
      wide s = m(i, c);
      for (int k = 0; k < i; ++k) s -= l(i, k) * y(k, c);
      y(i, c) = s / l(i, i);
    }
  }
  return y;
}

// Cyclic Jacobi; returns the eigenvector of the largest eigenvalue.
std::vector<wide> top_eigenvector(Mat a) {
  const int n = a.n;
  Mat v(n);
  for (int i = 0; i < n; ++i) v(i, i) = 1;
  wide total = 0;
  for (wide x : a.v) total += x * x;
  const wide tol = wide(1e-13) * sqrtq(total);
  for (int sweep = 0;; ++sweep) {
    wide off = 0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) off += 2 * a(p, q) * a(p, q);
    }
    if (sqrtq(off) < tol) break;
    if (sweep == 100) throw NoConvergence("Jacobi sweeps did not converge");
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (a(p, q) == 0) continue;
        const wide theta = (a(q, q) - a(p, p)) / (2 * a(p, q));
        const wide t = (theta >= 0 ? 1 : -1) / (fabsq(theta) + sqrtq(theta * theta + 1));
        const wide c = 1 / sqrtq(t * t + 1);
        const wide s = t * c;
        for (int k = 0; k < n; ++k) {
          const wide akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const wide apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const wide vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  int best = 0;
  for (int i = 1; i < n; ++i) {
    if (a(i, i) > a(best, best)) best = i;
  }
  std::vector<wide> y(n);
  for (int i = 0; i < n; ++i) y[i] = v(i, best);
  return y;
}

}  // namespace

std::string_view normalization_name(Normalization n) {
  switch (n) {
    case Normalization::kA0Unity:
      return "a0";
    case Normalization::kG1Unity:
      return "g1";
    case Normalization::kRaw:
      return "raw";
  }
  return "raw";
}

double on_axis_value(const WeightVector& w) {
  double s = 0.0;
  for (int n = 0; n <= w.order; ++n) s += w.a[n] / norm_squared(n, w.dim);
  return s / lower_surface_area(w.dim);
}

WeightVector normalize(const WeightVector& w, Normalization target) {
  WeightVector out = w;
  out.normalization = target;
  double scale = 1.0;
  if (target == Normalization::kA0Unity) {
    if (w.a[0] == 0.0) throw DomainError("a_0 = 0 cannot be normalized to unity");
    scale = w.a[0];
  } else if (target == Normalization::kG1Unity) {
    scale = on_axis_value(w);
    if (scale == 0.0) throw DomainError("g(1) = 0 cannot be normalized to unity");
  }
  for (double& x : out.a) x /= scale;
  if (target == Normalization::kA0Unity) out.a[0] = 1.0;
  return out;
}

WeightVector basic(int order, Dimension dim) {
  require_order(order);
  return make(dim, order, std::vector<double>(static_cast<size_t>(order) + 1, 1.0),
              Normalization::kA0Unity);
}

MaxReSolution max_re(int order, Dimension dim) {
  require_order(order);
  const int deg = order + 1;
  auto p_and_dp = [&](double x) {
    return std::pair{eval_poly(x, deg, dim), derivative(x, deg, dim)};
  };

  // Bracket of the largest zero: first sign change of P_{N+1}(cos phi) from
  // phi = 0, on a grid much finer than the zero spacing.
  const double step = std::numbers::pi / (8.0 * (deg + dim.alpha()));
  double phi_in = 0.0, phi_out = step;
  while (eval_poly(std::cos(phi_out), deg, dim) > 0.0) {
    phi_in = phi_out;
    phi_out += step;
    if (phi_out > std::numbers::pi) throw NoConvergence("no zero of P_{N+1} found");
  }
  double lo = std::cos(phi_out), hi = std::cos(phi_in);  // P(lo) <= 0 < P(hi)

  double x = dim.d() >= 2.5 ? std::cos(137.9 / (order + 1.51) * std::numbers::pi / 180.0)
                            : std::cos(std::numbers::pi / (2.0 * (order + 1)));
  if (x < lo || x > hi) x = 0.5 * (lo + hi);
  int it = 0;
  for (;; ++it) {
    if (it == 100) throw NoConvergence("Newton iteration for max-rE did not converge");
    const auto [p, dp] = p_and_dp(x);
    if (p == 0.0) break;
    (p > 0.0 ? hi : lo) = x;
    double next = x - p / dp;
    // Bisect whenever Newton leaves the bracket.
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double dx = next - x;
    x = next;
    if (std::fabs(dx) < 1e-15) {
      ++it;
      break;
    }
  }
  const auto p = eval_sequence(x, order, dim).values;
  return MaxReSolution{make(dim, order, p, Normalization::kA0Unity), x, it};
}

WeightVector supercardioid(int order, Dimension dim) {
  if (order < 1) throw DomainError("supercardioid needs order >= 1");
  const int n = order + 1;
  const auto g = detail::wide_gram_front(order, dim);
  Mat gf(n), gb(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      gf(i, j) = g[static_cast<size_t>(i) * n + j];
      gb(i, j) = (i + j) % 2 ? -gf(i, j) : gf(i, j);
    }
  }
  const Mat l = cholesky(gb);
  // C = L^{-1} G_f L^{-T}; G_f symmetric so L^{-1} (L^{-1} G_f)^T.
  const Mat half = forward_solve(l, gf);
  Mat half_t(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) half_t(i, j) = half(j, i);
  }
  Mat c = forward_solve(l, half_t);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) c(i, j) = c(j, i) = (c(i, j) + c(j, i)) / 2;
  }
  const std::vector<wide> y = top_eigenvector(c);
  // a = L^{-T} y
  std::vector<wide> a(n);
  for (int i = n - 1; i >= 0; --i) {
    wide s = y[i];
    for (int k = i + 1; k < n; ++k) s -= l(k, i) * a[k];
    a[i] = s / l(i, i);
  }
  if (a[0] == 0) throw DegenerateProblem("supercardioid has a_0 = 0");
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = static_cast<double>(a[i] / a[0]);
  out[0] = 1.0;
  // a_0 > 0 after scaling; g(1) > 0 holds for the optimum, checked anyway.
  WeightVector w = make(dim, order, std::move(out), Normalization::kA0Unity);
  if (on_axis_value(w) < 0.0) throw DegenerateProblem("supercardioid with g(1) < 0 at a_0 = 1");
  return w;
}

ApproxSupercardioid supercardioid_approx(int order, Dimension dim) {
  require_order(order);
  const double d = dim.d();
  const double beta = (0.73 * order + 0.67 * d - 1.11) / (order + 1.11 * d - 1.5);
  WeightVector w = inphase(order, dim);
  for (double& x : w.a) x = std::pow(x, beta);
  const bool inside = order >= 1 && order <= 10 && d >= 2.0 && d <= 3.0;
  return ApproxSupercardioid{std::move(w), beta, !inside};
}

WeightVector inphase(int order, Dimension dim) {
  require_order(order);
  // a_n = N! Gamma(N+D-1) / ((N-n)! Gamma(N+n+D-1)) as a running product of
  // its consecutive ratios, which never overflows.
  std::vector<double> a(static_cast<size_t>(order) + 1);
  a[0] = 1.0;
  for (int n = 1; n <= order; ++n) {
    a[n] = a[n - 1] * (order - n + 1.0) / (order + n + dim.d() - 2.0);
  }
  return make(dim, order, std::move(a), Normalization::kA0Unity);
}

WeightVector maxflat(int order, int flat_l, Dimension dim) {
  if (flat_l < 0 || flat_l > order - 1) {
    throw InvalidFlatness("flatness L = " + std::to_string(flat_l) + " outside 0..N-1");
  }
  const double alpha = dim.alpha();
  const int m = order - flat_l - 1;
  // g' = c (1-x)^L (1+x)^M gives (1-x^2) g'' + (M+L) x g' - (M-L) g' = 0;
  // expanded in P_n this leaves the coefficient 2 (L-M)(n+alpha) on a_n.
  const double skew = flat_l - m;
  std::vector<double> a(static_cast<size_t>(order) + 1, 0.0);
  a[1] = 1.0;
  for (int n = 1; n < order; ++n) {
    const double prev = n >= 2 ? a[n - 1] : 0.0;  // (n-1) factor kills a_0
    a[n + 1] = -((order - n + 1.0) * (n - 1.0) * prev + 2.0 * skew * (n + alpha) * a[n]) /
               ((order + n + 2.0 * alpha + 1.0) * (n + 2.0 * alpha + 1.0));
  }
  // g(-1) = 0 fixes a_0.
  const double nn0 = norm_squared(0, dim);
  double a0 = 0.0;
  for (int n = 1; n <= order; ++n) a0 -= (n % 2 ? -1.0 : 1.0) * a[n] / norm_squared(n, dim);
  a[0] = a0 * nn0;
  return normalize(make(dim, order, std::move(a), Normalization::kRaw), Normalization::kG1Unity);
}

WeightVector cap(int order, double x0, Dimension dim) {
  require_order(order);
  if (!(x0 > -1.0 && x0 < 1.0)) throw DomainError("cap needs -1 < x0 < 1");
  std::vector<double> a(static_cast<size_t>(order) + 1);
  if (dim.d() == 2.0) {
    a[0] = std::acos(x0);
  } else if (dim.d() == 3.0) {
    a[0] = 1.0 - x0;
  } else {
    a[0] = integrate_axisym([](double) { return 1.0; }, dim, 0, x0, 1.0);
  }
  const double w0 = std::pow(1.0 - x0 * x0, 0.5 * (dim.d() - 3.0));
  const auto p = eval_sequence(x0, order + 1, dim).values;
  for (int n = 1; n <= order; ++n) {
    a[n] = w0 / (2.0 * n + 2.0 * dim.alpha()) * (p[n - 1] - p[n + 1]);
  }
  return make(dim, order, std::move(a), Normalization::kRaw);
}

WeightVector cap_trapezoid(int order, double spacing_deg, Dimension dim) {
  if (!(spacing_deg > 0.0 && spacing_deg < 180.0 / 1.375)) {
    throw DomainError("spacing must satisfy 0 < s < 180/1.375 degrees");
  }
  const double rad = std::numbers::pi / 180.0;
  const WeightVector wide_cap = cap(order, std::cos(1.375 * spacing_deg / 2.0 * rad), dim);
  const WeightVector narrow_cap = cap(order, std::cos(0.75 * spacing_deg / 2.0 * rad), dim);
  std::vector<double> a(wide_cap.a.size());
  for (size_t n = 0; n < a.size(); ++n) a[n] = wide_cap.a[n] * narrow_cap.a[n];
  return make(dim, order, std::move(a), Normalization::kRaw);
}

}  // namespace axidir
