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

#include "axidir/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

#include "axidir/errors.hpp"
#include "axidir/special.hpp"
#include "wide_gram.hpp"

namespace axidir {
namespace {

constexpr double kPi = std::numbers::pi;

AxisymRule compute_gauss_jacobi(int n, double a, double b) {
  // Golub-Welsch on the monic Jacobi recurrence.
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  const double ab = a + b;
  diag(0) = (b - a) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    diag(k) = (b * b - a * a) / (s * (s + 2.0));
    const double beta = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    sub(k - 1) = std::sqrt(beta);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success) throw NoConvergence("Golub-Welsch eigensolver failed");
  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) +
                              std::lgamma(b + 1.0) - std::lgamma(ab + 2.0));
  AxisymRule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < n; ++i) {
    r.x[i] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    r.w[i] = mu0 * v0 * v0;
  }
  return r;
}

// Add the phi-segment [pa, pb] to the rule.
void add_segment(AxisymRule& out, double pa, double pb, double s, int n) {
  const double h = 0.5 * (pb - pa);
  const bool left_pole = s != 0.0 && pa == 0.0;
  const bool right_pole = s != 0.0 && pb == kPi;
  const AxisymRule base = gauss_jacobi(n, right_pole ? s : 0.0, left_pole ? s : 0.0);
  for (int i = 0; i < n; ++i) {
    const double t = base.x[i];
    const double phi = pa + h * (1.0 + t);
    double f;
    if (left_pole) {
      f = std::pow(h, s) * std::pow(std::sin(phi) / phi, s);
    } else if (right_pole) {
      f = std::pow(h, s) * std::pow(std::sin(phi) / (kPi - phi), s);
    } else {
      f = std::pow(std::sin(phi), s);
    }
    out.x.push_back(std::cos(phi));
    out.w.push_back(base.w[i] * h * f);
  }
}

}  // namespace

AxisymRule gauss_jacobi(int n, double a, double b) {
  if (n < 1) throw DomainError("rule needs at least one node");
  if (!(a > -1.0) || !(b > -1.0)) throw DomainError("Jacobi exponents must exceed -1");
  static std::mutex mu;
  static std::map<std::tuple<int, double, double>, AxisymRule> cache;
  const auto key = std::make_tuple(n, a, b);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  AxisymRule r = compute_gauss_jacobi(n, a, b);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(r)).first->second;
}

int node_count(Dimension dim, int degree_hint) {
  return std::max(64, std::max(degree_hint, 0) + static_cast<int>(std::ceil(dim.d())) + 16);
}

AxisymRule axisym_rule(Dimension dim, int nodes_per_segment, double x_lo, double x_hi,
                       std::span<const double> breaks) {
  if (!(x_lo >= -1.0 && x_hi <= 1.0 && x_lo < x_hi)) {
    throw DomainError("integration range must satisfy -1 <= lo < hi <= 1");
  }
  // phi decreases with x.
  const double p_lo = x_hi >= 1.0 ? 0.0 : std::acos(x_hi);
  const double p_hi = x_lo <= -1.0 ? kPi : std::acos(x_lo);
  std::vector<double> cuts{p_lo, p_hi};
  if (p_lo < 0.5 * kPi && 0.5 * kPi < p_hi) cuts.push_back(0.5 * kPi);
  for (double xb : breaks) {
    if (xb > x_lo && xb < x_hi) cuts.push_back(std::acos(xb));
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  AxisymRule out;
  const double s = dim.d() - 2.0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    add_segment(out, cuts[i], cuts[i + 1], s, nodes_per_segment);
  }
  return out;
}

double integrate_axisym(const RealFn& f, Dimension dim, int degree_hint) {
  return integrate_axisym(f, dim, degree_hint, -1.0, 1.0);
}

double integrate_axisym(const RealFn& f, Dimension dim, int degree_hint, double x_lo,
                        double x_hi, std::span<const double> breaks) {
  const AxisymRule r = axisym_rule(dim, node_count(dim, degree_hint), x_lo, x_hi, breaks);
  double sum = 0.0;
  for (size_t i = 0; i < r.x.size(); ++i) sum += r.w[i] * f(r.x[i]);
  return sum;
}

std::vector<double> transform_coeffs(const RealFn& f, int max_degree, Dimension dim,
                                     std::span<const double> breaks) {
  const AxisymRule r = axisym_rule(dim, node_count(dim, 2 * max_degree + 16), -1.0, 1.0, breaks);
  std::vector<double> gamma(static_cast<size_t>(max_degree) + 1, 0.0);
  for (size_t i = 0; i < r.x.size(); ++i) {
    const double fx = r.w[i] * f(r.x[i]);
    const auto p = eval_sequence(r.x[i], max_degree, dim).values;
    for (int n = 0; n <= max_degree; ++n) gamma[n] += fx * p[n];
  }
  for (int n = 0; n <= max_degree; ++n) gamma[n] /= norm_squared(n, dim);
  return gamma;
}

GramMatrix::GramMatrix(int order, Dimension dim)
    : order_(order), dim_(dim), g_(static_cast<size_t>(order + 1) * (order + 1), 0.0) {
  if (order < 0) throw DomainError("Gram order must be >= 0");
}

GramMatrix GramMatrix::back() const {
  GramMatrix b = *this;
  for (int n = 0; n <= order_; ++n) {
    for (int m = 0; m <= order_; ++m) {
      if ((n + m) % 2) b.at(n, m) = -b(n, m);
    }
  }
  return b;
}

double GramMatrix::quadratic_form(std::span<const double> a) const {
  if (a.size() != static_cast<size_t>(order_) + 1) throw DomainError("weight length mismatch");
  double s = 0.0;
  for (int n = 0; n <= order_; ++n) {
    for (int m = 0; m <= order_; ++m) s += a[n] * (*this)(n, m) * a[m];
  }
  return s;
}

GramMatrix gram_front(int order, Dimension dim) {
  GramMatrix g(order, dim);
  const AxisymRule r = axisym_rule(dim, node_count(dim, 2 * order), 0.0, 1.0);
  std::vector<double> inv(static_cast<size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) inv[n] = 1.0 / norm_squared(n, dim);
  for (size_t i = 0; i < r.x.size(); ++i) {
    const auto p = eval_sequence(r.x[i], order, dim).values;
    for (int n = 0; n <= order; ++n) {
      const double wn = r.w[i] * p[n] * inv[n];
      for (int m = n; m <= order; ++m) g.at(n, m) += wn * p[m] * inv[m];
    }
  }
  for (int n = 0; n <= order; ++n) {
    for (int m = 0; m < n; ++m) g.at(n, m) = g(m, n);
  }
  return g;
}

GramMatrix gram_front_closed(int order, Dimension dim) {
  const auto w = detail::wide_gram_front(order, dim);
  GramMatrix g(order, dim);
  const size_t len = static_cast<size_t>(order) + 1;
  for (int n = 0; n <= order; ++n) {
    for (int m = 0; m <= order; ++m) g.at(n, m) = static_cast<double>(w[n * len + m]);
  }
  return g;
}

}  // namespace axidir
