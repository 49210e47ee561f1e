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

#include <cmath>
#include <vector>

#include "axidir/errors.hpp"
#include "axidir/kernels.hpp"

namespace axidir::kernels::scalar {

// Both kernels follow the vector code operation for operation: fused
// multiply-adds where it fuses, and degree sums split over four lanes with
// the same final reduction. Scalar and AVX2 results are therefore identical
// bit for bit, which keeps CLI output independent of the host CPU.

void pattern_eval(const RecurrenceTable& rec, std::span<const double> c,
                  std::span<const double> x, std::span<double> out) {
  const int nmax = rec.max_degree;
  if (c.size() != static_cast<size_t>(nmax) + 1) throw DomainError("coefficient length mismatch");
  if (out.size() != x.size()) throw DomainError("output length mismatch");
  for (size_t i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    double p_prev = 1.0;
    double p = xi;
    double acc = c[0];
    if (nmax >= 1) acc = std::fma(c[1], p, acc);
    for (int n = 1; n < nmax; ++n) {
      const double p_next = std::fma(rec.a[n] * xi, p, -(rec.c[n] * p_prev));
      p_prev = p;
      p = p_next;
      acc = std::fma(c[n + 1], p, acc);
    }
    out[i] = acc;
  }
}

void degree_sums(const RecurrenceTable& rec, std::span<const double> x, std::span<double> sums) {
  const int nmax = rec.max_degree;
  if (sums.size() != static_cast<size_t>(nmax) + 1) throw DomainError("sums length mismatch");
  const size_t deg = static_cast<size_t>(nmax) + 1;
  const size_t body = x.size() - x.size() % 4;
  std::vector<double> lanes(4 * deg, 0.0);
  std::vector<double> tail(deg, 0.0);
  auto accumulate = [&](double xi, double* slot, size_t stride) {
    double p_prev = 1.0;
    double p = xi;
    slot[0] += 1.0;
    if (nmax >= 1) slot[stride] += p;
    for (int n = 1; n < nmax; ++n) {
      const double p_next = std::fma(rec.a[n] * xi, p, -(rec.c[n] * p_prev));
      p_prev = p;
      p = p_next;
      slot[stride * (n + 1)] += p;
    }
  };
  for (size_t i = 0; i < body; ++i) accumulate(x[i], lanes.data() + i % 4, 4);
  for (size_t i = body; i < x.size(); ++i) accumulate(x[i], tail.data(), 1);
  for (size_t n = 0; n < deg; ++n) {
    const double* l = lanes.data() + 4 * n;
    sums[n] = (l[0] + l[1]) + (l[2] + l[3]) + tail[n];
  }
}

}  // namespace axidir::kernels::scalar
