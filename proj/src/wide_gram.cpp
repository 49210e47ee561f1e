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

#include "wide_gram.hpp"

namespace axidir::detail {
namespace {

struct AtZero {
  std::vector<wide> value;       // P_n(0)
  std::vector<wide> slope;       // P_n'(0)
  std::vector<wide> norm2;       // N_n^2
};

// P_n(0) and P_n'(0) follow from the recurrence at x = 0:
// P_{n+1}(0) = -c_n P_{n-1}(0), P'_{n+1}(0) = a_n P_n(0) - c_n P'_{n-1}(0).
AtZero at_zero(int order, Dimension dim) {
  const wide d = dim.d();
  const wide alpha = (d - 2) / 2;
  AtZero z;
  const size_t len = static_cast<size_t>(order) + 1;
  z.value.assign(len, 0);
  z.slope.assign(len, 0);
  z.norm2.assign(len, 0);
  z.value[0] = 1;
  if (order >= 1) z.slope[1] = 1;
  for (int n = 1; n < order; ++n) {
    const wide den = n + d - 2;
    const wide a = (2 * n + d - 2) / den;
    const wide c = n / den;
    z.value[n + 1] = -c * z.value[n - 1];
    z.slope[n + 1] = a * z.value[n] - c * z.slope[n - 1];
  }
  // N_0^2 = sqrt(pi) Gamma((D-1)/2) / Gamma(D/2)
  z.norm2[0] = sqrtq(M_PIq) * expq(lgammaq((d - 1) / 2) - lgammaq(d / 2));
  for (int n = 1; n <= order; ++n) {
    const wide beta_n = n == 1 ? wide(1) : (n - 1 + 2 * alpha) / (2 * (n - 1 + alpha));
    z.norm2[n] = z.norm2[n - 1] * (n / (2 * (n + alpha))) / beta_n;
  }
  return z;
}

}  // namespace

std::vector<wide> wide_gram_front(int order, Dimension dim) {
  const AtZero z = at_zero(order, dim);
  const wide alpha = wide(dim.d() - 2) / 2;
  const size_t len = static_cast<size_t>(order) + 1;
  std::vector<wide> g(len * len, 0);
  for (int n = 0; n <= order; ++n) {
    g[n * len + n] = 1 / (2 * z.norm2[n]);
    for (int m = n + 1; m <= order; m += 2) {
      const wide lam_n = n * (n + 2 * alpha);
      const wide lam_m = m * (m + 2 * alpha);
      const wide wr = z.slope[n] * z.value[m] - z.slope[m] * z.value[n];
      const wide v = wr / ((lam_n - lam_m) * z.norm2[n] * z.norm2[m]);
      g[n * len + m] = v;
      g[m * len + n] = v;
    }
  }
  return g;
}

HalfEnergies half_energies(std::span<const double> a, Dimension dim) {
  const int order = static_cast<int>(a.size()) - 1;
  const auto g = wide_gram_front(order, dim);
  const size_t len = a.size();
  HalfEnergies e{0, 0};
  for (size_t n = 0; n < len; ++n) {
    for (size_t m = 0; m < len; ++m) {
      const wide t = wide(a[n]) * g[n * len + m] * wide(a[m]);
      e.front += t;
      e.back += ((n + m) % 2 ? -t : t);
    }
  }
  return e;
}

}  // namespace axidir::detail
