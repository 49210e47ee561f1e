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

// Compiled with -mavx2 -mfma; only reached through the runtime dispatcher.

#include <immintrin.h>

#include <algorithm>
#include <vector>

#include "axidir/errors.hpp"
#include "axidir/kernels.hpp"

namespace axidir::kernels::avx2 {

void pattern_eval(const RecurrenceTable& rec, std::span<const double> c,
                  std::span<const double> x, std::span<double> out) {
  const int nmax = rec.max_degree;
  if (c.size() != static_cast<size_t>(nmax) + 1) throw DomainError("coefficient length mismatch");
  if (out.size() != x.size()) throw DomainError("output length mismatch");
  const size_t len = x.size();
  const size_t body = len - len % 4;
  for (size_t i = 0; i < body; i += 4) {
    const __m256d xv = _mm256_loadu_pd(x.data() + i);
    __m256d p_prev = _mm256_set1_pd(1.0);
    __m256d p = xv;
    __m256d acc = _mm256_set1_pd(c[0]);
    if (nmax >= 1) acc = _mm256_fmadd_pd(_mm256_set1_pd(c[1]), p, acc);
    for (int n = 1; n < nmax; ++n) {
      const __m256d ax = _mm256_mul_pd(_mm256_set1_pd(rec.a[n]), xv);
      const __m256d cp = _mm256_mul_pd(_mm256_set1_pd(rec.c[n]), p_prev);
      const __m256d p_next = _mm256_fmsub_pd(ax, p, cp);
      p_prev = p;
      p = p_next;
      acc = _mm256_fmadd_pd(_mm256_set1_pd(c[n + 1]), p, acc);
    }
    _mm256_storeu_pd(out.data() + i, acc);
  }
  if (body < len) {
    scalar::pattern_eval(rec, c, x.subspan(body), out.subspan(body));
  }
}

void degree_sums(const RecurrenceTable& rec, std::span<const double> x, std::span<double> sums) {
  const int nmax = rec.max_degree;
  if (sums.size() != static_cast<size_t>(nmax) + 1) throw DomainError("sums length mismatch");
  const size_t len = x.size();
  const size_t body = len - len % 4;
  // Lane partial sums, four doubles per degree.
  std::vector<double> acc(4 * (static_cast<size_t>(nmax) + 1), 0.0);
  auto bump = [&acc](int n, __m256d v) {
    double* slot = acc.data() + 4 * static_cast<size_t>(n);
    _mm256_storeu_pd(slot, _mm256_add_pd(_mm256_loadu_pd(slot), v));
  };
  for (size_t i = 0; i < body; i += 4) {
    const __m256d xv = _mm256_loadu_pd(x.data() + i);
    __m256d p_prev = _mm256_set1_pd(1.0);
    __m256d p = xv;
    bump(0, p_prev);
    if (nmax >= 1) bump(1, p);
    for (int n = 1; n < nmax; ++n) {
      const __m256d ax = _mm256_mul_pd(_mm256_set1_pd(rec.a[n]), xv);
      const __m256d cp = _mm256_mul_pd(_mm256_set1_pd(rec.c[n]), p_prev);
      const __m256d p_next = _mm256_fmsub_pd(ax, p, cp);
      p_prev = p;
      p = p_next;
      bump(n + 1, p);
    }
  }
  std::vector<double> tail(sums.size(), 0.0);
  if (body < len) scalar::degree_sums(rec, x.subspan(body), tail);
  for (int n = 0; n <= nmax; ++n) {
    const double* lanes = acc.data() + 4 * static_cast<size_t>(n);
    sums[n] = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]) + tail[n];
  }
}

}  // namespace axidir::kernels::avx2
