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

// Batched polynomial kernels. The scalar versions are the reference; the
// AVX2+FMA versions run four abscissae per lane group and are picked at
// runtime when the CPU supports them.

#ifndef AXIDIR_KERNELS_HPP_
#define AXIDIR_KERNELS_HPP_

#include <span>

#include "axidir/special.hpp"

namespace axidir::kernels {

enum class Isa { kScalar, kAvx2 };

// True when the AVX2 translation unit was built and the CPU has AVX2+FMA.
bool avx2_available();

Isa active_isa();

// Forces the scalar path (process-wide). Used by benchmarks and tests.
void force_scalar(bool on);

const char* isa_name(Isa isa);

// out[i] = sum_n c[n] P_n(x[i]); c.size() == rec.max_degree + 1.
void pattern_eval(const RecurrenceTable& rec, std::span<const double> c,
                  std::span<const double> x, std::span<double> out);

// sums[n] = sum_i P_n(x[i]) for n = 0..rec.max_degree.
void degree_sums(const RecurrenceTable& rec, std::span<const double> x, std::span<double> sums);

namespace scalar {
void pattern_eval(const RecurrenceTable& rec, std::span<const double> c,
                  std::span<const double> x, std::span<double> out);
void degree_sums(const RecurrenceTable& rec, std::span<const double> x, std::span<double> sums);
}  // namespace scalar

#if defined(AXIDIR_HAVE_AVX2)
namespace avx2 {
void pattern_eval(const RecurrenceTable& rec, std::span<const double> c,
                  std::span<const double> x, std::span<double> out);
void degree_sums(const RecurrenceTable& rec, std::span<const double> x, std::span<double> sums);
}  // namespace avx2
#endif

}  // namespace axidir::kernels

#endif  // AXIDIR_KERNELS_HPP_
