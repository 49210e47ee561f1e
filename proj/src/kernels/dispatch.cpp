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

#include <atomic>

#include "axidir/kernels.hpp"

namespace axidir::kernels {
namespace {

std::atomic<bool> g_force_scalar{false};

bool cpu_has_avx2() {
#if defined(AXIDIR_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

}  // namespace

bool avx2_available() {
  static const bool ok = cpu_has_avx2();
  return ok;
}

Isa active_isa() {
  if (!g_force_scalar.load(std::memory_order_relaxed) && avx2_available()) return Isa::kAvx2;
  return Isa::kScalar;
}

void force_scalar(bool on) { g_force_scalar.store(on, std::memory_order_relaxed); }

const char* isa_name(Isa isa) { return isa == Isa::kAvx2 ? "avx2" : "scalar"; }

void pattern_eval(const RecurrenceTable& rec, std::span<const double> c,
                  std::span<const double> x, std::span<double> out) {
#if defined(AXIDIR_HAVE_AVX2)
  if (active_isa() == Isa::kAvx2) return avx2::pattern_eval(rec, c, x, out);
#endif
  scalar::pattern_eval(rec, c, x, out);
}

void degree_sums(const RecurrenceTable& rec, std::span<const double> x, std::span<double> sums) {
#if defined(AXIDIR_HAVE_AVX2)
  if (active_isa() == Isa::kAvx2) return avx2::degree_sums(rec, x, sums);
#endif
  scalar::degree_sums(rec, x, sums);
}

}  // namespace axidir::kernels
