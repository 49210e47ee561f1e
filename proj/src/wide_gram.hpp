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

// Internal: closed-form half-interval Gram entries in binary128. FBR values
// of good designs reach 1e11 and the back-half quadratic form cancels that
// many digits, so double entries are not enough.

#ifndef AXIDIR_SRC_WIDE_GRAM_HPP_
#define AXIDIR_SRC_WIDE_GRAM_HPP_

#include <quadmath.h>

#include <span>
#include <vector>

#include "axidir/dimension.hpp"

namespace axidir::detail {

using wide = __float128;

// Row-major (N+1)x(N+1) front Gram matrix.
std::vector<wide> wide_gram_front(int order, Dimension dim);

struct HalfEnergies {
  wide front;
  wide back;
};

// a^T G_f a and a^T G_b a.
HalfEnergies half_energies(std::span<const double> a, Dimension dim);

}  // namespace axidir::detail

#endif  // AXIDIR_SRC_WIDE_GRAM_HPP_
