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

#ifndef AXIDIR_DIMENSION_HPP_
#define AXIDIR_DIMENSION_HPP_

#include <cmath>

#include "axidir/errors.hpp"

namespace axidir {

// Real space dimension D >= 2. alpha = (D-2)/2 is always derived from D.
class Dimension {
 public:
  explicit Dimension(double d) : d_(d) {
    if (!(d >= 2.0) || !std::isfinite(d)) {
      throw DomainError("dimension must be a finite real >= 2");
    }
  }

  double d() const { return d_; }
  double alpha() const { return 0.5 * (d_ - 2.0); }

  friend bool operator==(const Dimension&, const Dimension&) = default;

 private:
  double d_;
};

}  // namespace axidir

#endif  // AXIDIR_DIMENSION_HPP_
