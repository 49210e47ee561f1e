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

// Chebyshev and Legendre coefficient rows 0..9, ascending powers.

#ifndef AXIDIR_TESTS_FIXTURES_TABLES_HPP_
#define AXIDIR_TESTS_FIXTURES_TABLES_HPP_

#include <vector>

namespace axidir::fixtures {

struct RationalRow {
  std::vector<double> num;
  double den;
};

inline const std::vector<RationalRow>& chebyshev_rows() {
  static const std::vector<RationalRow> rows = {
      {{1}, 1},
      {{0, 1}, 1},
      {{-1, 0, 2}, 1},
      {{0, -3, 0, 4}, 1},
      {{1, 0, -8, 0, 8}, 1},
      {{0, 5, 0, -20, 0, 16}, 1},
      {{-1, 0, 18, 0, -48, 0, 32}, 1},
      {{0, -7, 0, 56, 0, -112, 0, 64}, 1},
      {{1, 0, -32, 0, 160, 0, -256, 0, 128}, 1},
      {{0, 9, 0, -120, 0, 432, 0, -576, 0, 256}, 1},
  };
  return rows;
}

inline const std::vector<RationalRow>& legendre_rows() {
  static const std::vector<RationalRow> rows = {
      {{1}, 1},
      {{0, 1}, 1},
      {{-1, 0, 3}, 2},
      {{0, -3, 0, 5}, 2},
      {{3, 0, -30, 0, 35}, 8},
      {{0, 15, 0, -70, 0, 63}, 8},
      {{-5, 0, 105, 0, -315, 0, 231}, 16},
      {{0, -35, 0, 315, 0, -693, 0, 429}, 16},
      {{35, 0, -1260, 0, 6930, 0, -12012, 0, 6435}, 128},
      {{0, 315, 0, -4620, 0, 18018, 0, -25740, 0, 12155}, 128},
  };
  return rows;
}

}  // namespace axidir::fixtures

#endif  // AXIDIR_TESTS_FIXTURES_TABLES_HPP_
