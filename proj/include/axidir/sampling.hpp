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

// Node sets on the circle and the sphere, t-design verification and
// discrete pattern measures.

#ifndef AXIDIR_SAMPLING_HPP_
#define AXIDIR_SAMPLING_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "axidir/designs.hpp"

namespace axidir {

using Vec3 = std::array<double, 3>;

// Unit vectors in R^2 or R^3; 2D nodes keep z = 0.
struct NodeSet {
  int dim = 3;
  std::vector<Vec3> nodes;
  std::string label;
};

// Validates rows: renormalizes norms within 1e-6 of one, throws NormError
// beyond that and ParseError on duplicates (separation <= 1e-9 rad).
NodeSet make_node_set(int dim, std::vector<Vec3> rows, std::string label);

NodeSet circle_nodes(int count, double offset_rad);

enum class Platonic { kTetrahedron, kOctahedron, kCube, kIcosahedron, kDodecahedron };

std::optional<Platonic> platonic_from_name(std::string_view name);
std::string_view platonic_name(Platonic p);

NodeSet platonic(Platonic p);

// CSV/whitespace node file, '#' starts a comment. 3D: x,y,z or az,zen in
// degrees. 2D: azimuth in degrees or x,y.
NodeSet load_nodes(const std::filesystem::path& path, int dim);

// Same format from a string (used by load_nodes and tests).
NodeSet parse_nodes(std::string_view text, int dim, std::string label);

inline constexpr std::uint64_t kDefaultSeed = 0x5eed5eedULL;
inline constexpr int kDefaultTrials = 64;

struct TDesignReport {
  int t_claimed = 0;
  double max_abs_error = 0.0;
  std::vector<double> per_degree_errors;  // index n-1 for degree n
  bool passed = true;
};

TDesignReport tdesign_check(const NodeSet& nodes, int t, int trials = kDefaultTrials,
                            std::uint64_t seed = kDefaultSeed);

struct DiscreteMetrics {
  double P = 0.0;
  double E = 0.0;
  double rV = 0.0;
  double rE = 0.0;
  double rV_misaim = 0.0;  // radians between the rV vector and the aim; noise if rV ~ 0
  double rE_misaim = 0.0;
};

// Samples the pattern of w aimed at `aim` on the nodes. FBR is not formed:
// a half-space boundary cuts node sets unevenly.
DiscreteMetrics discrete_metrics(const WeightVector& w, const NodeSet& nodes, const Vec3& aim);

}  // namespace axidir

#endif  // AXIDIR_SAMPLING_HPP_
