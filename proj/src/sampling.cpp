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

#include "axidir/sampling.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "axidir/errors.hpp"
#include "axidir/kernels.hpp"
#include "axidir/metrics.hpp"
#include "axidir/special.hpp"

namespace axidir {
namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Angle between a and b, accurate for tiny angles.
double angle(const Vec3& a, const Vec3& b) { return std::atan2(norm(cross(a, b)), dot(a, b)); }

std::vector<double> split_numbers(std::string_view line, size_t line_no) {
  std::vector<double> out;
  size_t i = 0;
  auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\r'; };
  while (i < line.size()) {
    while (i < line.size() && is_sep(line[i])) ++i;
    if (i >= line.size()) break;
    size_t j = i;
    while (j < line.size() && !is_sep(line[j])) ++j;
    std::string_view tok = line.substr(i, j - i);
    if (!tok.empty() && tok[0] == '+') tok.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
      throw ParseError("line " + std::to_string(line_no) + ": bad number '" +
                       std::string(line.substr(i, j - i)) + "'");
    }
    out.push_back(v);
    i = j;
  }
  return out;
}

}  // namespace

NodeSet make_node_set(int dim, std::vector<Vec3> rows, std::string label) {
  if (dim != 2 && dim != 3) throw DomainError("node sets live in 2 or 3 dimensions");
  if (rows.empty()) throw ParseError("node set is empty");
  for (size_t i = 0; i < rows.size(); ++i) {
    Vec3& r = rows[i];
    if (dim == 2 && r[2] != 0.0) throw ParseError("2D node with nonzero z");
    const double len = norm(r);
    if (!(std::fabs(len - 1.0) < 1e-6)) {
      throw NormError("node " + std::to_string(i + 1) + " has norm " + std::to_string(len));
    }
    for (double& c : r) c /= len;
  }
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = i + 1; j < rows.size(); ++j) {
      if (angle(rows[i], rows[j]) <= 1e-9) {
        throw ParseError("nodes " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                         " coincide");
      }
    }
  }
  return NodeSet{dim, std::move(rows), std::move(label)};
}

NodeSet circle_nodes(int count, double offset_rad) {
  if (count < 1) throw DomainError("circle needs at least one node");
  std::vector<Vec3> rows;
  rows.reserve(count);
  for (int l = 0; l < count; ++l) {
    const double phi = offset_rad + 2.0 * std::numbers::pi * l / count;
    rows.push_back({std::cos(phi), std::sin(phi), 0.0});
  }
  return make_node_set(2, std::move(rows), "circle" + std::to_string(count));
}

std::optional<Platonic> platonic_from_name(std::string_view name) {
  for (Platonic p : {Platonic::kTetrahedron, Platonic::kOctahedron, Platonic::kCube,
                     Platonic::kIcosahedron, Platonic::kDodecahedron}) {
    if (platonic_name(p) == name) return p;
  }
  return std::nullopt;
}

std::string_view platonic_name(Platonic p) {
  switch (p) {
    case Platonic::kTetrahedron:
      return "tetrahedron";
    case Platonic::kOctahedron:
      return "octahedron";
    case Platonic::kCube:
      return "cube";
    case Platonic::kIcosahedron:
      return "icosahedron";
    case Platonic::kDodecahedron:
      return "dodecahedron";
  }
  return "";
}

NodeSet platonic(Platonic p) {
  const double phi = std::numbers::phi;
  std::vector<Vec3> v;
  const double pm[] = {1.0, -1.0};
  switch (p) {
    case Platonic::kTetrahedron:
      v = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
      break;
    case Platonic::kOctahedron:
      v = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
      break;
    case Platonic::kCube:
      for (double a : pm)
        for (double b : pm)
          for (double c : pm) v.push_back({a, b, c});
      break;
    case Platonic::kIcosahedron:
      for (double a : pm) {
        for (double b : pm) {
          v.push_back({0, a, b * phi});
          v.push_back({a, b * phi, 0});
          v.push_back({a * phi, 0, b});
        }
      }
      break;
    case Platonic::kDodecahedron:
      for (double a : pm)
        for (double b : pm)
          for (double c : pm) v.push_back({a, b, c});
      for (double a : pm) {
        for (double b : pm) {
          v.push_back({0, a / phi, b * phi});
          v.push_back({a / phi, b * phi, 0});
          v.push_back({a * phi, 0, b / phi});
        }
      }
      break;
  }
  for (Vec3& r : v) {
    const double len = norm(r);
    for (double& c : r) c /= len;
  }
  return make_node_set(3, std::move(v), std::string(platonic_name(p)));
}

NodeSet parse_nodes(std::string_view text, int dim, std::string label) {
  if (dim != 2 && dim != 3) throw DomainError("node files describe 2D or 3D sets");
  std::vector<Vec3> rows;
  size_t columns = 0;
  size_t line_no = 0;
  while (!text.empty()) {
    const size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (const size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const std::vector<double> v = split_numbers(line, line_no);
    if (v.empty()) continue;
    if (columns == 0) columns = v.size();
    if (v.size() != columns) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(columns) + " columns, got " + std::to_string(v.size()));
    }
    if (dim == 3 && columns == 3) {
      rows.push_back({v[0], v[1], v[2]});
    } else if (dim == 3 && columns == 2) {
      const double az = v[0] * kDeg, zen = v[1] * kDeg;
      rows.push_back({std::sin(zen) * std::cos(az), std::sin(zen) * std::sin(az), std::cos(zen)});
    } else if (dim == 2 && columns == 2) {
      rows.push_back({v[0], v[1], 0.0});
    } else if (dim == 2 && columns == 1) {
      rows.push_back({std::cos(v[0] * kDeg), std::sin(v[0] * kDeg), 0.0});
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": " + std::to_string(columns) +
                       " columns invalid for a " + std::to_string(dim) + "D node file");
    }
  }
  return make_node_set(dim, std::move(rows), std::move(label));
}

NodeSet load_nodes(const std::filesystem::path& path, int dim) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_nodes(ss.str(), dim, path.filename().string());
}

TDesignReport tdesign_check(const NodeSet& nodes, int t, int trials, std::uint64_t seed) {
  if (t < 0) throw DomainError("t must be >= 0");
  if (trials < 1) throw DomainError("trials must be >= 1");
  TDesignReport rep;
  rep.t_claimed = t;
  rep.per_degree_errors.assign(static_cast<size_t>(t), 0.0);
  if (t == 0) return rep;

  const Dimension dim(nodes.dim);
  const RecurrenceTable rec = recurrence_table(t, dim);
  const double scale = surface_area(dim) / static_cast<double>(nodes.nodes.size());

  // Orientations are drawn up front so the report does not depend on
  // evaluation order.
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<Vec3> dirs(trials);
  for (Vec3& d : dirs) {
    double len = 0.0;
    do {
      d = {normal(rng), normal(rng), nodes.dim == 3 ? normal(rng) : 0.0};
      len = norm(d);
    } while (len < 1e-12);
    for (double& c : d) c /= len;
  }

  std::vector<double> x(nodes.nodes.size());
  std::vector<double> sums(static_cast<size_t>(t) + 1);
  for (const Vec3& d : dirs) {
    for (size_t l = 0; l < x.size(); ++l) x[l] = dot(d, nodes.nodes[l]);
    kernels::degree_sums(rec, x, sums);
    for (int n = 1; n <= t; ++n) {
      const double err = std::fabs(scale * sums[n]);
      rep.per_degree_errors[n - 1] = std::fmax(rep.per_degree_errors[n - 1], err);
    }
  }
  for (double e : rep.per_degree_errors) rep.max_abs_error = std::fmax(rep.max_abs_error, e);
  rep.passed = rep.max_abs_error < 1e-9;
  return rep;
}

DiscreteMetrics discrete_metrics(const WeightVector& w, const NodeSet& nodes, const Vec3& aim) {
  if (w.dim.d() != static_cast<double>(nodes.dim)) {
    throw DomainError("weight dimension does not match the node set");
  }
  const double aim_len = norm(aim);
  if (!(std::fabs(aim_len - 1.0) < 1e-9)) throw DomainError("aim must be a unit vector");
  const size_t count = nodes.nodes.size();
  std::vector<double> x(count), g(count);
  for (size_t l = 0; l < count; ++l) {
    x[l] = std::fmax(-1.0, std::fmin(1.0, dot(aim, nodes.nodes[l])));
  }
  eval_pattern(w, x, g);
  double sg = 0.0, sg2 = 0.0;
  Vec3 v{0, 0, 0}, e{0, 0, 0};
  for (size_t l = 0; l < count; ++l) {
    sg += g[l];
    sg2 += g[l] * g[l];
    for (int k = 0; k < 3; ++k) {
      v[k] += g[l] * nodes.nodes[l][k];
      e[k] += g[l] * g[l] * nodes.nodes[l][k];
    }
  }
  for (int k = 0; k < 3; ++k) {
    v[k] /= sg;
    e[k] /= sg2;
  }
  const double scale = surface_area(w.dim) / static_cast<double>(count);
  DiscreteMetrics m;
  m.P = scale * sg;
  m.E = scale * sg2;
  m.rV = norm(v);
  m.rE = norm(e);
  m.rV_misaim = angle(v, aim);
  m.rE_misaim = angle(e, aim);
  return m;
}

}  // namespace axidir
