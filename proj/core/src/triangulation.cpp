// Copyright 2026 The skeltrop Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <set>

#include "skeltrop/mumford.hpp"

namespace skeltrop {
namespace {

std::vector<GridPoint> translate_into_square(std::vector<GridPoint> pts, long m) {
  long sx = 0, sy = 0;
  for (const auto& p : pts) {
    sx += p.x;
    sy += p.y;
  }
  const long c = static_cast<long>(pts.size()) * m;
  auto fl = [](long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
  const long lx = fl(sx, c), ly = fl(sy, c);
  for (auto& p : pts) {
    p.x -= m * lx;
    p.y -= m * ly;
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

}  // namespace

TorusTriangulation::TorusTriangulation(long m, char prefix, std::vector<std::array<GridPoint, 3>> triangles)
    : m_(m), prefix_(prefix) {
  if (m_ < 1) throw Error(ErrorCode::kInvalidInput, "grid denominator must be positive");
  std::set<std::array<GridPoint, 3>> seen;
  for (const auto& t : triangles) {
    auto pts = translate_into_square({t[0], t[1], t[2]}, m_);
    std::array<GridPoint, 3> c{pts[0], pts[1], pts[2]};
    if (!seen.insert(c).second) throw Error(ErrorCode::kInvalidInput, "repeated triangle");
    pattern_.push_back(c);
  }
  std::sort(pattern_.begin(), pattern_.end());

  std::set<std::pair<long, long>> grid;  // (y, x) so that names come out in index order
  for (const auto& t : pattern_)
    for (const auto& p : t) {
      GridPoint r = reduce(p);
      grid.insert({r.y, r.x});
    }
  for (const auto& [y, x] : grid) {
    vertex_index_[vertex_name({x, y})] = vertices_.size();
    vertices_.push_back(vertex_name({x, y}));
  }

  for (const auto& c : pattern_) {
    Triangle tri;
    tri.name = grid_name('t', {c[0], c[1], c[2]});
    tri.corners = c;
    for (int i = 0; i < 3; ++i) tri.vertex_ids[i] = vertex_name(c[i]);
    const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (int e = 0; e < 3; ++e) {
      auto pts = translate_into_square({c[pairs[e][0]], c[pairs[e][1]]}, m_);
      const std::string name = grid_name('e', pts);
      tri.edges[e] = name;
      if (!edge_index_.count(name)) {
        edge_index_[name] = edges_.size();
        edges_.push_back({name, pts[0], pts[1], vertex_name(pts[0]), vertex_name(pts[1])});
      }
    }
    triangles_.push_back(std::move(tri));
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.name < b.name; });
  for (std::size_t i = 0; i < edges_.size(); ++i) edge_index_[edges_[i].name] = i;
  std::sort(triangles_.begin(), triangles_.end(),
            [](const Triangle& a, const Triangle& b) { return a.name < b.name; });
}

GridPoint TorusTriangulation::reduce(GridPoint p) const {
  auto md = [this](long a) { return ((a % m_) + m_) % m_; };
  return {md(p.x), md(p.y)};
}

std::string TorusTriangulation::vertex_name(GridPoint p) const {
  const GridPoint r = reduce(p);
  return std::string(1, prefix_) + std::to_string(1 + r.x + (m_ + 1) * r.y);
}

std::string TorusTriangulation::grid_name(char kind, std::vector<GridPoint> pts) const {
  pts = translate_into_square(std::move(pts), m_);
  std::vector<long> idx;
  for (const auto& p : pts) idx.push_back(1 + p.x + (m_ + 1) * p.y);
  std::sort(idx.begin(), idx.end());
  const bool short_form = std::all_of(idx.begin(), idx.end(), [](long j) { return j < 10; });
  std::string out(1, kind);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (!short_form && i) out += '.';
    out += std::to_string(idx[i]);
  }
  return out;
}

GridPoint TorusTriangulation::vertex_position(const std::string& name) const {
  vertex_index(name);
  const long j = std::stol(name.substr(1)) - 1;
  return {j % (m_ + 1), j / (m_ + 1)};
}

std::size_t TorusTriangulation::vertex_index(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) throw Error(ErrorCode::kInvalidInput, "unknown vertex " + name);
  return it->second;
}

const TorusTriangulation::Edge& TorusTriangulation::edge(const std::string& name) const {
  auto it = edge_index_.find(name);
  if (it == edge_index_.end()) throw Error(ErrorCode::kNotAnEdge, "unknown edge " + name);
  return edges_[it->second];
}

std::optional<std::string> TorusTriangulation::edge_through(GridPoint a, GridPoint b) const {
  const std::string name = grid_name('e', {a, b});
  if (!edge_index_.count(name)) return std::nullopt;
  return name;
}

std::array<Rat, 2> TorusTriangulation::vertex_coordinates(const std::string& name) const {
  const GridPoint p = vertex_position(name);
  return {Rat(Integer(p.x), Integer(m_)), Rat(Integer(p.y), Integer(m_))};
}

bool TorusTriangulation::vertex_determined() const {
  if (m_ < 3) return false;
  std::set<std::set<std::string>> edge_sets, tri_sets;
  for (const auto& e : edges_) {
    if (e.va == e.vb) return false;
    if (!edge_sets.insert({e.va, e.vb}).second) return false;
  }
  for (const auto& t : triangles_) {
    std::set<std::string> s(t.vertex_ids.begin(), t.vertex_ids.end());
    if (s.size() != 3 || !tri_sets.insert(s).second) return false;
  }
  return true;
}

TorusTriangulation build_C() {
  // P1..P9 on the 3x3 grid; diagonals run through the center P5.
  auto g = [](long j) { return GridPoint{(j - 1) % 3, (j - 1) / 3}; };
  const long tris[8][3] = {{1, 2, 5}, {1, 4, 5}, {2, 3, 5}, {3, 5, 6},
                           {4, 5, 7}, {5, 7, 8}, {5, 6, 9}, {5, 8, 9}};
  std::vector<std::array<GridPoint, 3>> out;
  for (const auto& t : tris) out.push_back({g(t[0]), g(t[1]), g(t[2])});
  return TorusTriangulation(2, 'P', std::move(out));
}

TorusTriangulation refine(const TorusTriangulation& t, long k) {
  if (k < 1) throw Error(ErrorCode::kInvalidInput, "refinement factor must be positive");
  if (k == 1) return t;
  const long m = t.m();
  std::vector<std::array<GridPoint, 3>> out;
  for (long bx = 0; bx < k; ++bx)
    for (long by = 0; by < k; ++by)
      for (const auto& tri : t.pattern()) {
        std::array<GridPoint, 3> c = tri;
        for (auto& p : c) {
          p.x += m * bx;
          p.y += m * by;
        }
        out.push_back(c);
      }
  return TorusTriangulation(k * m, 'Q', std::move(out));
}

Rat tate_val_x(const Rat& t) {
  if (t < Rat(0) || t >= Rat(1)) throw Error(ErrorCode::kOutOfRange, "parameter " + t.str() + " outside [0,1)");
  if (t.is_zero()) return Rat(0);
  return std::min(t, Rat(1) - t);
}

WeakTropicalComplex torus_complex(const TorusTriangulation& t, const AlphaTable& alpha) {
  SimplicialInput in;
  in.dimension = 2;
  in.vertices = t.vertices();
  in.alpha_vertex = alpha;
  for (const auto& v : t.vertices()) in.cells.push_back({v, {v}, {}, Rat(0), "stratum(" + v + ")", 2, {}});
  for (const auto& e : t.edges()) {
    if (e.va == e.vb) throw Error(ErrorCode::kInvalidInput, "edge " + e.name + " is a loop on the torus");
    in.cells.push_back({e.name, {e.va, e.vb}, {}, t.v_pi(), "stratum(" + e.name + ")", 1, {e.va, e.vb}});
  }
  for (const auto& tri : t.triangles())
    in.cells.push_back({tri.name,
                        {tri.vertex_ids.begin(), tri.vertex_ids.end()},
                        {},
                        t.v_pi(),
                        "stratum(" + tri.name + ")",
                        0,
                        {tri.edges.begin(), tri.edges.end()}});
  return build_from_simplicial(in, false);
}

std::map<std::string, Rat> e2_vertex_values(const TorusTriangulation& t) {
  std::map<std::string, Rat> out;
  for (const auto& v : t.vertices()) {
    const auto xy = t.vertex_coordinates(v);
    out[v] = std::min(tate_val_x(xy[0]), tate_val_x(xy[1]));
  }
  return out;
}

}  // namespace skeltrop
