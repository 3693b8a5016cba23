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

#include "fixtures.hpp"

#include <algorithm>
#include <set>

#include "random.hpp"

namespace skeltrop::testing {
namespace {

std::string vname(std::size_t i) { return "x" + std::to_string(i); }

std::string pad(const char* prefix, std::size_t i) {
  return std::string(prefix) + (i < 10 ? "0" : "") + std::to_string(i);
}

}  // namespace

WeakTropicalComplex graph_complex(const std::vector<std::string>& vertices,
                                  const std::vector<std::pair<std::string, std::string>>& edges, const Rat& length) {
  SimplicialInput in;
  in.dimension = 1;
  in.vertices = vertices;
  std::map<std::string, long> degree;
  for (const auto& v : vertices) in.cells.push_back({v, {v}, {}, Rat(0), "", std::nullopt, {}});
  for (const auto& [a, b] : edges) {
    in.cells.push_back({a + b, {a, b}, {}, length, "", std::nullopt, {a, b}});
    ++degree[a];
    ++degree[b];
  }
  for (const auto& [v, d] : degree) in.alpha_vertex[v][v] = d;
  return build_from_simplicial(in);
}

MetricGraph random_metric_graph(std::mt19937_64& rng, bool with_rays) {
  static const Rat kBase[] = {Rat(1), Rat(1, 2), Rat(2, 3), Rat(3), Rat(5, 4)};
  MetricGraph g;
  g.base_length = kBase[uniform(rng, 0, 4)];
  const std::size_t n = static_cast<std::size_t>(uniform(rng, 2, 6));
  for (std::size_t i = 0; i < n; ++i) g.vertices.push_back(vname(i));

  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i < n; ++i) pairs.insert({static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(i) - 1)), i});
  const long extra = uniform(rng, 0, static_cast<long>(n));
  for (long k = 0; k < extra; ++k) {
    auto a = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    auto b = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    if (a == b) continue;
    pairs.insert({std::min(a, b), std::max(a, b)});
  }

  SimplicialInput in;
  in.dimension = 1;
  in.vertices = g.vertices;
  std::map<std::string, long> degree;
  for (const auto& v : g.vertices) in.cells.push_back({v, {v}, {}, Rat(0), "", std::nullopt, {}});
  for (const auto& [i, j] : pairs) {
    const std::string a = vname(i), b = vname(j), id = a + b;
    const Rat len = g.base_length / Rat(uniform(rng, 1, 3));
    in.cells.push_back({id, {a, b}, {}, len, "", std::nullopt, {a, b}});
    g.edges.push_back(id);
    ++degree[a];
    ++degree[b];
  }
  if (with_rays)
    for (const auto& v : g.vertices) in.cells.push_back({"r" + v, {v}, {"H" + v}, Rat(0), "", std::nullopt, {v}});
  for (const auto& [v, d] : degree) in.alpha_vertex[v][v] = d;
  g.complex = build_from_simplicial(in);
  return g;
}

Rat naive_outgoing_slope(const MetricGraph& g, const PLFunction& f, const std::string& vertex,
                         const std::string& edge) {
  const auto& e = g.complex.cell(edge);
  const std::string& other = e.vertex_ids()[0] == vertex ? e.vertex_ids()[1] : e.vertex_ids()[0];
  return (*f.value(other) - *f.value(vertex)) / e.length();
}

PLFunction random_graph_function(std::mt19937_64& rng, const MetricGraph& g) {
  PLFunction f;
  for (const auto& v : g.vertices) f.vertex_values[v] = g.base_length * Rat(uniform(rng, -3, 3));
  for (const auto& v : g.vertices) {
    if (!g.complex.has_cell("r" + v)) continue;
    Rat out(0);
    for (const auto& e : g.edges)
      if (g.complex.cell(e).has_vertex(v)) out += naive_outgoing_slope(g, f, v, e);
    f.ray_slopes["H" + v] = -out.num().get_si();
  }
  return f;
}

AffineMap edge_map(const CanonicalCell& edge, const std::map<std::string, RatVector>& pos) {
  const RatVector& p0 = pos.at(edge.vertex_ids()[0]);
  const RatVector& p1 = pos.at(edge.vertex_ids()[1]);
  IntMatrix lin(p0.size(), 2);
  for (std::size_t i = 0; i < p0.size(); ++i) {
    const Rat d = (p1[i] - p0[i]) / edge.length();
    lin(i, 1) = d.num();  // callers pass integral directions
  }
  return AffineMap(lin, p0);
}

CellwiseTropMap vertex_position_map(const WeakTropicalComplex& c, std::size_t target_rank,
                                    const std::map<std::string, RatVector>& pos) {
  CellwiseTropMap phi;
  phi.target_rank = target_rank;
  for (const auto& id : c.maximal_cells()) phi.set(c, id, edge_map(c.cell(id), pos));
  return phi;
}

FoldedSegment random_folded_segment(std::mt19937_64& rng) {
  static const Rat kLengths[] = {Rat(1, 2), Rat(1), Rat(3, 2), Rat(2), Rat(1, 3)};
  FoldedSegment s;
  const std::size_t k = static_cast<std::size_t>(uniform(rng, 1, 6));
  SimplicialInput in;
  in.dimension = 1;
  for (std::size_t i = 0; i <= k; ++i) {
    in.vertices.push_back(pad("v", i));
    in.cells.push_back({pad("v", i), {pad("v", i)}, {}, Rat(0), "", std::nullopt, {}});
  }
  s.images.push_back(Rat(uniform(rng, -4, 4), 2));
  std::map<std::string, RatVector> pos{{pad("v", 0), {s.images.back()}}};
  std::map<std::string, long> degree;
  for (std::size_t i = 0; i < k; ++i) {
    const Rat len = kLengths[uniform(rng, 0, 4)];
    long slope = 0;
    while (slope == 0) slope = uniform(rng, -3, 3);
    s.slopes.push_back(slope);
    s.images.push_back(s.images.back() + Rat(slope) * len);
    pos[pad("v", i + 1)] = {s.images.back()};
    in.cells.push_back({pad("s", i), {pad("v", i), pad("v", i + 1)}, {}, len, "", std::nullopt,
                        {pad("v", i), pad("v", i + 1)}});
    ++degree[pad("v", i)];
    ++degree[pad("v", i + 1)];
  }
  for (const auto& [v, d] : degree) in.alpha_vertex[v][v] = d;
  s.complex = build_from_simplicial(in);
  s.map = vertex_position_map(s.complex, 1, pos);
  return s;
}

Integer brute_force_st(const FoldedSegment& s, const Rat& omega) {
  Integer sum = 0;
  for (std::size_t i = 0; i < s.slopes.size(); ++i) {
    const Rat lo = std::min(s.images[i], s.images[i + 1]);
    const Rat hi = std::max(s.images[i], s.images[i + 1]);
    if (lo < omega && omega < hi) sum += std::labs(s.slopes[i]);
  }
  return sum;
}

// Random polytope spanned by a few points; may be lower dimensional.
Polyhedron random_polytope(std::mt19937_64& rng, std::size_t n) {
  std::vector<RatVector> pts;
  const long k = uniform(rng, 1, 4);
  for (long i = 0; i < k; ++i) {
    RatVector p(n);
    for (auto& x : p) x = Rat(uniform(rng, -3, 3), uniform(rng, 1, 2));
    pts.push_back(p);
  }
  return Polyhedron::from_generators(n, pts);
}

AffineMap random_map(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  IntMatrix lin = random_matrix(rng, m, n, -4, 4);
  if (uniform(rng, 0, 2) == 0 && m >= n) {
    // Unimodular block in the first n rows so that positive cases are common.
    const IntMatrix u = random_unimodular(rng, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) lin(i, j) = u(i, j);
  }
  RatVector t(m);
  for (auto& x : t) x = Rat(uniform(rng, -3, 3), uniform(rng, 1, 3));
  return AffineMap(lin, t);
}

WeakTropicalComplex triangle_graph() { return graph_complex({"A", "B", "C"}, {{"A", "B"}, {"A", "C"}, {"B", "C"}}, Rat(1)); }

CellwiseTropMap triangle_embedding(const WeakTropicalComplex& c) {
  return vertex_position_map(c, 2, {{"A", {Rat(0), Rat(0)}}, {"B", {Rat(1), Rat(0)}}, {"C", {Rat(0), Rat(1)}}});
}

WeakTropicalComplex path_graph(std::size_t edges, const Rat& length) {
  std::vector<std::string> vs;
  std::vector<std::pair<std::string, std::string>> es;
  for (std::size_t i = 0; i <= edges; ++i) vs.push_back(pad("p", i));
  for (std::size_t i = 0; i < edges; ++i) es.emplace_back(vs[i], vs[i + 1]);
  return graph_complex(vs, es, length);
}

CellwiseTropMap fold_map(const WeakTropicalComplex& path2) {
  return vertex_position_map(path2, 1, {{"p00", {Rat(0)}}, {"p01", {Rat(1)}}, {"p02", {Rat(0)}}});
}

CellwiseTropMap doubling_map(const WeakTropicalComplex& path1) {
  return vertex_position_map(path1, 1, {{"p00", {Rat(0)}}, {"p01", {Rat(2)}}});
}

}  // namespace skeltrop::testing
