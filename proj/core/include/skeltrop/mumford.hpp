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

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skeltrop/pl_function.hpp"
#include "skeltrop/rational.hpp"
#include "skeltrop/skeleton.hpp"

namespace skeltrop {

/// Integer point in units of 1/m.
struct GridPoint {
  long x = 0;
  long y = 0;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

/// A Z^2-periodic triangulation of R^2 with vertices on the grid (1/m)Z^2,
/// viewed on the torus R^2/Z^2.
///
/// Vertices are named <prefix><j> with j = 1 + x + (m+1) y for the
/// representative (x, y) in [0, m)^2. Edges and triangles are named by the
/// grid indices of a representative whose midpoint (centroid) lies in the
/// fundamental square, e.g. "e15" or "t125".
class TorusTriangulation {
 public:
  struct Edge {
    std::string name;
    GridPoint a, b;  // representative endpoints
    std::string va, vb;
  };
  struct Triangle {
    std::string name;
    std::array<GridPoint, 3> corners;
    std::array<std::string, 3> vertex_ids;
    std::array<std::string, 3> edges;
  };

  TorusTriangulation(long m, char prefix, std::vector<std::array<GridPoint, 3>> triangles);

  long m() const { return m_; }
  char prefix() const { return prefix_; }
  /// Length of every edge: v(q)/m with v(q) = 1.
  Rat v_pi() const { return Rat(Integer(1), Integer(m_)); }

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }

  std::string vertex_name(GridPoint p) const;
  GridPoint vertex_position(const std::string& name) const;
  std::size_t vertex_index(const std::string& name) const;
  const Edge& edge(const std::string& name) const;
  /// Name of the edge through the lattice segment [a, b], if it is an edge.
  std::optional<std::string> edge_through(GridPoint a, GridPoint b) const;
  /// Representative point of a vertex in [0,1)^2.
  std::array<Rat, 2> vertex_coordinates(const std::string& name) const;

  /// No two edges or triangles share their vertex sets, no simplex repeats a
  /// vertex, and the circle triangulations have at least three vertices.
  bool vertex_determined() const;

  /// Fundamental-domain copy of the triangles, used by refine().
  const std::vector<std::array<GridPoint, 3>>& pattern() const { return pattern_; }

  friend bool operator==(const TorusTriangulation& a, const TorusTriangulation& b) {
    return a.m_ == b.m_ && a.prefix_ == b.prefix_ && a.pattern_ == b.pattern_;
  }

 private:
  std::string grid_name(char kind, std::vector<GridPoint> pts) const;
  GridPoint reduce(GridPoint p) const;

  long m_;
  char prefix_;
  std::vector<std::array<GridPoint, 3>> pattern_;
  std::vector<std::string> vertices_;
  std::map<std::string, std::size_t> vertex_index_;
  std::vector<Edge> edges_;
  std::map<std::string, std::size_t> edge_index_;
  std::vector<Triangle> triangles_;
};

/// The unit square cut into four squares, each split along the diagonal
/// through the center: 4 vertices, 12 edges, 8 triangles on the torus.
TorusTriangulation build_C();
/// Pull back along multiplication by k: k x k copies of the pattern.
/// refine(T, 1) returns T unchanged; otherwise vertices are renamed Q<j>.
TorusTriangulation refine(const TorusTriangulation& t, long k);

/// Formal integer combination of vertex divisors D_u.
using DivisorExpr = std::map<std::string, long>;

/// Triple intersection numbers of vertex divisors on the product model,
/// reduced to transversal ones by Kolb's relations. The table is built
/// eagerly; all queries are lookups.
class KolbEngine {
 public:
  /// Throws kNotVertexDetermined.
  explicit KolbEngine(const TorusTriangulation& t);

  const TorusTriangulation& triangulation() const { return t_; }
  Rat triple(const std::string& a, const std::string& b, const std::string& c) const;
  /// expr . closure of the curve attached to the edge {a, b}. Throws kNotAnEdge.
  Rat dot_edge(const DivisorExpr& expr, const std::string& a, const std::string& b) const;

 private:
  Rat& at(std::size_t a, std::size_t b, std::size_t c);
  const Rat& at(std::size_t a, std::size_t b, std::size_t c) const;

  TorusTriangulation t_;
  std::size_t n_ = 0;
  std::vector<Rat> table_;
};

Rat triple_number(const TorusTriangulation& t, const std::string& a, const std::string& b, const std::string& c);
Rat divisor_dot_edge_curve(const TorusTriangulation& t, const DivisorExpr& expr, const std::string& a,
                           const std::string& b);

/// alpha(u, e) = -sum over lifts u' of u of D'_{u'} . T'_{e'}, evaluated for
/// every lift e' of the coarse edge; throws kLiftInconsistency if they differ.
long alpha_via_covering(const TorusTriangulation& coarse, const TorusTriangulation& fine, const std::string& edge,
                        const std::string& vertex);
long alpha_via_covering(const TorusTriangulation& coarse, const KolbEngine& fine, const std::string& edge,
                        const std::string& vertex);
/// alpha numbers for both endpoints of every coarse edge.
AlphaTable alpha_table(const TorusTriangulation& coarse, const TorusTriangulation& fine);

/// -log|x| of the Weierstrass x-function at the skeleton point with
/// -log|zeta| = t. Throws kOutOfRange outside [0, 1).
Rat tate_val_x(const Rat& t);

/// Bounded complex of a vertex-determined or explicitly faceted torus
/// triangulation: vertices, edges and triangles with length v(pi).
WeakTropicalComplex torus_complex(const TorusTriangulation& t, const AlphaTable& alpha = {});

/// Vertex values min(tate(x), tate(y)) of F = -log|x1 - x2|.
std::map<std::string, Rat> e2_vertex_values(const TorusTriangulation& t);

struct E2Pair {
  WeakTropicalComplex complex;
  PLFunction function;
};

/// The E x E pair: bounded complex with engine alpha numbers, half-stripes
/// over the diagonal, horizontal and vertical edges, and the quadrant cells.
/// Only coarse = build_C(), fine = refine(coarse, 2) is supported.
E2Pair build_e2_pair(const TorusTriangulation& coarse, const TorusTriangulation& fine);

/// The alternative retraction divisor with coefficient -1 (instead of -2) on
/// e12, e23, e14, e47; kept to demonstrate that it does not balance.
CodimOneDivisor e2_printed_tau();

/// Report note on the multiplicity -2 adopted for H3 and H4.
extern const char* const kE2ProvenanceNote;

}  // namespace skeltrop
