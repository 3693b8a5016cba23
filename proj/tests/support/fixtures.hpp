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

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "skeltrop/pl_function.hpp"
#include "skeltrop/skeleton.hpp"
#include "skeltrop/trop_map.hpp"

namespace skeltrop::testing {

/// Connected simple graph with one ray per vertex, ray label "H<vertex>".
/// Every edge has length base_length / n for some n in {1, 2, 3}.
struct MetricGraph {
  WeakTropicalComplex complex;
  Rat base_length;
  std::vector<std::string> vertices;
  std::vector<std::string> edges;
};

MetricGraph random_metric_graph(std::mt19937_64& rng, bool with_rays = true);

/// Values in base_length * Z, ray slopes chosen so the outgoing slopes at
/// every vertex sum to zero.
PLFunction random_graph_function(std::mt19937_64& rng, const MetricGraph& g);

/// Naive outgoing slope (F(w) - F(x)) / length along an edge.
Rat naive_outgoing_slope(const MetricGraph& g, const PLFunction& f, const std::string& vertex,
                         const std::string& edge);

/// d = 1 complex from a list of edges {a, b}, all of the given length.
WeakTropicalComplex graph_complex(const std::vector<std::string>& vertices,
                                  const std::vector<std::pair<std::string, std::string>>& edges, const Rat& length);

/// Integral affine map of an edge chart sending its vertices to pos[...].
AffineMap edge_map(const CanonicalCell& edge, const std::map<std::string, RatVector>& pos);

/// Map sending every edge of c affinely between the given vertex positions.
CellwiseTropMap vertex_position_map(const WeakTropicalComplex& c, std::size_t target_rank,
                                    const std::map<std::string, RatVector>& pos);

/// A subdivided segment v00 - v01 - ... mapped to R with nonzero integer slopes.
struct FoldedSegment {
  WeakTropicalComplex complex;
  CellwiseTropMap map;
  std::vector<Rat> images;  // image of v_i
  std::vector<long> slopes;
};

FoldedSegment random_folded_segment(std::mt19937_64& rng);

/// Sum of |slope| over the segments whose open image contains omega.
Integer brute_force_st(const FoldedSegment& s, const Rat& omega);

/// Convex hull of 1 to 4 random points with half-integral coordinates.
Polyhedron random_polytope(std::mt19937_64& rng, std::size_t n);
/// Integral affine map Z^n -> Z^m; about a third carry a unimodular block.
AffineMap random_map(std::mt19937_64& rng, std::size_t n, std::size_t m);

// Small instances for the certificates.
WeakTropicalComplex triangle_graph();
CellwiseTropMap triangle_embedding(const WeakTropicalComplex& c);
WeakTropicalComplex path_graph(std::size_t edges, const Rat& length = Rat(1));
/// Two-edge path folded onto [0, 1].
CellwiseTropMap fold_map(const WeakTropicalComplex& path2);
/// Single edge of length 1 sent to [0, 2].
CellwiseTropMap doubling_map(const WeakTropicalComplex& path1);

}  // namespace skeltrop::testing
