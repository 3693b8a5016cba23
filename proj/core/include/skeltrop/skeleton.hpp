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
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "skeltrop/polyhedron.hpp"
#include "skeltrop/rational.hpp"

namespace skeltrop {

/// A cell Delta(r, pi) x R_+^s with its chart in Q^{r+s+1}.
///
/// Chart coordinates are v_0..v_r (one per vertex, in `vertex_ids` order)
/// followed by one coordinate per ray label. The chart is
/// {v >= 0, v_0 + ... + v_r = length}; for r = 0 the length is 0.
class CanonicalCell {
 public:
  CanonicalCell() = default;
  CanonicalCell(std::string id, std::vector<std::string> vertex_ids, std::vector<std::string> ray_labels,
                Rat length, std::string stratum = {}, std::optional<int> stratum_dim = std::nullopt);

  const std::string& id() const { return id_; }
  const std::string& stratum() const { return stratum_; }
  std::optional<int> stratum_dim() const { return stratum_dim_; }
  int r() const { return static_cast<int>(vertex_ids_.size()) - 1; }
  int s() const { return static_cast<int>(ray_labels_.size()); }
  int dim() const { return r() + s(); }
  std::size_t chart_rank() const { return vertex_ids_.size() + ray_labels_.size(); }
  const Rat& length() const { return length_; }
  bool bounded() const { return ray_labels_.empty(); }

  /// Sorted, as required for chart coordinates.
  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  const std::vector<std::string>& ray_labels() const { return ray_labels_; }

  std::optional<std::size_t> vertex_coordinate(const std::string& vertex) const;
  std::optional<std::size_t> ray_coordinate(const std::string& label) const;
  bool has_vertex(const std::string& v) const { return vertex_coordinate(v).has_value(); }
  bool has_ray(const std::string& l) const { return ray_coordinate(l).has_value(); }

  const Polyhedron& chart() const { return chart_; }
  /// The chart vertex belonging to vertex_ids()[j]: length * e_j.
  RatVector chart_vertex(std::size_t j) const;

 private:
  std::string id_;
  std::string stratum_;
  std::optional<int> stratum_dim_;
  std::vector<std::string> vertex_ids_;
  std::vector<std::string> ray_labels_;
  Rat length_;
  Polyhedron chart_;
};

/// child chart coordinate i goes to parent chart coordinate coordinate_map[i].
struct FaceInclusion {
  std::string child;
  std::string parent;
  std::vector<std::size_t> coordinate_map;
};

/// cell id -> (vertex id or ray label) -> alpha number.
using AlphaTable = std::map<std::string, std::map<std::string, long>>;

class WeakTropicalComplex {
 public:
  WeakTropicalComplex() = default;
  /// Checks only referential integrity; call validate() for the invariants.
  WeakTropicalComplex(int dimension, std::vector<CanonicalCell> cells, std::vector<FaceInclusion> inclusions,
                      AlphaTable alpha_vertex = {}, AlphaTable alpha_ray = {});

  int dimension() const { return dimension_; }
  /// Sorted by id.
  const std::vector<CanonicalCell>& cells() const { return cells_; }
  const std::vector<FaceInclusion>& inclusions() const { return inclusions_; }
  const AlphaTable& alpha_vertex() const { return alpha_vertex_; }
  const AlphaTable& alpha_ray() const { return alpha_ray_; }

  bool has_cell(const std::string& id) const { return index_.count(id) != 0; }
  /// Throws kInvalidInput for unknown ids.
  const CanonicalCell& cell(const std::string& id) const;

  /// Sorted, duplicate-free vertex ids and ray labels appearing in cells.
  std::vector<std::string> vertices() const;
  std::vector<std::string> labels() const;

  std::optional<long> alpha(const std::string& cell, const std::string& vertex) const;
  std::optional<long> ray_alpha(const std::string& cell, const std::string& label) const;

  const FaceInclusion* inclusion(const std::string& child, const std::string& parent) const;
  bool is_face(const std::string& child, const std::string& parent) const {
    return inclusion(child, parent) != nullptr;
  }
  /// Cells of dimension `dim` containing `id` as a face.
  std::vector<std::string> cofaces(const std::string& id, int dim) const;
  std::vector<std::string> faces(const std::string& id) const;
  std::vector<std::string> codim_one_cells() const;
  /// Cells that are not a proper face of any other cell.
  std::vector<std::string> maximal_cells() const;

  WeakTropicalComplex with_alpha(AlphaTable alpha_vertex, AlphaTable alpha_ray) const;

 private:
  int dimension_ = 0;
  std::vector<CanonicalCell> cells_;
  std::vector<FaceInclusion> inclusions_;
  AlphaTable alpha_vertex_;
  AlphaTable alpha_ray_;
  std::unordered_map<std::string, std::size_t> index_;
  std::map<std::pair<std::string, std::string>, std::size_t> inclusion_index_;
  std::unordered_map<std::string, std::vector<std::string>> parents_;
  std::unordered_map<std::string, std::vector<std::string>> children_;
};

/// The affine map from the child chart onto a face of the parent chart.
AffineMap induced_map(const WeakTropicalComplex& c, const FaceInclusion& inc);

struct Finding {
  std::string check;
  std::vector<std::string> cells;
  std::string message;
};

struct ValidationReport {
  std::vector<Finding> violations;
  std::vector<Finding> notes;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const WeakTropicalComplex& c);

/// Number of top-dimensional cells extending a codimension-one cell in a
/// bounded (new vertex) or unbounded (new ray) direction. Throws kNotCodimOne.
long deg_b(const WeakTropicalComplex& c, const std::string& t);
long deg_u(const WeakTropicalComplex& c, const std::string& t);

struct Extension {
  bool bounded = true;
  std::string id;  // new vertex id or new ray label
};

/// Throws kNotAFace unless t is a codimension-one face of s.
Extension extension_direction(const WeakTropicalComplex& c, const std::string& t, const std::string& s);

WeakTropicalComplex bounded_subcomplex(const WeakTropicalComplex& c);

struct CellSpec {
  std::string id;
  std::vector<std::string> vertex_ids;
  std::vector<std::string> ray_labels;
  Rat length;
  std::string stratum;
  std::optional<int> stratum_dim;
  /// Explicit codimension-one faces; generated from vertex sets when empty.
  std::vector<std::string> facets;
};

struct SimplicialInput {
  std::optional<int> dimension;
  std::vector<std::string> vertices;
  std::vector<CellSpec> cells;
  AlphaTable alpha_vertex;
  AlphaTable alpha_ray;
};

/// Generates all faces, inclusions and charts. Missing faces are created
/// with ids of the form "[P1,P2|H1]". With `check` set, throws
/// kInvalidInput carrying the first violation reported by validate().
WeakTropicalComplex build_from_simplicial(const SimplicialInput& in, bool check = true);

/// Canonical id used for generated faces.
std::string face_id(const std::vector<std::string>& vertex_ids, const std::vector<std::string>& ray_labels);

}  // namespace skeltrop
