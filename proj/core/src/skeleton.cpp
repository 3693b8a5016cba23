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

#include "skeltrop/skeleton.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace skeltrop {
namespace {

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i];
  return out;
}

bool has_duplicates(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) != v.end();
}

Polyhedron make_chart(std::size_t nv, std::size_t ns, const Rat& length) {
  const std::size_t n = nv + ns;
  std::vector<Constraint> ineqs;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector u(n, Integer(0));
    u[i] = 1;
    ineqs.push_back({u, Rat(0)});
  }
  IntVector sum(n, Integer(0));
  for (std::size_t i = 0; i < nv; ++i) sum[i] = 1;
  return Polyhedron(n, std::move(ineqs), {Constraint{sum, -length}});
}

}  // namespace

CanonicalCell::CanonicalCell(std::string id, std::vector<std::string> vertex_ids,
                             std::vector<std::string> ray_labels, Rat length, std::string stratum,
                             std::optional<int> stratum_dim)
    : id_(std::move(id)),
      stratum_(std::move(stratum)),
      stratum_dim_(stratum_dim),
      vertex_ids_(std::move(vertex_ids)),
      ray_labels_(std::move(ray_labels)),
      length_(std::move(length)) {
  if (id_.empty()) throw Error(ErrorCode::kInvalidInput, "cell without id");
  if (vertex_ids_.empty()) throw Error(ErrorCode::kInvalidInput, "cell " + id_ + " has no vertex");
  if (has_duplicates(vertex_ids_) || has_duplicates(ray_labels_))
    throw Error(ErrorCode::kInvalidInput, "cell " + id_ + " repeats a vertex id or ray label");
  std::sort(vertex_ids_.begin(), vertex_ids_.end());
  std::sort(ray_labels_.begin(), ray_labels_.end());
  if (r() == 0) {
    length_ = Rat(0);
  } else if (length_.sign() <= 0) {
    throw Error(ErrorCode::kInvalidInput, "cell " + id_ + " needs a positive length");
  }
  chart_ = make_chart(vertex_ids_.size(), ray_labels_.size(), length_);
}

std::optional<std::size_t> CanonicalCell::vertex_coordinate(const std::string& vertex) const {
  auto it = std::lower_bound(vertex_ids_.begin(), vertex_ids_.end(), vertex);
  if (it == vertex_ids_.end() || *it != vertex) return std::nullopt;
  return static_cast<std::size_t>(it - vertex_ids_.begin());
}

std::optional<std::size_t> CanonicalCell::ray_coordinate(const std::string& label) const {
  auto it = std::lower_bound(ray_labels_.begin(), ray_labels_.end(), label);
  if (it == ray_labels_.end() || *it != label) return std::nullopt;
  return vertex_ids_.size() + static_cast<std::size_t>(it - ray_labels_.begin());
}

RatVector CanonicalCell::chart_vertex(std::size_t j) const {
  RatVector v(chart_rank(), Rat(0));
  v.at(j) = length_;
  return v;
}

WeakTropicalComplex::WeakTropicalComplex(int dimension, std::vector<CanonicalCell> cells,
                                         std::vector<FaceInclusion> inclusions, AlphaTable alpha_vertex,
                                         AlphaTable alpha_ray)
    : dimension_(dimension),
      cells_(std::move(cells)),
      inclusions_(std::move(inclusions)),
      alpha_vertex_(std::move(alpha_vertex)),
      alpha_ray_(std::move(alpha_ray)) {
  std::sort(cells_.begin(), cells_.end(),
            [](const CanonicalCell& a, const CanonicalCell& b) { return a.id() < b.id(); });
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (!index_.emplace(cells_[i].id(), i).second)
      throw Error(ErrorCode::kInvalidInput, "duplicate cell id " + cells_[i].id());
  std::sort(inclusions_.begin(), inclusions_.end(), [](const FaceInclusion& a, const FaceInclusion& b) {
    return std::tie(a.parent, a.child) < std::tie(b.parent, b.child);
  });
  for (std::size_t i = 0; i < inclusions_.size(); ++i) {
    const auto& inc = inclusions_[i];
    if (!has_cell(inc.child) || !has_cell(inc.parent))
      throw Error(ErrorCode::kInvalidInput, "inclusion refers to unknown cell " + inc.child + " -> " + inc.parent);
    if (!inclusion_index_.emplace(std::make_pair(inc.child, inc.parent), i).second)
      throw Error(ErrorCode::kInvalidInput, "duplicate inclusion " + inc.child + " -> " + inc.parent);
    parents_[inc.child].push_back(inc.parent);
    children_[inc.parent].push_back(inc.child);
  }
  for (const auto* table : {&alpha_vertex_, &alpha_ray_})
    for (const auto& [id, row] : *table)
      if (!has_cell(id)) throw Error(ErrorCode::kInvalidInput, "alpha data for unknown cell " + id);
}

const CanonicalCell& WeakTropicalComplex::cell(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw Error(ErrorCode::kInvalidInput, "unknown cell " + id);
  return cells_[it->second];
}

std::vector<std::string> WeakTropicalComplex::vertices() const {
  std::set<std::string> s;
  for (const auto& c : cells_) s.insert(c.vertex_ids().begin(), c.vertex_ids().end());
  return {s.begin(), s.end()};
}

std::vector<std::string> WeakTropicalComplex::labels() const {
  std::set<std::string> s;
  for (const auto& c : cells_) s.insert(c.ray_labels().begin(), c.ray_labels().end());
  return {s.begin(), s.end()};
}

std::optional<long> WeakTropicalComplex::alpha(const std::string& cell, const std::string& vertex) const {
  auto it = alpha_vertex_.find(cell);
  if (it == alpha_vertex_.end()) return std::nullopt;
  auto jt = it->second.find(vertex);
  if (jt == it->second.end()) return std::nullopt;
  return jt->second;
}

std::optional<long> WeakTropicalComplex::ray_alpha(const std::string& cell, const std::string& label) const {
  auto it = alpha_ray_.find(cell);
  if (it == alpha_ray_.end()) return std::nullopt;
  auto jt = it->second.find(label);
  if (jt == it->second.end()) return std::nullopt;
  return jt->second;
}

const FaceInclusion* WeakTropicalComplex::inclusion(const std::string& child, const std::string& parent) const {
  auto it = inclusion_index_.find({child, parent});
  return it == inclusion_index_.end() ? nullptr : &inclusions_[it->second];
}

std::vector<std::string> WeakTropicalComplex::cofaces(const std::string& id, int dim) const {
  std::vector<std::string> out;
  auto it = parents_.find(id);
  if (it == parents_.end()) return out;
  for (const auto& p : it->second)
    if (cell(p).dim() == dim) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> WeakTropicalComplex::faces(const std::string& id) const {
  auto it = children_.find(id);
  if (it == children_.end()) return {};
  std::vector<std::string> out = it->second;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> WeakTropicalComplex::codim_one_cells() const {
  std::vector<std::string> out;
  for (const auto& c : cells_)
    if (c.dim() == dimension_ - 1) out.push_back(c.id());
  return out;
}

std::vector<std::string> WeakTropicalComplex::maximal_cells() const {
  std::vector<std::string> out;
  for (const auto& c : cells_)
    if (!parents_.count(c.id())) out.push_back(c.id());
  return out;
}

WeakTropicalComplex WeakTropicalComplex::with_alpha(AlphaTable alpha_vertex, AlphaTable alpha_ray) const {
  return WeakTropicalComplex(dimension_, cells_, inclusions_, std::move(alpha_vertex), std::move(alpha_ray));
}

AffineMap induced_map(const WeakTropicalComplex& c, const FaceInclusion& inc) {
  const CanonicalCell& child = c.cell(inc.child);
  const CanonicalCell& parent = c.cell(inc.parent);
  if (inc.coordinate_map.size() != child.chart_rank())
    throw Error(ErrorCode::kInvalidInput, "coordinate map of " + inc.child + " -> " + inc.parent + " has wrong size");
  IntMatrix lin(parent.chart_rank(), child.chart_rank());
  RatVector t(parent.chart_rank(), Rat(0));
  for (std::size_t i = 0; i < inc.coordinate_map.size(); ++i) {
    const std::size_t j = inc.coordinate_map[i];
    if (j >= parent.chart_rank())
      throw Error(ErrorCode::kInvalidInput, "coordinate map of " + inc.child + " -> " + inc.parent + " out of range");
    lin(j, i) = 1;
  }
  // A vertex cell sits at length * e_j in a parent with a positive-length simplex.
  if (child.r() == 0 && parent.r() > 0) t[inc.coordinate_map[0]] = parent.length();
  return AffineMap(std::move(lin), std::move(t));
}

namespace {

// Parent chart coordinates hit by the inclusion.
std::vector<std::size_t> signature(const FaceInclusion& inc) {
  std::vector<std::size_t> s = inc.coordinate_map;
  std::sort(s.begin(), s.end());
  return s;
}

class Validator {
 public:
  explicit Validator(const WeakTropicalComplex& c) : c_(c) {}

  ValidationReport run() {
    check_cells();
    check_inclusions();
    check_face_closure();
    check_transitivity();
    check_alpha();
    std::stable_sort(report_.violations.begin(), report_.violations.end(), by_cell);
    std::stable_sort(report_.notes.begin(), report_.notes.end(), by_cell);
    return std::move(report_);
  }

 private:
  static bool by_cell(const Finding& a, const Finding& b) {
    const std::string ka = a.cells.empty() ? std::string() : a.cells.front();
    const std::string kb = b.cells.empty() ? std::string() : b.cells.front();
    return ka < kb;
  }

  void fail(std::string check, std::vector<std::string> cells, std::string msg) {
    report_.violations.push_back({std::move(check), std::move(cells), std::move(msg)});
  }
  void note(std::string check, std::vector<std::string> cells, std::string msg) {
    report_.notes.push_back({std::move(check), std::move(cells), std::move(msg)});
  }

  void check_cells() {
    const auto maximal = c_.maximal_cells();
    for (const auto& cell : c_.cells()) {
      if (cell.dim() > c_.dimension())
        fail("pure-dimension", {cell.id()}, "cell dimension " + std::to_string(cell.dim()) +
                                                 " exceeds complex dimension " + std::to_string(c_.dimension()));
      if (cell.stratum_dim() && *cell.stratum_dim() + cell.dim() != c_.dimension())
        fail("stratum-dimension", {cell.id()},
             "stratum " + cell.stratum() + " has dimension " + std::to_string(*cell.stratum_dim()) +
                 " but the cell has dimension " + std::to_string(cell.dim()));
    }
    for (const auto& id : maximal)
      if (c_.cell(id).dim() != c_.dimension())
        fail("pure-dimension", {id}, "maximal cell of dimension " + std::to_string(c_.cell(id).dim()));
  }

  void check_inclusions() {
    for (const auto& inc : c_.inclusions()) {
      const auto& child = c_.cell(inc.child);
      const auto& parent = c_.cell(inc.parent);
      const std::vector<std::string> ids = {inc.parent, inc.child};
      if (child.dim() >= parent.dim()) {
        fail("inclusion", ids, "face " + inc.child + " is not of smaller dimension than " + inc.parent);
        continue;
      }
      if (inc.coordinate_map.size() != child.chart_rank()) {
        fail("inclusion", ids, "coordinate map has wrong size");
        continue;
      }
      std::set<std::size_t> used;
      bool ok = true;
      for (std::size_t i = 0; i < inc.coordinate_map.size() && ok; ++i) {
        const std::size_t j = inc.coordinate_map[i];
        if (j >= parent.chart_rank() || !used.insert(j).second) {
          fail("inclusion", ids, "coordinate map is not injective into the parent chart");
          ok = false;
        } else if (i < child.vertex_ids().size()) {
          if (j >= parent.vertex_ids().size() || parent.vertex_ids()[j] != child.vertex_ids()[i]) {
            fail("inclusion", ids, "vertex " + child.vertex_ids()[i] + " is not carried to the same vertex");
            ok = false;
          }
        } else {
          const std::size_t k = i - child.vertex_ids().size();
          const std::size_t pj = j - std::min(j, parent.vertex_ids().size());
          if (j < parent.vertex_ids().size() || parent.ray_labels()[pj] != child.ray_labels()[k]) {
            fail("inclusion", ids, "ray " + child.ray_labels()[k] + " is not carried to the same ray");
            ok = false;
          }
        }
      }
      if (!ok) continue;
      if (child.r() >= 1 && child.length() != parent.length()) {
        fail("equal-length", ids, "lengths differ across a positive-dimensional finite face: " +
                                       child.length().str() + " vs " + parent.length().str());
        continue;
      }
      // Geometric check: the image is the face of the parent chart cut out by the unused coordinates.
      std::vector<Constraint> zero;
      for (std::size_t j = 0; j < parent.chart_rank(); ++j)
        if (!used.count(j)) {
          IntVector u(parent.chart_rank(), Integer(0));
          u[j] = 1;
          zero.push_back({u, Rat(0)});
        }
      const Polyhedron face = parent.chart().with_equalities(zero);
      const Polyhedron img = image_polyhedron(induced_map(c_, inc), child.chart());
      if (!same_point_set(face, img)) fail("inclusion", ids, "image of the child chart is not the expected face");
    }
  }

  void check_face_closure() {
    for (const auto& parent : c_.cells()) {
      const std::size_t nv = parent.vertex_ids().size();
      const std::size_t ns = parent.ray_labels().size();
      std::map<std::vector<std::size_t>, std::vector<std::string>> found;
      for (const auto& child : c_.faces(parent.id())) {
        const auto* inc = c_.inclusion(child, parent.id());
        if (inc->coordinate_map.size() == c_.cell(child).chart_rank()) found[signature(*inc)].push_back(child);
      }
      // Proper faces: nonempty vertex subset times any ray subset, minus the cell itself.
      for (std::size_t vm = 1; vm < (std::size_t{1} << nv); ++vm)
        for (std::size_t rm = 0; rm < (std::size_t{1} << ns); ++rm) {
          if (vm == (std::size_t{1} << nv) - 1 && rm == (std::size_t{1} << ns) - 1) continue;
          std::vector<std::size_t> sig;
          std::vector<std::string> names;
          for (std::size_t i = 0; i < nv; ++i)
            if (vm >> i & 1) { sig.push_back(i); names.push_back(parent.vertex_ids()[i]); }
          std::vector<std::string> rays;
          for (std::size_t i = 0; i < ns; ++i)
            if (rm >> i & 1) { sig.push_back(nv + i); rays.push_back(parent.ray_labels()[i]); }
          auto it = found.find(sig);
          const std::string what = "face (" + join(names) + (rays.empty() ? "" : " | " + join(rays)) + ")";
          if (it == found.end()) {
            fail("face-closure", {parent.id()}, what + " has no corresponding cell");
          } else if (it->second.size() > 1) {
            std::vector<std::string> ids = {parent.id()};
            ids.insert(ids.end(), it->second.begin(), it->second.end());
            fail("face-closure", ids, what + " corresponds to several cells: " + join(it->second));
          }
        }
    }
  }

  void check_transitivity() {
    for (const auto& ab : c_.inclusions()) {
      for (const auto& cid : c_.cells()) {
        const auto* bc = c_.inclusion(ab.parent, cid.id());
        if (!bc) continue;
        const auto* ac = c_.inclusion(ab.child, cid.id());
        const std::vector<std::string> ids = {cid.id(), ab.parent, ab.child};
        if (!ac) {
          fail("transitivity", ids, ab.child + " is a face of " + ab.parent + " which is a face of " + cid.id() +
                                        ", but no inclusion " + ab.child + " -> " + cid.id() + " is recorded");
          continue;
        }
        if (ab.coordinate_map.size() != ac->coordinate_map.size()) continue;
        bool consistent = true;
        for (std::size_t i = 0; i < ab.coordinate_map.size(); ++i) {
          const std::size_t mid = ab.coordinate_map[i];
          if (mid >= bc->coordinate_map.size() || bc->coordinate_map[mid] != ac->coordinate_map[i]) consistent = false;
        }
        if (!consistent)
          fail("transitivity", ids, "composed inclusion " + ab.child + " -> " + ab.parent + " -> " + cid.id() +
                                        " disagrees with the recorded one");
      }
    }
    for (const auto& inc : c_.inclusions())
      if (c_.inclusion(inc.parent, inc.child))
        fail("antisymmetry", {inc.child, inc.parent}, "cells are faces of each other");
  }

  void check_alpha() {
    const int d = c_.dimension();
    for (const auto& [id, row] : c_.alpha_vertex()) {
      const auto& cell = c_.cell(id);
      if (cell.dim() != d - 1) {
        fail("alpha-sum", {id}, "alpha numbers given on a cell that is not of codimension one");
        continue;
      }
      for (const auto& [v, a] : row)
        if (!cell.has_vertex(v)) fail("alpha-sum", {id}, "alpha given for vertex " + v + " not in the cell");
    }
    for (const auto& [id, row] : c_.alpha_ray()) {
      const auto& cell = c_.cell(id);
      if (cell.dim() != d - 1) {
        fail("alpha-ray", {id}, "ray alpha numbers given on a cell that is not of codimension one");
        continue;
      }
      std::vector<std::string> given;
      for (const auto& [l, a] : row) given.push_back(l);
      if (given != cell.ray_labels())
        fail("alpha-ray", {id}, "ray alpha labels {" + join(given) + "} differ from the rays {" +
                                    join(cell.ray_labels()) + "} of the cell");
    }
    for (const auto& id : c_.codim_one_cells()) {
      const auto& cell = c_.cell(id);
      const long db = deg_b(c_, id);
      if (cell.r() == 0) {
        const auto a = c_.alpha(id, cell.vertex_ids()[0]);
        if (a && *a != db)
          fail("alpha-sum", {id}, "alpha at the single vertex " + cell.vertex_ids()[0] + " is " + std::to_string(*a) +
                                      " but must equal deg_b = " + std::to_string(db));
      } else {
        long sum = 0;
        bool complete = true;
        for (const auto& v : cell.vertex_ids()) {
          auto a = c_.alpha(id, v);
          if (!a) {
            fail("alpha-sum", {id}, "missing alpha for vertex " + v);
            complete = false;
          } else {
            sum += *a;
          }
        }
        if (complete && sum != db)
          fail("alpha-sum", {id}, "sum of vertex alpha numbers is " + std::to_string(sum) + " but deg_b = " +
                                      std::to_string(db));
      }
      if (cell.s() > 0 && !c_.alpha_ray().count(id))
        note("alpha-ray", {id}, "no ray alpha numbers supplied");
    }
  }

  const WeakTropicalComplex& c_;
  ValidationReport report_;
};

void require_codim_one(const WeakTropicalComplex& c, const std::string& t) {
  if (c.cell(t).dim() != c.dimension() - 1)
    throw Error(ErrorCode::kNotCodimOne, "cell " + t + " has dimension " + std::to_string(c.cell(t).dim()) +
                                             ", expected " + std::to_string(c.dimension() - 1));
}

}  // namespace

ValidationReport validate(const WeakTropicalComplex& c) { return Validator(c).run(); }

long deg_b(const WeakTropicalComplex& c, const std::string& t) {
  require_codim_one(c, t);
  long n = 0;
  for (const auto& s : c.cofaces(t, c.dimension()))
    if (c.cell(s).r() > c.cell(t).r()) ++n;
  return n;
}

long deg_u(const WeakTropicalComplex& c, const std::string& t) {
  require_codim_one(c, t);
  long n = 0;
  for (const auto& s : c.cofaces(t, c.dimension()))
    if (c.cell(s).r() == c.cell(t).r()) ++n;
  return n;
}

Extension extension_direction(const WeakTropicalComplex& c, const std::string& t, const std::string& s) {
  const auto& ct = c.cell(t);
  const auto& cs = c.cell(s);
  if (!c.is_face(t, s) || cs.dim() != ct.dim() + 1)
    throw Error(ErrorCode::kNotAFace, t + " is not a codimension-one face of " + s);
  if (cs.r() > ct.r()) {
    for (const auto& v : cs.vertex_ids())
      if (!ct.has_vertex(v)) return {true, v};
  } else {
    for (const auto& l : cs.ray_labels())
      if (!ct.has_ray(l)) return {false, l};
  }
  throw Error(ErrorCode::kNotAFace, t + " and " + s + " do not differ by one vertex or ray");
}

WeakTropicalComplex bounded_subcomplex(const WeakTropicalComplex& c) {
  std::vector<CanonicalCell> cells;
  int d = 0;
  for (const auto& cell : c.cells())
    if (cell.bounded()) {
      cells.push_back(cell);
      d = std::max(d, cell.dim());
    }
  std::vector<FaceInclusion> incs;
  for (const auto& inc : c.inclusions())
    if (c.cell(inc.child).bounded() && c.cell(inc.parent).bounded()) incs.push_back(inc);
  AlphaTable av;
  for (const auto& [id, row] : c.alpha_vertex())
    if (c.cell(id).bounded() && c.cell(id).dim() == d - 1) av[id] = row;
  return WeakTropicalComplex(d, std::move(cells), std::move(incs), std::move(av), {});
}

}  // namespace skeltrop
