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

#include "skeltrop/trop_map.hpp"

#include <algorithm>

namespace skeltrop {
namespace {

std::string piece_name(const std::string& cell, std::size_t piece, std::size_t count) {
  return count == 1 ? cell : cell + "#" + std::to_string(piece);
}

Polyhedron with_linear_equations(const Polyhedron& p, const AffineMap& f, const RatVector& target) {
  // f(x) == target, scaled to integer normals.
  std::vector<Constraint> eqs;
  for (std::size_t i = 0; i < f.target_rank(); ++i)
    eqs.push_back({f.linear().row(i), f.translation()[i] - target[i]});
  return p.with_equalities(eqs);
}

// Value of phi at a chart point of `cell`, if some piece contains it; throws
// on disagreement between pieces.
std::optional<RatVector> evaluate(const CellwiseTropMap& phi, const std::string& cell, const RatVector& x) {
  auto it = phi.cells.find(cell);
  if (it == phi.cells.end()) return std::nullopt;
  std::optional<RatVector> out;
  for (const auto& piece : it->second) {
    if (!piece.domain.contains(x)) continue;
    RatVector y = piece.map(x);
    if (out && *out != y) throw Error(ErrorCode::kInvalidInput, "pieces of cell " + cell + " disagree at a point");
    out = std::move(y);
  }
  return out;
}

// Face of the chart of `parent` corresponding to the cell `face`.
Polyhedron chart_face(const WeakTropicalComplex& c, const std::string& face, const std::string& parent) {
  const FaceInclusion* inc = c.inclusion(face, parent);
  if (!inc) return c.cell(parent).chart();
  return image_polyhedron(induced_map(c, *inc), c.cell(face).chart());
}

struct PieceRef {
  std::string cell;
  std::size_t index;
  const TropPiece* piece;
  std::string name;
};

std::vector<PieceRef> all_pieces(const CellwiseTropMap& phi) {
  std::vector<PieceRef> out;
  for (const auto& [cell, pieces] : phi.cells)
    for (std::size_t i = 0; i < pieces.size(); ++i)
      out.push_back({cell, i, &pieces[i], piece_name(cell, i, pieces.size())});
  return out;
}

}  // namespace

void CellwiseTropMap::set(const WeakTropicalComplex& c, const std::string& cell, AffineMap map) {
  cells[cell] = {TropPiece{c.cell(cell).chart(), std::move(map)}};
}

std::vector<std::string> check_trop_map(const WeakTropicalComplex& c, const CellwiseTropMap& phi) {
  std::vector<std::string> problems;
  for (const auto& [id, pieces] : phi.cells) {
    if (!c.has_cell(id)) {
      problems.push_back("map given for unknown cell " + id);
      continue;
    }
    const auto& cell = c.cell(id);
    if (pieces.empty()) problems.push_back("cell " + id + " has no pieces");
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const auto& p = pieces[i];
      const std::string name = piece_name(id, i, pieces.size());
      if (p.map.source_rank() != cell.chart_rank() || p.map.target_rank() != phi.target_rank ||
          p.domain.rank() != cell.chart_rank()) {
        problems.push_back("piece " + name + " has the wrong dimensions");
        continue;
      }
      if (!cell.chart().contains(p.domain)) problems.push_back("piece " + name + " leaves the chart");
      if (p.domain.dim() != cell.dim()) problems.push_back("piece " + name + " is not full-dimensional in its cell");
    }
    if (pieces.size() < 2) continue;
    // Interior facets of a piece must be met by another piece; overlaps must agree.
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const auto& p = pieces[i];
      if (p.domain.is_empty() || p.domain.has_lineality()) continue;
      for (const auto& f : p.domain.faces()) {
        if (f.dim() != p.domain.dim() - 1) continue;
        const RatVector x = f.relint_point();
        bool boundary = false;
        for (const auto& cf : cell.chart().faces())
          if (cf.dim() == cell.dim() - 1 && cf.contains(f)) boundary = true;
        if (boundary) continue;
        bool met = false;
        for (std::size_t j = 0; j < pieces.size() && !met; ++j)
          if (j != i && pieces[j].domain.contains(x)) met = true;
        if (!met)
          problems.push_back("pieces of cell " + id + " do not cover the chart near " + to_string(x));
      }
      for (std::size_t j = i + 1; j < pieces.size(); ++j) {
        const Polyhedron both = intersect(p.domain, pieces[j].domain);
        if (both.is_empty()) continue;
        bool agree = true;
        for (const auto& v : both.pointed_vertices()) agree = agree && p.map(v) == pieces[j].map(v);
        for (const auto& r : both.pointed_rays())
          agree = agree && p.map.apply_linear(r) == pieces[j].map.apply_linear(r);
        if (!agree)
          problems.push_back("pieces " + piece_name(id, i, pieces.size()) + " and " +
                             piece_name(id, j, pieces.size()) + " disagree on their overlap");
      }
    }
  }
  // Cells sharing a face must induce the same map on it.
  for (const auto& [a, pa] : phi.cells) {
    if (!c.has_cell(a)) continue;
    for (const auto& [b, pb] : phi.cells) {
      if (!c.has_cell(b) || !(a < b)) continue;
      for (const auto& g : c.faces(a)) {
        if (!c.is_face(g, b)) continue;
        const auto& gc = c.cell(g);
        const AffineMap ia = induced_map(c, *c.inclusion(g, a));
        const AffineMap ib = induced_map(c, *c.inclusion(g, b));
        std::vector<RatVector> pts;
        for (std::size_t j = 0; j < gc.vertex_ids().size(); ++j) pts.push_back(gc.chart_vertex(j));
        for (std::size_t k = 0; k < gc.ray_labels().size(); ++k) {
          RatVector x = gc.chart_vertex(0);
          x[gc.vertex_ids().size() + k] += Rat(1);
          pts.push_back(std::move(x));
        }
        for (const auto& x : pts) {
          auto ya = evaluate(phi, a, ia(x));
          auto yb = evaluate(phi, b, ib(x));
          if (ya && yb && *ya != *yb) {
            problems.push_back("cells " + a + " and " + b + " induce different maps on their common face " + g);
            break;
          }
        }
      }
    }
  }
  return problems;
}

std::vector<FiberPoint> fiber_cells(const WeakTropicalComplex& c, const CellwiseTropMap& phi,
                                    const RatVector& omega) {
  if (omega.size() != phi.target_rank)
    throw Error(ErrorCode::kInvalidInput, "query point has " + std::to_string(omega.size()) +
                                              " coordinates, expected " + std::to_string(phi.target_rank));
  std::vector<FiberPoint> out;
  for (const auto& [id, pieces] : phi.cells) {
    if (c.cell(id).dim() != c.dimension()) continue;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const auto& p = pieces[i];
      const std::string name = piece_name(id, i, pieces.size());
      const Polyhedron pre = with_linear_equations(p.domain, p.map, omega);
      if (pre.is_empty()) continue;
      if (pre.dim() > 0 || p.domain.dim() < c.dimension())
        throw Error(ErrorCode::kGenericityViolated,
                    "query point lies in the image of " + name + ", on which the map has rank below " +
                        std::to_string(c.dimension()));
      const RatVector x = pre.pointed_vertices().front();
      if (!p.domain.relint_contains(x))
        throw Error(ErrorCode::kGenericityViolated,
                    "query point lies in the image of a lower-dimensional face of " + name);
      out.push_back({id, i, x});
    }
  }
  return out;
}

STResult st_sum(const WeakTropicalComplex& c, const CellwiseTropMap& phi, const RatVector& omega) {
  STResult res;
  res.omega = omega;
  const auto fiber = fiber_cells(c, phi, omega);
  std::vector<Lattice> images;
  for (const auto& f : fiber) {
    const auto& p = phi.cells.at(f.cell)[f.piece];
    const IntMatrix img = p.map.linear() * direction_lattice(p.domain).basis();
    images.emplace_back(phi.target_rank, img);
    const Lattice sat = saturate(images.back());
    if (!res.span) {
      res.span = sat;
    } else if (!(*res.span == sat)) {
      throw Error(ErrorCode::kInconsistentSpans, "image of " + f.cell + " spans " + sat.str() +
                                                     " but an earlier fiber cell spans " + res.span->str());
    }
  }
  for (std::size_t i = 0; i < fiber.size(); ++i) {
    LatticeIndex idx = lattice_index(images[i], *res.span);
    res.sum += idx.value;
    res.terms.push_back({fiber[i], idx});
  }
  return res;
}

Integer tropical_multiplicity(const STResult& st, const Integer& degree) {
  if (degree <= 0) throw Error(ErrorCode::kInvalidInput, "degree must be positive");
  if (st.terms.empty()) throw Error(ErrorCode::kInvalidInput, "query point is not in the image");
  if (st.sum % degree != 0)
    throw Error(ErrorCode::kNonIntegralMultiplicity,
                "degree " + degree.get_str() + " does not divide the index sum " + st.sum.get_str());
  return st.sum / degree;
}

Integer tropical_multiplicity(const WeakTropicalComplex& c, const CellwiseTropMap& phi, const RatVector& omega,
                              const Integer& degree) {
  return tropical_multiplicity(st_sum(c, phi, omega), degree);
}

Certificate faithfulness_certificate(const WeakTropicalComplex& c, const CellwiseTropMap& phi) {
  const auto pieces = all_pieces(phi);
  for (const auto& p : pieces) {
    if (p.piece->domain.is_empty()) continue;
    const auto u = is_unimodular(p.piece->map, p.piece->domain);
    if (!u.value) return {false, "not unimodular on " + p.name + " (" + u.diagnostic + ")", {p.name}};
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      const auto& p = pieces[i];
      const auto& q = pieces[j];
      if (p.piece->domain.is_empty() || q.piece->domain.is_empty()) continue;
      const Polyhedron ip = image_polyhedron(p.piece->map, p.piece->domain);
      const Polyhedron iq = image_polyhedron(q.piece->map, q.piece->domain);
      const Polyhedron meet = intersect(ip, iq);
      if (meet.is_empty()) continue;
      bool explained = false;
      if (p.cell == q.cell) {
        const Polyhedron common = intersect(p.piece->domain, q.piece->domain);
        explained = !common.is_empty() && same_point_set(image_polyhedron(p.piece->map, common), meet);
      } else {
        for (const auto& g : c.faces(p.cell)) {
          if (!c.is_face(g, q.cell)) continue;
          const Polyhedron zp = intersect(p.piece->domain, chart_face(c, g, p.cell));
          const Polyhedron zq = intersect(q.piece->domain, chart_face(c, g, q.cell));
          if (zp.is_empty() || zq.is_empty()) continue;
          if (same_point_set(image_polyhedron(p.piece->map, zp), meet) &&
              same_point_set(image_polyhedron(q.piece->map, zq), meet)) {
            explained = true;
            break;
          }
        }
        if (!explained && c.is_face(p.cell, q.cell)) {
          const Polyhedron zq = intersect(q.piece->domain, chart_face(c, p.cell, q.cell));
          explained = !zq.is_empty() && same_point_set(image_polyhedron(q.piece->map, zq), meet) &&
                      same_point_set(ip, meet);
        }
        if (!explained && c.is_face(q.cell, p.cell)) {
          const Polyhedron zp = intersect(p.piece->domain, chart_face(c, q.cell, p.cell));
          explained = !zp.is_empty() && same_point_set(image_polyhedron(p.piece->map, zp), meet) &&
                      same_point_set(iq, meet);
        }
      }
      if (!explained)
        return {false, "images of " + p.name + " and " + q.name + " overlap in " + meet.str() +
                           ", which is not the image of a common face",
                {p.name, q.name}};
    }
  }
  return {true, "every piece is unimodular and images meet only along images of common faces", {}};
}

Certificate section_certificate(const WeakTropicalComplex& c, const CellwiseTropMap& phi, const RatVector& omega) {
  const STResult st = st_sum(c, phi, omega);
  std::vector<std::string> cells;
  for (const auto& t : st.terms) cells.push_back(t.fiber.cell);
  if (st.terms.empty()) return {false, "empty fiber", {}};
  if (st.terms.size() > 1) return {false, "multiple fiber cells", cells};
  if (!st.terms.front().index.is_one()) return {false, "index " + st.terms.front().index.str(), cells};
  return {true, "single fiber cell with index 1", cells};
}

}  // namespace skeltrop
