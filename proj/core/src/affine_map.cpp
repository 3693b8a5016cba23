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

#include <sstream>

#include "skeltrop/polyhedron.hpp"

namespace skeltrop {

AffineMap::AffineMap(IntMatrix linear, RatVector translation)
    : linear_(std::move(linear)), translation_(std::move(translation)) {
  if (translation_.size() != linear_.rows())
    throw Error(ErrorCode::kInvalidInput, "translation length does not match linear part");
}

AffineMap AffineMap::identity(std::size_t n) {
  return AffineMap(IntMatrix::identity(n), RatVector(n, Rat(0)));
}

RatVector AffineMap::operator()(const RatVector& x) const {
  if (x.size() != source_rank()) throw Error(ErrorCode::kInvalidInput, "point has wrong dimension");
  RatVector y = translation_;
  for (std::size_t i = 0; i < linear_.rows(); ++i)
    for (std::size_t j = 0; j < linear_.cols(); ++j)
      if (linear_(i, j) != 0) y[i] += Rat(linear_(i, j)) * x[j];
  return y;
}

AffineMap AffineMap::after(const AffineMap& inner) const {
  if (inner.target_rank() != source_rank())
    throw Error(ErrorCode::kInvalidInput, "composition dimension mismatch");
  return AffineMap(linear_ * inner.linear_, (*this)(inner.translation_));
}

Polyhedron image_polyhedron(const AffineMap& f, const Polyhedron& p) {
  if (p.is_empty()) throw Error(ErrorCode::kEmptyPolyhedron, "image of empty polyhedron");
  if (p.rank() != f.source_rank()) throw Error(ErrorCode::kInvalidInput, "map source rank mismatch");
  std::vector<RatVector> points;
  for (const auto& v : p.pointed_vertices()) points.push_back(f(v));
  std::vector<IntVector> rays, lines;
  for (const auto& r : p.pointed_rays()) rays.push_back(f.apply_linear(r));
  for (const auto& l : p.lineality_basis()) lines.push_back(f.apply_linear(primitive_vector(l)));
  return Polyhedron::from_generators(f.target_rank(), points, rays, lines);
}

namespace {

struct Restricted {
  IntMatrix basis;  // N_P, n x k
  IntMatrix image;  // linear * basis, m x k
  bool injective = false;
};

Restricted restrict_to(const AffineMap& f, const Polyhedron& p) {
  if (p.is_empty()) throw Error(ErrorCode::kEmptyPolyhedron, "polyhedron is empty");
  if (p.rank() != f.source_rank()) throw Error(ErrorCode::kInvalidInput, "map source rank mismatch");
  Restricted r;
  r.basis = direction_lattice(p).basis();
  r.image = f.linear() * r.basis;
  r.injective = rank(r.image) == r.basis.cols();
  return r;
}

}  // namespace

LatticeIndex map_lattice_index(const AffineMap& f, const Polyhedron& p) {
  const Restricted r = restrict_to(f, p);
  if (!r.injective) return LatticeIndex::infinity();
  const Lattice img(f.target_rank(), r.image);
  return lattice_index(img, saturate(img));
}

std::string to_string(UnimodularityCondition c) {
  switch (c) {
    case UnimodularityCondition::kIndexOne: return "injective with lattice index 1";
    case UnimodularityCondition::kFunctionalsFactor: return "integral functionals factor through the map";
    case UnimodularityCondition::kSaturatedImage: return "image lattice saturated";
    case UnimodularityCondition::kIntegralInverse: return "inverse is integral affine";
  }
  return "unknown";
}

UnimodularityResult is_unimodular(const AffineMap& f, const Polyhedron& p, UnimodularityCondition which) {
  const Restricted r = restrict_to(f, p);
  UnimodularityResult out;
  out.evaluated = which;
  out.injective = r.injective;
  std::ostringstream diag;
  diag << "condition '" << to_string(which) << "': ";
  if (!r.injective) {
    out.index = LatticeIndex::infinity();
    out.value = false;
    diag << "map is not injective on the span of the polyhedron";
    out.diagnostic = diag.str();
    return out;
  }
  const std::size_t k = r.basis.cols();
  const Lattice img(f.target_rank(), r.image);
  const Lattice sat = saturate(img);
  out.index = lattice_index(img, sat);

  switch (which) {
    case UnimodularityCondition::kIndexOne:
      out.value = out.index.is_one();
      diag << "index " << out.index.str();
      break;
    case UnimodularityCondition::kFunctionalsFactor: {
      // Coordinate functionals restricted to N_P span Hom(N_P, Z) since N_P is saturated.
      const IntMatrix at = r.image.transposed();
      out.value = true;
      for (std::size_t i = 0; i < r.basis.rows() && out.value; ++i) {
        if (!solve_integer(at, r.basis.row(i))) {
          out.value = false;
          diag << "functional e" << i << " restricted to the polyhedron is not a pullback";
        }
      }
      if (out.value) diag << "all " << r.basis.rows() << " coordinate functionals factor";
      break;
    }
    case UnimodularityCondition::kSaturatedImage:
      out.value = img == sat;
      diag << (out.value ? "image lattice equals its saturation" : "image lattice " + img.str() +
                                                                      " is not saturated");
      break;
    case UnimodularityCondition::kIntegralInverse: {
      out.value = true;
      const RatMatrix a = to_rat(r.image);
      for (const auto& w : sat.basis_vectors()) {
        auto sol = solve_affine(a, to_rat(w));
        bool integral = sol.has_value();
        if (integral)
          for (const auto& x : sol->point) integral = integral && x.is_integer();
        if (!integral) {
          out.value = false;
          diag << "preimage of " << to_string(w) << " is not a lattice vector";
          break;
        }
      }
      if (out.value) diag << "inverse maps the image lattice onto N_P (rank " << k << ")";
      break;
    }
  }
  out.diagnostic = diag.str();
  return out;
}

}  // namespace skeltrop
