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

#include <memory>
#include <string>
#include <vector>

#include "skeltrop/lattice.hpp"
#include "skeltrop/matrix.hpp"
#include "skeltrop/rational.hpp"

namespace skeltrop {

/// <u, x> + gamma, read as ">= 0" or "== 0" depending on where it is stored.
struct Constraint {
  IntVector u;
  Rat gamma;

  Rat evaluate(const RatVector& x) const;
  Rat linear(const RatVector& d) const;
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct VRep {
  std::vector<RatVector> vertices;
  std::vector<IntVector> rays;  // primitive
};

/// Integral polyhedron {x in Q^n : <u_i,x> + g_i >= 0, <w_j,x> + h_j = 0}.
///
/// Vertices, rays, the lineality space and the implicit equalities are
/// computed once at construction; the object is immutable afterwards.
class Polyhedron {
 public:
  Polyhedron() : Polyhedron(0, {}, {}) {}
  Polyhedron(std::size_t rank, std::vector<Constraint> ineqs, std::vector<Constraint> eqs = {});

  /// conv(points) + cone(rays) + span(lines).
  static Polyhedron from_generators(std::size_t rank, const std::vector<RatVector>& points,
                                    const std::vector<IntVector>& rays = {},
                                    const std::vector<IntVector>& lines = {});
  static Polyhedron point(const RatVector& x);
  static Polyhedron whole_space(std::size_t rank) { return Polyhedron(rank, {}, {}); }
  static Polyhedron empty(std::size_t rank);

  std::size_t rank() const { return rank_; }
  const std::vector<Constraint>& ineqs() const { return ineqs_; }
  const std::vector<Constraint>& eqs() const { return eqs_; }

  bool is_empty() const { return geo_->empty; }
  /// -1 when empty.
  int dim() const { return geo_->dim; }
  bool has_lineality() const { return !geo_->lineality.empty(); }
  bool is_bounded() const { return !is_empty() && geo_->rays.empty() && !has_lineality(); }
  const std::vector<RatVector>& lineality_basis() const { return geo_->lineality; }

  /// Throws kEmptyPolyhedron or kHasLineality.
  VRep vrep() const;
  /// Vertices and rays of P intersected with the orthogonal complement of its lineality space.
  const std::vector<RatVector>& pointed_vertices() const { return geo_->vertices; }
  const std::vector<IntVector>& pointed_rays() const { return geo_->rays; }

  /// Indices of inequalities that hold with equality on all of P.
  const std::vector<std::size_t>& implicit_equalities() const { return geo_->implicit; }

  bool contains(const RatVector& x) const;
  bool contains(const Polyhedron& other) const;
  bool relint_contains(const RatVector& x) const;
  /// A point of the relative interior. Throws kEmptyPolyhedron.
  RatVector relint_point() const;

  /// The same constraints with the inequalities in `tight` turned into equalities.
  Polyhedron with_tight(const std::vector<std::size_t>& tight) const;
  Polyhedron with_equalities(const std::vector<Constraint>& extra) const;

  /// All nonempty faces including P itself. Throws kHasLineality.
  std::vector<Polyhedron> faces() const;

  std::string str() const;

 private:
  struct Geometry {
    bool empty = true;
    int dim = -1;
    std::vector<RatVector> lineality;
    std::vector<RatVector> vertices;
    std::vector<IntVector> rays;
    std::vector<std::size_t> implicit;
  };
  static std::shared_ptr<const Geometry> compute(std::size_t rank, const std::vector<Constraint>& ineqs,
                                                 const std::vector<Constraint>& eqs);

  std::size_t rank_ = 0;
  std::vector<Constraint> ineqs_;
  std::vector<Constraint> eqs_;
  std::shared_ptr<const Geometry> geo_;
};

Polyhedron recession_cone(const Polyhedron& p);
/// Saturated lattice of integer directions parallel to the affine span of P.
Lattice direction_lattice(const Polyhedron& p);
Polyhedron intersect(const Polyhedron& p, const Polyhedron& q);
bool same_point_set(const Polyhedron& p, const Polyhedron& q);

/// x |-> linear * x + translation.
class AffineMap {
 public:
  AffineMap() = default;
  AffineMap(IntMatrix linear, RatVector translation);
  static AffineMap identity(std::size_t n);

  std::size_t source_rank() const { return linear_.cols(); }
  std::size_t target_rank() const { return linear_.rows(); }
  const IntMatrix& linear() const { return linear_; }
  const RatVector& translation() const { return translation_; }

  RatVector operator()(const RatVector& x) const;
  IntVector apply_linear(const IntVector& d) const { return linear_ * d; }
  /// this after `inner`: x |-> this(inner(x)).
  AffineMap after(const AffineMap& inner) const;

  friend bool operator==(const AffineMap&, const AffineMap&) = default;

 private:
  IntMatrix linear_;
  RatVector translation_;
};

Polyhedron image_polyhedron(const AffineMap& f, const Polyhedron& p);

/// Index of F(N_P) in the saturated direction lattice of F(P); infinite iff F
/// is not injective on the span of P.
LatticeIndex map_lattice_index(const AffineMap& f, const Polyhedron& p);

enum class UnimodularityCondition {
  kIndexOne,           // injective with lattice index 1
  kFunctionalsFactor,  // every integral functional on P is a pullback
  kSaturatedImage,     // injective and F(N_P) saturated
  kIntegralInverse,    // inverse F(P) -> P is integral affine
};

std::string to_string(UnimodularityCondition c);

struct UnimodularityResult {
  bool value = false;
  UnimodularityCondition evaluated = UnimodularityCondition::kIndexOne;
  bool injective = false;
  LatticeIndex index;
  std::string diagnostic;
};

UnimodularityResult is_unimodular(const AffineMap& f, const Polyhedron& p,
                                  UnimodularityCondition which = UnimodularityCondition::kIndexOne);

}  // namespace skeltrop
