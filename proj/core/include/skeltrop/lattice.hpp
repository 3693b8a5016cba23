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

#include <optional>
#include <string>
#include <vector>

#include "skeltrop/matrix.hpp"
#include "skeltrop/rational.hpp"

namespace skeltrop {

/// U * A * V == S with U, V unimodular and S diagonal, d1 | d2 | ... | dk.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;

  /// Nonzero diagonal entries of S, in order.
  std::vector<Integer> invariant_factors() const;
  std::size_t rank() const { return invariant_factors().size(); }
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Row-style Hermite normal form of the row module of `a`: echelon rows with
/// positive pivots, entries above each pivot reduced into [0, pivot). Zero rows
/// are dropped, so the result has rank(a) rows.
IntMatrix hermite_normal_form(const IntMatrix& a);

/// Inverse of a unimodular integer matrix.
IntMatrix unimodular_inverse(const IntMatrix& u);

/// A subgroup of Z^n, canonically stored by its Hermite basis.
class Lattice {
 public:
  Lattice() = default;
  /// Lattice generated by the columns of `generators` (n x k, any k).
  Lattice(std::size_t ambient_rank, const IntMatrix& generators);
  static Lattice from_vectors(std::size_t ambient_rank, const std::vector<IntVector>& gens);
  static Lattice full(std::size_t n);
  static Lattice zero(std::size_t n);

  std::size_t ambient_rank() const { return n_; }
  std::size_t rank() const { return basis_.cols(); }
  /// n x rank matrix whose columns form the canonical basis.
  const IntMatrix& basis() const { return basis_; }
  std::vector<IntVector> basis_vectors() const;

  bool contains(const IntVector& v) const;
  bool contains(const Lattice& other) const;
  /// Coordinates of v in the canonical basis, if v lies in the lattice.
  std::optional<IntVector> coordinates(const IntVector& v) const;

  std::string str() const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t n_ = 0;
  IntMatrix basis_;
  IntMatrix hermite_rows_;  // basis_ transposed, kept for reduction
};

/// Index of one lattice in another; `infinite` when ranks differ.
struct LatticeIndex {
  bool infinite = false;
  Integer value = 1;

  static LatticeIndex finite(Integer v) { return {false, std::move(v)}; }
  static LatticeIndex infinity() { return {true, 0}; }
  bool is_finite() const { return !infinite; }
  bool is_one() const { return !infinite && value == 1; }
  std::string str() const { return infinite ? "infinite" : value.get_str(); }

  friend bool operator==(const LatticeIndex& a, const LatticeIndex& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
};

/// #(sup / sub). Throws kNotASublattice unless sub is contained in sup.
LatticeIndex lattice_index(const Lattice& sub, const Lattice& sup);

/// Z^n intersected with the rational span of L.
Lattice saturate(const Lattice& l);

/// Saturated lattice of integer points in the span of rational vectors.
Lattice saturated_span(std::size_t ambient_rank, const std::vector<RatVector>& vectors);

/// Primitive integer vector that is a positive multiple of v. Throws kZeroVector.
IntVector primitive_vector(const RatVector& v);
IntVector primitive_vector(const IntVector& v);

/// Solution set {x : A x = b}.
struct AffineSolution {
  RatVector point;
  std::vector<RatVector> kernel;
};

std::optional<AffineSolution> solve_affine(const RatMatrix& a, const RatVector& b);

/// Some integer x with A x = b, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);

/// Scale a rational vector by the lcm of denominators to an integer vector.
IntVector clear_denominators(const RatVector& v);

}  // namespace skeltrop
