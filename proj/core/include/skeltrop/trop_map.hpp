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
#include <vector>

#include "skeltrop/lattice.hpp"
#include "skeltrop/polyhedron.hpp"
#include "skeltrop/skeleton.hpp"

namespace skeltrop {

/// One affine piece of a map on a cell; the domain lives in chart coordinates.
struct TropPiece {
  Polyhedron domain;
  AffineMap map;
};

/// Integral affine maps from cell charts to Q^n, possibly subdivided.
struct CellwiseTropMap {
  std::size_t target_rank = 0;
  std::map<std::string, std::vector<TropPiece>> cells;

  /// Adds a single piece covering the whole chart of `cell`.
  void set(const WeakTropicalComplex& c, const std::string& cell, AffineMap map);
};

/// Coverage and agreement problems, one message each.
std::vector<std::string> check_trop_map(const WeakTropicalComplex& c, const CellwiseTropMap& phi);

struct FiberPoint {
  std::string cell;
  std::size_t piece = 0;
  RatVector point;  // chart coordinates
};

/// Preimages of omega in top-dimensional cells. Throws kGenericityViolated
/// when omega lies in the image of a rank-deficient piece or of the
/// boundary of a piece.
std::vector<FiberPoint> fiber_cells(const WeakTropicalComplex& c, const CellwiseTropMap& phi, const RatVector& omega);

struct STTerm {
  FiberPoint fiber;
  LatticeIndex index;
};

struct STResult {
  RatVector omega;
  std::vector<STTerm> terms;
  Integer sum = 0;
  /// Saturated direction lattice of the common image span (absent for an empty fiber).
  std::optional<Lattice> span;
};

/// Sum over the fiber of the lattice indices of the image lattices in the
/// saturated lattice of the common span. Throws kInconsistentSpans.
STResult st_sum(const WeakTropicalComplex& c, const CellwiseTropMap& phi, const RatVector& omega);

/// st_sum / degree; throws kNonIntegralMultiplicity when degree does not divide.
Integer tropical_multiplicity(const WeakTropicalComplex& c, const CellwiseTropMap& phi, const RatVector& omega,
                              const Integer& degree);
Integer tropical_multiplicity(const STResult& st, const Integer& degree);

struct Certificate {
  bool pass = false;
  std::string reason;
  std::vector<std::string> witness;
};

Certificate faithfulness_certificate(const WeakTropicalComplex& c, const CellwiseTropMap& phi);
Certificate section_certificate(const WeakTropicalComplex& c, const CellwiseTropMap& phi, const RatVector& omega);

}  // namespace skeltrop
