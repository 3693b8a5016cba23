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

#include "skeltrop/lattice.hpp"

namespace skeltrop {

Lattice::Lattice(std::size_t ambient_rank, const IntMatrix& generators) : n_(ambient_rank) {
  if (generators.rows() != ambient_rank && generators.cols() != 0)
    throw Error(ErrorCode::kInvalidInput, "generator dimension does not match ambient rank");
  if (generators.cols() == 0) {
    basis_ = IntMatrix(n_, 0);
    hermite_rows_ = IntMatrix(0, n_);
    return;
  }
  hermite_rows_ = hermite_normal_form(generators.transposed());
  basis_ = hermite_rows_.transposed();
  if (hermite_rows_.rows() == 0) basis_ = IntMatrix(n_, 0);
}

Lattice Lattice::from_vectors(std::size_t ambient_rank, const std::vector<IntVector>& gens) {
  return Lattice(ambient_rank, IntMatrix::from_columns(gens, ambient_rank));
}

Lattice Lattice::full(std::size_t n) { return Lattice(n, IntMatrix::identity(n)); }

Lattice Lattice::zero(std::size_t n) { return Lattice(n, IntMatrix(n, 0)); }

std::vector<IntVector> Lattice::basis_vectors() const {
  std::vector<IntVector> out;
  for (std::size_t j = 0; j < basis_.cols(); ++j) out.push_back(basis_.column(j));
  return out;
}

std::optional<IntVector> Lattice::coordinates(const IntVector& v) const {
  if (v.size() != n_) throw Error(ErrorCode::kInvalidInput, "vector dimension mismatch");
  IntVector rest = v;
  IntVector coords(hermite_rows_.rows(), Integer(0));
  // Reduce against echelon rows: each row owns the leading column of its pivot.
  for (std::size_t i = 0; i < hermite_rows_.rows(); ++i) {
    std::size_t c = 0;
    while (hermite_rows_(i, c) == 0) ++c;
    for (std::size_t k = 0; k < c; ++k)
      if (rest[k] != 0) return std::nullopt;
    if (rest[c] % hermite_rows_(i, c) != 0) return std::nullopt;
    Integer q = rest[c] / hermite_rows_(i, c);
    coords[i] = q;
    for (std::size_t k = 0; k < n_; ++k) rest[k] -= q * hermite_rows_(i, k);
  }
  for (const auto& x : rest)
    if (x != 0) return std::nullopt;
  return coords;
}

bool Lattice::contains(const IntVector& v) const { return coordinates(v).has_value(); }

bool Lattice::contains(const Lattice& other) const {
  if (other.n_ != n_) return false;
  for (std::size_t j = 0; j < other.basis_.cols(); ++j)
    if (!contains(other.basis_.column(j))) return false;
  return true;
}

std::string Lattice::str() const {
  std::ostringstream os;
  os << "span{";
  for (std::size_t j = 0; j < basis_.cols(); ++j) {
    if (j) os << ", ";
    os << to_string(basis_.column(j));
  }
  os << "} in Z^" << n_;
  return os.str();
}

LatticeIndex lattice_index(const Lattice& sub, const Lattice& sup) {
  if (sub.ambient_rank() != sup.ambient_rank())
    throw Error(ErrorCode::kNotASublattice, "ambient ranks differ");
  IntMatrix coords(sup.rank(), sub.rank());
  for (std::size_t j = 0; j < sub.rank(); ++j) {
    auto c = sup.coordinates(sub.basis().column(j));
    if (!c) throw Error(ErrorCode::kNotASublattice, sub.str() + " is not contained in " + sup.str());
    for (std::size_t i = 0; i < sup.rank(); ++i) coords(i, j) = (*c)[i];
  }
  if (sub.rank() < sup.rank()) return LatticeIndex::infinity();
  Integer d = determinant(coords);
  return LatticeIndex::finite(::abs(d));
}

Lattice saturate(const Lattice& l) {
  const std::size_t n = l.ambient_rank();
  if (l.rank() == 0) return Lattice::zero(n);
  SmithDecomposition snf = smith_normal_form(l.basis());
  // basis = U^{-1} S V^{-1}, so the span is spanned by the first rank columns of U^{-1}.
  IntMatrix uinv = unimodular_inverse(snf.U);
  const std::size_t k = snf.rank();
  IntMatrix gens(n, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) gens(i, j) = uinv(i, j);
  return Lattice(n, gens);
}

IntVector clear_denominators(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, x.den());
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(Integer(x.num() * (l / x.den())));
  return out;
}

Lattice saturated_span(std::size_t ambient_rank, const std::vector<RatVector>& vectors) {
  std::vector<IntVector> gens;
  for (const auto& v : vectors) {
    if (v.size() != ambient_rank) throw Error(ErrorCode::kInvalidInput, "vector dimension mismatch");
    gens.push_back(clear_denominators(v));
  }
  return saturate(Lattice::from_vectors(ambient_rank, gens));
}

IntVector primitive_vector(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) throw Error(ErrorCode::kZeroVector, "primitive vector of zero");
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(Integer(x / g));
  return out;
}

IntVector primitive_vector(const RatVector& v) { return primitive_vector(clear_denominators(v)); }

std::optional<AffineSolution> solve_affine(const RatMatrix& a, const RatVector& b) {
  if (a.rows() != b.size()) throw Error(ErrorCode::kInvalidInput, "right-hand side dimension mismatch");
  const std::size_t n = a.cols();
  RatMatrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  std::vector<std::size_t> piv;
  const RatMatrix e = rref(aug, &piv);
  if (!piv.empty() && piv.back() == n) return std::nullopt;
  AffineSolution sol;
  sol.point.assign(n, Rat(0));
  for (std::size_t i = 0; i < piv.size(); ++i) sol.point[piv[i]] = e(i, n);
  sol.kernel = kernel(a);
  return sol;
}

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
  if (a.rows() != b.size()) throw Error(ErrorCode::kInvalidInput, "right-hand side dimension mismatch");
  SmithDecomposition snf = smith_normal_form(a);
  const IntVector ub = snf.U * b;
  const auto d = snf.invariant_factors();
  IntVector y(a.cols(), Integer(0));
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < d.size()) {
      if (ub[i] % d[i] != 0) return std::nullopt;
      y[i] = ub[i] / d[i];
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.V * y;
}

}  // namespace skeltrop
