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

#include <cstdlib>

#include "skeltrop/lattice.hpp"

namespace skeltrop {
namespace {

// Position of the nonzero entry of minimal absolute value in a[t.., t..].
bool find_min_pivot(const IntMatrix& a, std::size_t t, std::size_t* pi, std::size_t* pj) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Integer v = ::abs(a(i, j));
      if (!found || v < best) {
        best = v;
        *pi = i;
        *pj = j;
        found = true;
      }
    }
  return found;
}

}  // namespace

std::vector<Integer> SmithDecomposition::invariant_factors() const {
  std::vector<Integer> out;
  const std::size_t k = std::min(S.rows(), S.cols());
  for (std::size_t i = 0; i < k; ++i)
    if (S(i, i) != 0) out.push_back(S(i, i));
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    std::size_t pi = 0, pj = 0;
    if (!find_min_pivot(a, t, &pi, &pj)) break;
    a.swap_rows(t, pi);
    u.swap_rows(t, pi);
    a.swap_columns(t, pj);
    v.swap_columns(t, pj);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = floor_div(a(i, t), a(t, t));
        a.add_row_multiple(i, t, Integer(-q));
        u.add_row_multiple(i, t, Integer(-q));
        if (a(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = floor_div(a(t, j), a(t, t));
        a.add_column_multiple(j, t, Integer(-q));
        v.add_column_multiple(j, t, Integer(-q));
        if (a(t, j) != 0) dirty = true;
      }
      if (dirty) {
        // A smaller remainder appeared in row or column t; move it to the pivot.
        std::size_t bi = t, bj = t;
        Integer best = ::abs(a(t, t));
        for (std::size_t i = t + 1; i < m; ++i)
          if (a(i, t) != 0 && ::abs(a(i, t)) < best) { best = ::abs(a(i, t)); bi = i; bj = t; }
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(t, j) != 0 && ::abs(a(t, j)) < best) { best = ::abs(a(t, j)); bi = t; bj = j; }
        a.swap_rows(t, bi);
        u.swap_rows(t, bi);
        a.swap_columns(t, bj);
        v.swap_columns(t, bj);
        continue;
      }
      // Row and column are clear; enforce divisibility of the remaining block.
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n && !fixed; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            a.add_row_multiple(t, i, Integer(1));
            u.add_row_multiple(t, i, Integer(1));
            fixed = true;
          }
        }
      if (!fixed) break;
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(u), std::move(a), std::move(v)};
}

IntMatrix hermite_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (;;) {
      std::size_t sel = m;
      for (std::size_t i = r; i < m; ++i) {
        if (a(i, c) == 0) continue;
        if (sel == m || ::abs(a(i, c)) < ::abs(a(sel, c))) sel = i;
      }
      if (sel == m) break;
      a.swap_rows(r, sel);
      bool others = false;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (a(i, c) == 0) continue;
        Integer q = floor_div(a(i, c), a(r, c));
        a.add_row_multiple(i, r, Integer(-q));
        if (a(i, c) != 0) others = true;
      }
      if (!others) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) a.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(a(i, c), a(r, c));
      a.add_row_multiple(i, r, Integer(-q));
    }
    ++r;
  }
  IntMatrix h(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = a(i, j);
  return h;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  if (u.rows() != u.cols()) throw Error(ErrorCode::kInvalidInput, "inverse of non-square matrix");
  const std::size_t n = u.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = Rat(u(i, j));
    aug(i, n + i) = Rat(1);
  }
  std::vector<std::size_t> piv;
  const RatMatrix e = rref(aug, &piv);
  if (piv.size() < n || piv[n - 1] != n - 1)
    throw Error(ErrorCode::kInvalidInput, "matrix is singular");
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& x = e(i, n + j);
      if (!x.is_integer()) throw Error(ErrorCode::kInvalidInput, "matrix is not unimodular");
      inv(i, j) = x.num();
    }
  return inv;
}

}  // namespace skeltrop
