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

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string_view>

#include "skeltrop/matrix.hpp"

namespace skeltrop::testing {

/// Base seed; SKELTROP_SEED overrides it so failures can be replayed.
inline std::uint64_t base_seed() {
  if (const char* s = std::getenv("SKELTROP_SEED")) return std::strtoull(s, nullptr, 10);
  return 20261016;
}

/// Independent stream per test so adding a test does not perturb the others.
inline std::mt19937_64 rng_for(std::string_view test) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : test) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
  return std::mt19937_64(base_seed() ^ h);
}

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, lo, hi);
  return m;
}

/// Product of random elementary operations; determinant +-1.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 6) {
  IntMatrix m = IntMatrix::identity(n);
  if (n < 2) {
    if (uniform(rng, 0, 1)) m.negate_row(0);
    return m;
  }
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    m.add_row_multiple(i, j, Integer(uniform(rng, -2, 2)));
    if (uniform(rng, 0, 3) == 0) m.swap_rows(i, j);
  }
  return m;
}

}  // namespace skeltrop::testing
