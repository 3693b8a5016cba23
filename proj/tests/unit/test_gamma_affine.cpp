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

#include <doctest.h>

#include <algorithm>
#include <functional>

#include "../support/fixtures.hpp"
#include "../support/random.hpp"
#include "skeltrop/error.hpp"
#include "skeltrop/polyhedron.hpp"

using namespace skeltrop;
using skeltrop::testing::random_map;
using skeltrop::testing::random_polytope;
using skeltrop::testing::rng_for;
using skeltrop::testing::uniform;

namespace {

Constraint c(IntVector u, Rat g) { return {std::move(u), std::move(g)}; }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kInvalidInput;
}

bool same_vertex_set(std::vector<RatVector> a, std::vector<RatVector> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

Polyhedron interval(Rat lo, Rat hi) { return Polyhedron(1, {c({1}, -lo), c({-1}, hi)}); }

Polyhedron unit_square() { return Polyhedron(2, {c({1, 0}, 0), c({0, 1}, 0), c({-1, 0}, 1), c({0, -1}, 1)}); }

Polyhedron random_polyhedron(std::mt19937_64& rng, std::size_t n) {
  std::vector<Constraint> ineqs;
  const long k = uniform(rng, 1, 8);
  for (long i = 0; i < k; ++i) {
    IntVector u(n);
    for (auto& x : u) x = uniform(rng, -3, 3);
    ineqs.push_back(c(u, Rat(uniform(rng, -3, 6), uniform(rng, 1, 2))));
  }
  return Polyhedron(n, ineqs);
}

}  // namespace

TEST_CASE("vertices and rays") {
  const Polyhedron simplex(2, {c({1, 0}, 0), c({0, 1}, 0)}, {c({1, 1}, -1)});
  const VRep v = simplex.vrep();
  CHECK(same_vertex_set(v.vertices, {{1, 0}, {0, 1}}));
  CHECK(v.rays.empty());
  CHECK(simplex.dim() == 1);

  const Polyhedron prism(3, {c({1, 0, 0}, 0), c({0, 1, 0}, 0), c({0, 0, 1}, 0)}, {c({1, 1, 0}, -1)});
  const VRep w = prism.vrep();
  CHECK(same_vertex_set(w.vertices, {{1, 0, 0}, {0, 1, 0}}));
  REQUIRE(w.rays.size() == 1);
  CHECK(w.rays[0] == IntVector{0, 0, 1});

  const Polyhedron empty(1, {c({1}, 0), c({-1}, 1), c({1}, -2)});
  CHECK(empty.is_empty());
  CHECK(code_of([&] { (void)empty.vrep(); }) == ErrorCode::kEmptyPolyhedron);
  CHECK(code_of([] { (void)Polyhedron(2, {c({1, 0}, 0)}).vrep(); }) == ErrorCode::kHasLineality);
}

TEST_CASE("recession cones") {
  CHECK(recession_cone(unit_square()).dim() == 0);
  const Polyhedron prism(3, {c({1, 0, 0}, 0), c({0, 1, 0}, 0), c({0, 0, 1}, 0)}, {c({1, 1, 0}, -1)});
  const Polyhedron rc = recession_cone(prism);
  CHECK(same_point_set(rc, Polyhedron::from_generators(3, {{0, 0, 0}}, {{0, 0, 1}})));
  const Polyhedron half(2, {c({1, 0}, 0)});
  CHECK(same_point_set(recession_cone(half), half));
  CHECK(code_of([] { (void)recession_cone(Polyhedron::empty(2)); }) == ErrorCode::kEmptyPolyhedron);
}

TEST_CASE("direction lattices") {
  const auto seg = Polyhedron::from_generators(2, {{0, 0}, {Rat(1, 2), Rat(1, 2)}});
  CHECK(direction_lattice(seg) == Lattice::from_vectors(2, {{1, 1}}));
  CHECK(direction_lattice(unit_square()) == Lattice::full(2));
  CHECK(direction_lattice(Polyhedron::point({Rat(1, 3), 2})) == Lattice::zero(2));
}

TEST_CASE("relative interior") {
  const auto seg = Polyhedron::from_generators(2, {{0, 0}, {2, 2}});
  CHECK(seg.relint_contains({1, 1}));
  CHECK_FALSE(seg.relint_contains({0, 0}));
  CHECK_FALSE(seg.relint_contains({1, 0}));
  CHECK(seg.contains(RatVector{0, 0}));
  CHECK(seg.relint_contains(seg.relint_point()));
  // Implicit equalities: x >= 0 and -x >= 0 pin x to zero.
  const Polyhedron flat(2, {c({1, 0}, 0), c({-1, 0}, 0), c({0, 1}, 0), c({0, -1}, 1)});
  CHECK(flat.dim() == 1);
  CHECK(flat.relint_contains({0, Rat(1, 2)}));
}

TEST_CASE("images of polyhedra") {
  CHECK(same_point_set(image_polyhedron(AffineMap::identity(2), unit_square()), unit_square()));
  const AffineMap proj(IntMatrix{{1, 0}}, {0});
  CHECK(same_point_set(image_polyhedron(proj, unit_square()), interval(0, 1)));
  const AffineMap twice(IntMatrix{{2}}, {0});
  CHECK(same_point_set(image_polyhedron(twice, interval(0, 1)), interval(0, 2)));
}

TEST_CASE("lattice index of maps") {
  const auto one = map_lattice_index(AffineMap::identity(2), unit_square());
  CHECK(one.is_one());
  const AffineMap twice(IntMatrix{{2}}, {0});
  CHECK(map_lattice_index(twice, interval(0, 1)).value == 2);
  const AffineMap sum(IntMatrix{{1, 1}}, {0});
  CHECK_FALSE(map_lattice_index(sum, unit_square()).is_finite());
}

TEST_CASE("unimodularity examples") {
  const AffineMap shear(IntMatrix{{1, 1}, {0, 1}}, {0, 0});
  const AffineMap twice(IntMatrix{{2}}, {0});
  const AffineMap diagonal(IntMatrix{{1}, {1}}, {Rat(1, 2), 0});
  for (auto which : {UnimodularityCondition::kIndexOne, UnimodularityCondition::kFunctionalsFactor,
                     UnimodularityCondition::kSaturatedImage, UnimodularityCondition::kIntegralInverse}) {
    CAPTURE(to_string(which));
    const auto r = is_unimodular(shear, unit_square(), which);
    CHECK(r.value);
    CHECK(r.evaluated == which);
    CHECK_FALSE(is_unimodular(twice, interval(0, 1), which).value);
    CHECK(is_unimodular(diagonal, interval(0, 1), which).value);
  }
  CHECK(is_unimodular(twice, interval(0, 1)).index.value == 2);
}

TEST_CASE("intersections") {
  CHECK(same_point_set(intersect(unit_square(), unit_square()), unit_square()));
  CHECK(same_point_set(intersect(interval(0, 1), interval(1, 2)), Polyhedron::point({1})));
  CHECK(intersect(interval(0, 1), interval(2, 3)).is_empty());
}

TEST_CASE("faces of a square") {
  const auto faces = unit_square().faces();
  std::size_t by_dim[3] = {0, 0, 0};
  for (const auto& f : faces) {
    REQUIRE(f.dim() >= 0);
    ++by_dim[f.dim()];
  }
  CHECK(by_dim[0] == 4);
  CHECK(by_dim[1] == 4);
  CHECK(by_dim[2] == 1);
}

TEST_CASE("H to V to H round trip") {
  auto rng = rng_for("hv-round-trip");
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 100; ++trial) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 3));
    const Polyhedron p = random_polyhedron(rng, n);
    if (p.is_empty() || p.has_lineality()) continue;
    const VRep v = p.vrep();
    const Polyhedron q = Polyhedron::from_generators(n, v.vertices, v.rays);
    CAPTURE(p.str());
    CHECK(same_point_set(p, q));
    for (const auto& r : v.rays) CHECK(primitive_vector(r) == r);
    ++checked;
  }
  CHECK(checked >= 50);
}

TEST_CASE("the four unimodularity conditions agree") {
  auto rng = rng_for("unimodular-four-way");
  int positive = 0, negative = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 3));
    const auto m = static_cast<std::size_t>(uniform(rng, 1, 3));
    const Polyhedron p = random_polytope(rng, n);
    const AffineMap f = random_map(rng, n, m);
    const bool a = is_unimodular(f, p, UnimodularityCondition::kIndexOne).value;
    CAPTURE(p.str());
    CHECK(is_unimodular(f, p, UnimodularityCondition::kFunctionalsFactor).value == a);
    CHECK(is_unimodular(f, p, UnimodularityCondition::kSaturatedImage).value == a);
    CHECK(is_unimodular(f, p, UnimodularityCondition::kIntegralInverse).value == a);
    (a ? positive : negative)++;
  }
  CHECK(positive >= 20);
  CHECK(negative >= 20);
}

TEST_CASE("lattice index is multiplicative under composition") {
  auto rng = rng_for("index-composition");
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 60; ++trial) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 3));
    const auto m = static_cast<std::size_t>(uniform(rng, static_cast<long>(n), 3));
    const auto k = static_cast<std::size_t>(uniform(rng, static_cast<long>(m), 3));
    const Polyhedron p = random_polytope(rng, n);
    const AffineMap f = random_map(rng, n, m), g = random_map(rng, m, k);
    const auto fi = map_lattice_index(f, p);
    if (!fi.is_finite()) continue;
    const Polyhedron fp = image_polyhedron(f, p);
    const auto gi = map_lattice_index(g, fp);
    if (!gi.is_finite()) continue;
    const auto gf = map_lattice_index(g.after(f), p);
    REQUIRE(gf.is_finite());
    CHECK(gf.value == gi.value * fi.value);
    ++checked;
  }
  CHECK(checked >= 30);
}

TEST_CASE("recession cone commutes with injective maps") {
  auto rng = rng_for("recession-image");
  int checked = 0;
  for (int trial = 0; trial < 300 && checked < 40; ++trial) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 3));
    const Polyhedron p = random_polyhedron(rng, n);
    if (p.is_empty() || p.has_lineality() || p.is_bounded()) continue;
    const AffineMap f = random_map(rng, n, static_cast<std::size_t>(uniform(rng, static_cast<long>(n), 3)));
    if (rank(f.linear()) != n) continue;
    const AffineMap lin(f.linear(), RatVector(f.target_rank(), Rat(0)));
    CHECK(same_point_set(recession_cone(image_polyhedron(f, p)), image_polyhedron(lin, recession_cone(p))));
    ++checked;
  }
  CHECK(checked >= 20);
}
