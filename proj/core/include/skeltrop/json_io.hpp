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

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "skeltrop/pl_function.hpp"
#include "skeltrop/polyhedron.hpp"
#include "skeltrop/rational.hpp"
#include "skeltrop/skeleton.hpp"
#include "skeltrop/trop_map.hpp"

namespace skeltrop::json {

using nlohmann::json;

// All readers throw Error(kInvalidInput) on malformed documents.

json to_json(const Rat& x);
Rat rat_from_json(const json& j);

json to_json(const Polyhedron& p);
Polyhedron polyhedron_from_json(const json& j);

json to_json(const AffineMap& f);
AffineMap affine_map_from_json(const json& j);

json to_json(const WeakTropicalComplex& c);
/// Without an "inclusions" member the faces are generated from vertex sets
/// and "facets" lists; invariants are not checked here.
WeakTropicalComplex complex_from_json(const json& j);

json to_json(const PLFunction& f);
PLFunction pl_function_from_json(const json& j);

json to_json(const CellwiseTropMap& phi);
/// Pieces without a "domain" cover the whole chart of their cell.
CellwiseTropMap trop_map_from_json(const json& j, const WeakTropicalComplex& c);

json to_json(const CodimOneDivisor& d);
CodimOneDivisor divisor_from_json(const json& j);

/// Parses text, mapping parse errors to kInvalidInput.
json parse(std::string_view text);
json read_file(const std::string& path);

/// "p/q,r/s,..." -> point. Throws kNotGammaRational for non-rational entries.
RatVector parse_point(std::string_view text);

/// CSV "edge,vertex,alpha" sorted by edge then vertex.
std::string alpha_table_csv(const AlphaTable& alpha);

}  // namespace skeltrop::json
