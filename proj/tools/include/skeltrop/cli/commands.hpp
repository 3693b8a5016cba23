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

#include "skeltrop/cli/report.hpp"
#include "skeltrop/mumford.hpp"

namespace skeltrop::cli {

// Each command catches library errors and maps them to exit codes:
// kGenericityViolated -> 3, any other input problem -> 2.

Report cmd_validate(const std::string& complex_path);

enum class BalanceMode { kBounded, kPair };

struct BalanceOptions {
  std::string complex_path;
  std::string function_path;
  BalanceMode mode = BalanceMode::kBounded;
  /// Divisor file overriding the retraction divisor computed from the function.
  std::optional<std::string> tau_path;
};
Report cmd_balance(const BalanceOptions& opt);

struct StOptions {
  std::string complex_path;
  std::string map_path;
  std::string omega;
  std::optional<long> degree;
};
Report cmd_st(const StOptions& opt);

Report cmd_faithful(const std::string& complex_path, const std::string& map_path);
Report cmd_section(const std::string& complex_path, const std::string& map_path, const std::string& omega);

enum class Emit { kComplex, kFunction, kAlphaTable, kSvg };

struct ExampleOptions {
  std::string name = "e2";
  long refine = 2;
  Emit emit = Emit::kComplex;
};

struct ExampleOutput {
  Report report;
  std::string content;  // empty on error
};
ExampleOutput cmd_example(const ExampleOptions& opt);

/// SVG of a torus triangulation on the unit square with vertex labels.
/// Vertices listed in `rays` get short outward arrows for their ray cells.
std::string render_svg(const TorusTriangulation& t, const std::map<std::string, Rat>& vertex_values,
                       const std::map<std::string, std::vector<std::string>>& rays = {});

}  // namespace skeltrop::cli
