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

#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "skeltrop/cli/commands.hpp"

namespace cli = skeltrop::cli;

namespace {

int emit(const cli::Report& rep) {
  std::cout << rep.render();
  return rep.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skeletons of weak tropical complexes: validation, balancing and tropicalization checks"};
  app.require_subcommand(1);

  std::string complex_path, function_path, map_path, omega, tau_path, out_path;
  std::optional<long> degree;

  auto* validate = app.add_subcommand("validate", "Check the invariants of a complex");
  validate->add_option("complex", complex_path, "Complex JSON file")->required();

  cli::BalanceMode mode = cli::BalanceMode::kBounded;
  const std::map<std::string, cli::BalanceMode> modes{{"bounded", cli::BalanceMode::kBounded},
                                                      {"pair", cli::BalanceMode::kPair}};
  auto* balance = app.add_subcommand("balance", "Compare div(F) with the retraction divisor");
  balance->add_option("complex", complex_path, "Complex JSON file")->required();
  balance->add_option("function", function_path, "PL function JSON file")->required();
  balance->add_option("--mode", mode, "bounded or pair")->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  balance->add_option("--tau", tau_path, "Divisor JSON overriding the retraction divisor (bounded mode)");

  auto* st = app.add_subcommand("st", "Sum of lattice indices over the fiber of a point");
  st->add_option("complex", complex_path, "Complex JSON file")->required();
  st->add_option("map", map_path, "Tropicalization map JSON file")->required();
  st->add_option("--omega", omega, "Target point as p/q,p/q,...")->required();
  st->add_option("--degree", degree, "Degree of the map; prints the tropical multiplicity");

  auto* faithful = app.add_subcommand("faithful", "Faithfulness certificate for a map");
  faithful->add_option("complex", complex_path, "Complex JSON file")->required();
  faithful->add_option("map", map_path, "Tropicalization map JSON file")->required();

  auto* section = app.add_subcommand("section", "Section certificate at a point");
  section->add_option("complex", complex_path, "Complex JSON file")->required();
  section->add_option("map", map_path, "Tropicalization map JSON file")->required();
  section->add_option("--omega", omega, "Target point as p/q,p/q,...")->required();

  cli::ExampleOptions ex;
  const std::map<std::string, cli::Emit> emits{{"complex", cli::Emit::kComplex},
                                               {"plf", cli::Emit::kFunction},
                                               {"alpha-table", cli::Emit::kAlphaTable},
                                               {"svg", cli::Emit::kSvg}};
  auto* example = app.add_subcommand("example", "Generate the built-in example");
  example->add_option("--name", ex.name, "Example name (e2)");
  example->add_option("--refine", ex.refine, "Refinement used for the alpha numbers");
  example->add_option("--emit", ex.emit, "complex, plf, alpha-table or svg")
      ->transform(CLI::CheckedTransformer(emits, CLI::ignore_case));
  example->add_option("--out", out_path, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kExitInput;
  }

  if (*validate) return emit(cli::cmd_validate(complex_path));
  if (*balance) {
    cli::BalanceOptions opt{complex_path, function_path, mode, std::nullopt};
    if (!tau_path.empty()) opt.tau_path = tau_path;
    return emit(cli::cmd_balance(opt));
  }
  if (*st) return emit(cli::cmd_st({complex_path, map_path, omega, degree}));
  if (*faithful) return emit(cli::cmd_faithful(complex_path, map_path));
  if (*section) return emit(cli::cmd_section(complex_path, map_path, omega));

  const auto result = cli::cmd_example(ex);
  if (result.report.status == cli::Status::kError) return emit(result.report);
  if (out_path.empty()) {
    std::cout << result.content;
    return cli::kExitPass;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << out_path << '\n';
    return cli::kExitInput;
  }
  out << result.content;
  std::cout << "wrote " << out_path << '\n';
  for (const auto& n : result.report.notes) std::cout << "note: " << n << '\n';
  return cli::kExitPass;
}
