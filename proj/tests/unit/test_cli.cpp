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

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "../support/fixtures.hpp"
#include "skeltrop/cli/commands.hpp"
#include "skeltrop/json_io.hpp"

using namespace skeltrop;
namespace fs = std::filesystem;
namespace sj = skeltrop::json;

namespace {

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("skeltrop_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p, std::ios::binary) << text;
  return p.string();
}

std::string read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string example(cli::Emit emit) {
  cli::ExampleOptions opt;
  opt.emit = emit;
  const auto out = cli::cmd_example(opt);
  REQUIRE(out.report.status == cli::Status::kPass);
  return out.content;
}

const std::string& e2_complex() {
  static const std::string path = write("e2_complex.json", example(cli::Emit::kComplex));
  return path;
}

const std::string& e2_function() {
  static const std::string path = write("e2_function.json", example(cli::Emit::kFunction));
  return path;
}

std::vector<std::string> cells_with(const cli::Report& r, const std::string& severity) {
  std::vector<std::string> out;
  for (const auto& f : r.findings)
    if (f.severity == severity && !f.cell.empty()) out.push_back(f.cell);
  return out;
}

std::string value_of(const cli::Report& r, const std::string& key) {
  for (const auto& f : r.findings)
    for (const auto& [k, v] : f.values)
      if (k == key) return v;
  return "";
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(SKELTROP_BIN) + " " + args + " > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

struct Toy {
  std::string complex, map;
};

Toy toy(const std::string& name, const WeakTropicalComplex& c, const CellwiseTropMap& phi) {
  return {write(name + "_complex.json", sj::to_json(c).dump()), write(name + "_map.json", sj::to_json(phi).dump())};
}

}  // namespace

TEST_CASE("validate") {
  const auto ok = cli::cmd_validate(e2_complex());
  CHECK(ok.status == cli::Status::kPass);
  CHECK(ok.exit_code == cli::kExitPass);

  auto doc = sj::read_file(e2_complex());
  doc["alpha_vertex"]["e15"]["P5"] = 2;
  const auto broken = cli::cmd_validate(write("broken_alpha.json", doc.dump()));
  CHECK(broken.status == cli::Status::kFail);
  CHECK(broken.exit_code == cli::kExitFail);
  CHECK(std::any_of(broken.findings.begin(), broken.findings.end(), [](const cli::Finding& f) {
    return f.severity == "error" && f.cell == "e15" && f.message.find("alpha-sum") != std::string::npos;
  }));

  const auto truncated = cli::cmd_validate(write("truncated.json", read(e2_complex()).substr(0, 200)));
  CHECK(truncated.status == cli::Status::kError);
  CHECK(truncated.exit_code == cli::kExitInput);
}

TEST_CASE("balance") {
  const auto r = cli::cmd_balance({e2_complex(), e2_function(), cli::BalanceMode::kBounded, std::nullopt});
  CHECK(r.status == cli::Status::kPass);
  CHECK(cells_with(r, "ok").size() == 12);
  REQUIRE(r.notes.size() == 1);
  CHECK(r.notes[0].find("-2") != std::string::npos);
  CHECK(r.notes[0].find("-1") != std::string::npos);
  const auto e15 = std::find_if(r.findings.begin(), r.findings.end(), [](const cli::Finding& f) { return f.cell == "e15"; });
  REQUIRE(e15 != r.findings.end());
  CHECK(e15->values == std::vector<std::pair<std::string, std::string>>{{"div", "-1"}, {"tau", "1"}, {"residual", "0"}});

  const std::string printed = write("printed_tau.json", sj::to_json(e2_printed_tau()).dump());
  const auto p = cli::cmd_balance({e2_complex(), e2_function(), cli::BalanceMode::kBounded, printed});
  CHECK(p.status == cli::Status::kFail);
  CHECK(p.exit_code == cli::kExitFail);
  CHECK(cells_with(p, "error") == std::vector<std::string>{"e12", "e14", "e23", "e47"});

  const auto pair = cli::cmd_balance({e2_complex(), e2_function(), cli::BalanceMode::kPair, std::nullopt});
  CHECK(pair.status == cli::Status::kPass);
  CHECK(cells_with(pair, "error").empty());
  CHECK_FALSE(cells_with(pair, "warning").empty());

  // Constant function on a complex without unbounded cells.
  const auto tri = testing::triangle_graph();
  const std::string tri_path = write("tri.json", sj::to_json(tri).dump());
  const std::string constant = write("constant.json", R"({"vertex_values": {"A": "2/3", "B": "2/3", "C": "2/3"}})");
  CHECK(cli::cmd_balance({tri_path, constant, cli::BalanceMode::kBounded, std::nullopt}).status == cli::Status::kPass);

  auto f = sj::read_file(e2_function());
  f["vertex_values"]["P5"] = "1";
  const auto bumped = cli::cmd_balance({e2_complex(), write("bumped.json", f.dump()), cli::BalanceMode::kBounded, std::nullopt});
  CHECK(bumped.status == cli::Status::kFail);
  CHECK_FALSE(cells_with(bumped, "error").empty());

  f["vertex_values"]["P5"] = "1/3";
  const auto invalid = cli::cmd_balance({e2_complex(), write("invalid.json", f.dump()), cli::BalanceMode::kBounded, std::nullopt});
  CHECK(invalid.exit_code == cli::kExitInput);
}

TEST_CASE("st") {
  const auto one = testing::path_graph(1);
  const auto unit = toy("unit", one, testing::vertex_position_map(one, 1, {{"p00", {0}}, {"p01", {1}}}));
  const auto r = cli::cmd_st({unit.complex, unit.map, "1/2", 1});
  CHECK(r.status == cli::Status::kPass);
  CHECK(value_of(r, "m_trop") == "1");

  const auto two = testing::path_graph(2);
  const auto fold = toy("fold", two, testing::fold_map(two));
  const auto f = cli::cmd_st({fold.complex, fold.map, "1/2", 2});
  CHECK(f.status == cli::Status::kPass);
  CHECK(value_of(f, "m_trop") == "1");
  CHECK(value_of(f, "sum") == "2");
  CHECK(cells_with(f, "ok") == std::vector<std::string>{"p00p01", "p01p02"});
  for (const auto& fd : f.findings)
    if (!fd.cell.empty()) CHECK(fd.values.back() == std::pair<std::string, std::string>{"index", "1"});

  const auto vertex = cli::cmd_st({fold.complex, fold.map, "1", std::nullopt});
  CHECK(vertex.exit_code == cli::kExitGenericity);
  CHECK(cli::cmd_st({fold.complex, fold.map, "1/2", 3}).exit_code == cli::kExitFail);
  CHECK(cli::cmd_st({fold.complex, fold.map, "1/2,pi", 1}).exit_code == cli::kExitInput);
}

TEST_CASE("faithful and section") {
  const auto tri = testing::triangle_graph();
  const auto emb = toy("tri", tri, testing::triangle_embedding(tri));
  CHECK(cli::cmd_faithful(emb.complex, emb.map).status == cli::Status::kPass);
  CHECK(cli::cmd_section(emb.complex, emb.map, "1/2,0").status == cli::Status::kPass);

  const auto one = testing::path_graph(1);
  const auto dbl = toy("double", one, testing::doubling_map(one));
  const auto d = cli::cmd_faithful(dbl.complex, dbl.map);
  CHECK(d.exit_code == cli::kExitFail);
  CHECK(d.findings[0].message.find("not unimodular") != std::string::npos);
  CHECK(value_of(d, "witness") == "p00p01");
  CHECK(cli::cmd_section(dbl.complex, dbl.map, "1").findings[0].message == "index 2");

  const auto two = testing::path_graph(2);
  const auto fold = toy("fold2", two, testing::fold_map(two));
  const auto f = cli::cmd_faithful(fold.complex, fold.map);
  CHECK(f.exit_code == cli::kExitFail);
  CHECK(f.findings[0].message.find("overlap") != std::string::npos);
  CHECK(cli::cmd_section(fold.complex, fold.map, "1/2").findings[0].message == "multiple fiber cells");
}

TEST_CASE("example") {
  const std::string csv = example(cli::Emit::kAlphaTable);
  CHECK(csv.find("e15,P5,1\n") != std::string::npos);
  CHECK(csv == read(std::string(SKELTROP_TEST_DATA) + "/e2_alpha_table.csv"));

  const std::string svg = example(cli::Emit::kSvg);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("P5 F=1/2") != std::string::npos);
  CHECK(svg.find("t125") != std::string::npos);
  CHECK(svg.find("H5") != std::string::npos);

  cli::ExampleOptions bad;
  bad.name = "unknown";
  const auto out = cli::cmd_example(bad);
  CHECK(out.report.exit_code == cli::kExitInput);
  CHECK(out.content.empty());

  cli::ExampleOptions k3;
  k3.refine = 3;
  CHECK(cli::cmd_example(k3).report.exit_code == cli::kExitInput);
  k3.emit = cli::Emit::kAlphaTable;
  CHECK(cli::cmd_example(k3).content == csv);
}

TEST_CASE("reports are deterministic") {
  const auto a = cli::cmd_balance({e2_complex(), e2_function(), cli::BalanceMode::kBounded, std::nullopt}).render();
  const auto b = cli::cmd_balance({e2_complex(), e2_function(), cli::BalanceMode::kBounded, std::nullopt}).render();
  CHECK(a == b);
  CHECK(example(cli::Emit::kComplex) == example(cli::Emit::kComplex));
  CHECK(example(cli::Emit::kSvg) == example(cli::Emit::kSvg));
  const auto j = sj::parse(a.substr(a.find("\n{") + 1));
  CHECK(j["status"] == "pass");
}

TEST_CASE("exit codes of the binary") {
  CHECK(run_binary("validate " + e2_complex()) == 0);
  CHECK(run_binary("example --name unknown") == 2);
  CHECK(run_binary("validate " + (scratch() / "missing.json").string()) == 2);
  const auto two = testing::path_graph(2);
  const auto fold = toy("fold3", two, testing::fold_map(two));
  CHECK(run_binary("st " + fold.complex + " " + fold.map + " --omega 1") == 3);
  CHECK(run_binary("faithful " + fold.complex + " " + fold.map) == 1);
  CHECK(run_binary("balance --mode bounded " + e2_complex() + " " + e2_function()) == 0);
  CHECK(run_binary("bogus") == 2);
  const std::string out = (scratch() / "e2.svg").string();
  CHECK(run_binary("example --emit svg --out " + out) == 0);
  CHECK(read(out).find("</svg>") != std::string::npos);
}
