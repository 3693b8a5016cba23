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

#include "skeltrop/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace skeltrop::json {
namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::kInvalidInput, msg); }

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing member \"") + key + "\"");
  return j.at(key);
}

long to_long(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<long>();
}

std::string to_str(const json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(to_str(x, what));
  return out;
}

Integer int_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Rat r = Rat::parse(j.get<std::string>());
    if (!r.is_integer()) bad("expected an integer, got " + r.str());
    return r.num();
  }
  bad("expected an integer");
}

IntVector int_vector(const json& j) {
  if (!j.is_array()) bad("expected an integer array");
  IntVector v;
  for (const auto& x : j) v.push_back(int_from_json(x));
  return v;
}

json int_vector_json(const IntVector& v) {
  json a = json::array();
  for (const auto& x : v) {
    if (x.fits_slong_p()) a.push_back(x.get_si());
    else a.push_back(x.get_str());
  }
  return a;
}

Constraint constraint_from_json(const json& j) {
  return {int_vector(member(j, "u")), rat_from_json(member(j, "gamma"))};
}

AlphaTable alpha_from_json(const json& j) {
  AlphaTable out;
  if (!j.is_object()) bad("alpha table must be an object");
  for (const auto& [cell, row] : j.items()) {
    if (!row.is_object()) bad("alpha row for " + cell + " must be an object");
    for (const auto& [key, v] : row.items()) out[cell][key] = to_long(v, "alpha number");
  }
  return out;
}

json alpha_to_json(const AlphaTable& a) {
  json out = json::object();
  for (const auto& [cell, row] : a)
    for (const auto& [key, v] : row) out[cell][key] = v;
  return out;
}

}  // namespace

json to_json(const Rat& x) { return x.str(); }

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (!j.is_string()) bad("rational numbers are written as strings \"p/q\"");
  try {
    return Rat::parse(j.get<std::string>());
  } catch (const Error&) {
    throw Error(ErrorCode::kInvalidInput, "not a rational number: " + j.get<std::string>());
  }
}

json to_json(const Polyhedron& p) {
  auto list = [](const std::vector<Constraint>& cs) {
    json a = json::array();
    for (const auto& c : cs) a.push_back({{"u", int_vector_json(c.u)}, {"gamma", to_json(c.gamma)}});
    return a;
  };
  return {{"rank", p.rank()}, {"ineqs", list(p.ineqs())}, {"eqs", list(p.eqs())}};
}

Polyhedron polyhedron_from_json(const json& j) {
  const long n = to_long(member(j, "rank"), "rank");
  if (n < 0) bad("rank must be nonnegative");
  std::vector<Constraint> ineqs, eqs;
  if (j.contains("ineqs"))
    for (const auto& c : j.at("ineqs")) ineqs.push_back(constraint_from_json(c));
  if (j.contains("eqs"))
    for (const auto& c : j.at("eqs")) eqs.push_back(constraint_from_json(c));
  return Polyhedron(static_cast<std::size_t>(n), std::move(ineqs), std::move(eqs));
}

json to_json(const AffineMap& f) {
  json lin = json::array();
  for (std::size_t i = 0; i < f.linear().rows(); ++i) lin.push_back(int_vector_json(f.linear().row(i)));
  json t = json::array();
  for (const auto& x : f.translation()) t.push_back(to_json(x));
  return {{"linear", lin}, {"translation", t}};
}

AffineMap affine_map_from_json(const json& j) {
  const json& lin = member(j, "linear");
  if (!lin.is_array()) bad("linear part must be an array of rows");
  std::vector<IntVector> rows;
  for (const auto& r : lin) rows.push_back(int_vector(r));
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m = IntMatrix::from_rows(rows, cols);
  RatVector t;
  if (j.contains("translation")) {
    for (const auto& x : j.at("translation")) t.push_back(rat_from_json(x));
  } else {
    t.assign(rows.size(), Rat(0));
  }
  return AffineMap(std::move(m), std::move(t));
}

json to_json(const WeakTropicalComplex& c) {
  json cells = json::array();
  for (const auto& cell : c.cells()) {
    json x = {{"id", cell.id()},
              {"stratum", cell.stratum()},
              {"r", cell.r()},
              {"s", cell.s()},
              {"length", to_json(cell.length())},
              {"vertex_ids", cell.vertex_ids()},
              {"ray_labels", cell.ray_labels()}};
    if (cell.stratum_dim()) x["stratum_dim"] = *cell.stratum_dim();
    cells.push_back(std::move(x));
  }
  json incs = json::array();
  for (const auto& inc : c.inclusions())
    incs.push_back({{"child", inc.child}, {"parent", inc.parent}, {"coordinate_map", inc.coordinate_map}});
  return {{"dimension", c.dimension()},
          {"vertices", c.vertices()},
          {"cells", cells},
          {"inclusions", incs},
          {"alpha_vertex", alpha_to_json(c.alpha_vertex())},
          {"alpha_ray", alpha_to_json(c.alpha_ray())}};
}

WeakTropicalComplex complex_from_json(const json& j) {
  try {
    SimplicialInput in;
    if (j.contains("dimension")) in.dimension = static_cast<int>(to_long(j.at("dimension"), "dimension"));
    in.vertices = string_list(member(j, "vertices"), "vertex id");
    const json& cells = member(j, "cells");
    if (!cells.is_array()) bad("cells must be an array");
    for (const auto& x : cells) {
      CellSpec s;
      s.id = to_str(member(x, "id"), "cell id");
      s.vertex_ids = string_list(member(x, "vertex_ids"), "vertex id");
      if (x.contains("ray_labels")) s.ray_labels = string_list(x.at("ray_labels"), "ray label");
      if (x.contains("length")) s.length = rat_from_json(x.at("length"));
      if (x.contains("stratum")) s.stratum = to_str(x.at("stratum"), "stratum");
      if (x.contains("stratum_dim")) s.stratum_dim = static_cast<int>(to_long(x.at("stratum_dim"), "stratum_dim"));
      if (x.contains("facets")) s.facets = string_list(x.at("facets"), "facet id");
      if (x.contains("r") && to_long(x.at("r"), "r") + 1 != static_cast<long>(s.vertex_ids.size()))
        bad("cell " + s.id + ": r does not match the number of vertices");
      if (x.contains("s") && to_long(x.at("s"), "s") != static_cast<long>(s.ray_labels.size()))
        bad("cell " + s.id + ": s does not match the number of ray labels");
      in.cells.push_back(std::move(s));
    }
    if (j.contains("alpha_vertex")) in.alpha_vertex = alpha_from_json(j.at("alpha_vertex"));
    if (j.contains("alpha_ray")) in.alpha_ray = alpha_from_json(j.at("alpha_ray"));

    if (!j.contains("inclusions")) return build_from_simplicial(in, false);

    const std::set<std::string> known(in.vertices.begin(), in.vertices.end());
    std::vector<CanonicalCell> out;
    int dim = 0;
    for (const auto& s : in.cells) {
      for (const auto& v : s.vertex_ids)
        if (!known.count(v)) bad("cell " + s.id + " uses unknown vertex " + v);
      out.emplace_back(s.id, s.vertex_ids, s.ray_labels, s.length, s.stratum, s.stratum_dim);
      dim = std::max(dim, out.back().dim());
    }
    std::map<std::string, const CanonicalCell*> by_id;
    for (const auto& c : out) by_id[c.id()] = &c;
    std::vector<FaceInclusion> incs;
    for (const auto& x : j.at("inclusions")) {
      FaceInclusion inc;
      inc.child = to_str(member(x, "child"), "child");
      inc.parent = to_str(member(x, "parent"), "parent");
      if (!by_id.count(inc.child) || !by_id.count(inc.parent))
        bad("inclusion refers to unknown cell " + inc.child + " -> " + inc.parent);
      if (x.contains("coordinate_map")) {
        for (const auto& k : x.at("coordinate_map")) {
          const long v = to_long(k, "coordinate");
          if (v < 0) bad("negative coordinate index");
          inc.coordinate_map.push_back(static_cast<std::size_t>(v));
        }
      } else {
        const auto& child = *by_id.at(inc.child);
        const auto& parent = *by_id.at(inc.parent);
        for (const auto& v : child.vertex_ids()) {
          auto p = parent.vertex_coordinate(v);
          if (!p) bad("inclusion " + inc.child + " -> " + inc.parent + ": vertex " + v + " missing in parent");
          inc.coordinate_map.push_back(*p);
        }
        for (const auto& l : child.ray_labels()) {
          auto p = parent.ray_coordinate(l);
          if (!p) bad("inclusion " + inc.child + " -> " + inc.parent + ": ray " + l + " missing in parent");
          inc.coordinate_map.push_back(*p);
        }
      }
      incs.push_back(std::move(inc));
    }
    return WeakTropicalComplex(in.dimension.value_or(dim), std::move(out), std::move(incs), in.alpha_vertex,
                               in.alpha_ray);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("malformed complex: ") + e.what());
  }
}

json to_json(const PLFunction& f) {
  json vv = json::object();
  for (const auto& [v, x] : f.vertex_values) vv[v] = to_json(x);
  json rs = json::object();
  for (const auto& [l, s] : f.ray_slopes) rs[l] = s;
  json out = {{"vertex_values", vv}, {"ray_slopes", rs}};
  if (!f.cell_ray_slopes.empty()) {
    json c = json::object();
    for (const auto& [cell, row] : f.cell_ray_slopes)
      for (const auto& [l, s] : row) c[cell][l] = s;
    out["cell_ray_slopes"] = c;
  }
  if (!f.subdivisions.empty()) {
    json sub = json::object();
    for (const auto& [cell, pts] : f.subdivisions) {
      json a = json::array();
      for (const auto& [p, v] : pts) {
        json pj = json::array();
        for (const auto& x : p) pj.push_back(to_json(x));
        a.push_back({{"point", pj}, {"value", to_json(v)}});
      }
      sub[cell] = a;
    }
    out["subdivisions"] = sub;
  }
  if (!f.notes.empty()) out["notes"] = f.notes;
  return out;
}

PLFunction pl_function_from_json(const json& j) {
  try {
    PLFunction f;
    if (!j.is_object()) bad("function must be an object");
    if (j.contains("vertex_values"))
      for (const auto& [v, x] : j.at("vertex_values").items()) f.vertex_values[v] = rat_from_json(x);
    if (j.contains("ray_slopes"))
      for (const auto& [l, x] : j.at("ray_slopes").items()) f.ray_slopes[l] = to_long(x, "ray slope");
    if (j.contains("cell_ray_slopes"))
      for (const auto& [cell, row] : j.at("cell_ray_slopes").items())
        for (const auto& [l, x] : row.items()) f.cell_ray_slopes[cell][l] = to_long(x, "ray slope");
    if (j.contains("subdivisions"))
      for (const auto& [cell, pts] : j.at("subdivisions").items())
        for (const auto& p : pts) {
          RatVector pt;
          for (const auto& x : member(p, "point")) pt.push_back(rat_from_json(x));
          f.subdivisions[cell].push_back({pt, rat_from_json(member(p, "value"))});
        }
    if (j.contains("notes")) f.notes = string_list(j.at("notes"), "note");
    return f;
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("malformed function: ") + e.what());
  }
}

json to_json(const CellwiseTropMap& phi) {
  json cells = json::object();
  for (const auto& [id, pieces] : phi.cells) {
    json a = json::array();
    for (const auto& p : pieces) a.push_back({{"domain", to_json(p.domain)}, {"map", to_json(p.map)}});
    cells[id] = {{"pieces", a}};
  }
  return {{"target_rank", phi.target_rank}, {"cells", cells}};
}

CellwiseTropMap trop_map_from_json(const json& j, const WeakTropicalComplex& c) {
  try {
    CellwiseTropMap phi;
    const long n = to_long(member(j, "target_rank"), "target_rank");
    if (n < 0) bad("target rank must be nonnegative");
    phi.target_rank = static_cast<std::size_t>(n);
    for (const auto& [id, x] : member(j, "cells").items()) {
      if (!c.has_cell(id)) bad("map given for unknown cell " + id);
      std::vector<TropPiece> pieces;
      for (const auto& p : member(x, "pieces")) {
        Polyhedron dom = p.contains("domain") ? polyhedron_from_json(p.at("domain")) : c.cell(id).chart();
        AffineMap f = affine_map_from_json(member(p, "map"));
        if (f.target_rank() != phi.target_rank) bad("map on cell " + id + " has the wrong target rank");
        if (f.source_rank() != c.cell(id).chart_rank() || dom.rank() != c.cell(id).chart_rank())
          bad("map on cell " + id + " does not match the chart dimension " +
              std::to_string(c.cell(id).chart_rank()));
        pieces.push_back({std::move(dom), std::move(f)});
      }
      phi.cells[id] = std::move(pieces);
    }
    return phi;
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("malformed map: ") + e.what());
  }
}

json to_json(const CodimOneDivisor& d) {
  json out = json::object();
  for (const auto& [id, x] : d.coefficients) out[id] = to_json(x);
  return out;
}

CodimOneDivisor divisor_from_json(const json& j) {
  if (!j.is_object()) bad("divisor must be an object");
  CodimOneDivisor d;
  for (const auto& [id, x] : j.items()) d.coefficients[id] = rat_from_json(x);
  return d;
}

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

RatVector parse_point(std::string_view text) {
  RatVector out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(start, end - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    try {
      out.push_back(Rat::parse(tok));
    } catch (const Error&) {
      throw Error(ErrorCode::kNotGammaRational, "coordinate \"" + std::string(tok) + "\" is not rational");
    }
    start = end + 1;
  }
  return out;
}

std::string alpha_table_csv(const AlphaTable& alpha) {
  std::ostringstream os;
  os << "edge,vertex,alpha\n";
  for (const auto& [edge, row] : alpha)
    for (const auto& [v, a] : row) os << edge << ',' << v << ',' << a << '\n';
  return os.str();
}

}  // namespace skeltrop::json
