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

#include "skeltrop/mumford.hpp"

namespace skeltrop {

const char* const kE2ProvenanceNote =
    "horizontal multiplicities ord(H3) = ord(H4) = -2 (double pole of x at the origin); a tabulated value of -1 "
    "for the retraction divisor on e12, e23, e14, e47 does not satisfy div(F) + tau(f) = 0 with F(P5) = 1/2 and "
    "is reported as a discrepancy, not used";

E2Pair build_e2_pair(const TorusTriangulation& coarse, const TorusTriangulation& fine) {
  if (!(coarse == build_C()) || !(fine == refine(coarse, 2)))
    throw Error(ErrorCode::kUnsupportedInstance,
                "the E x E pair is only built from the standard triangulation and its 2-refinement");
  const AlphaTable alpha = alpha_table(coarse, fine);
  const Rat len = coarse.v_pi();

  SimplicialInput in;
  in.dimension = 2;
  in.vertices = coarse.vertices();
  in.alpha_vertex = alpha;
  for (const auto& v : coarse.vertices()) in.cells.push_back({v, {v}, {}, Rat(0), "V(" + v + ")", 2, {}});
  for (const auto& e : coarse.edges())
    in.cells.push_back({e.name, {e.va, e.vb}, {}, len, "V(" + e.name + ")", 1, {e.va, e.vb}});
  for (const auto& t : coarse.triangles())
    in.cells.push_back({t.name,
                        {t.vertex_ids.begin(), t.vertex_ids.end()},
                        {},
                        len,
                        "V(" + t.name + ")",
                        0,
                        {t.edges.begin(), t.edges.end()}});

  // Rays: vertex times horizontal component.
  auto ray = [](const std::string& v, const std::string& h) { return v + "x" + h; };
  const std::vector<std::pair<std::string, std::string>> rays = {
      {"P1", "H1"}, {"P1", "H2"}, {"P1", "H3"}, {"P1", "H4"}, {"P1", "H5"},
      {"P5", "H1"}, {"P5", "H2"}, {"P2", "H3"}, {"P4", "H4"}};
  for (const auto& [v, h] : rays) in.cells.push_back({ray(v, h), {v}, {h}, Rat(0), "V(" + ray(v, h) + ")", 1, {v}});

  // Half-stripes over the edges met by the strict transforms H1..H4.
  const std::vector<std::pair<std::string, std::string>> stripes = {
      {"e15", "H1"}, {"e59", "H1"}, {"e35", "H2"}, {"e57", "H2"},
      {"e12", "H3"}, {"e23", "H3"}, {"e14", "H4"}, {"e47", "H4"}};
  for (const auto& [e, h] : stripes) {
    const auto& edge = coarse.edge(e);
    const std::string id = e + "x" + h;
    in.cells.push_back({id, {edge.va, edge.vb}, {h}, len, "V(" + id + ")", 0, {e, ray(edge.va, h), ray(edge.vb, h)}});
  }

  // Quadrants where two horizontal components meet.
  struct Quadrant {
    std::string id, v, h1, h2;
  };
  const std::vector<Quadrant> quads = {
      {"P5xH1H2a", "P5", "H1", "H2"}, {"P5xH1H2b", "P5", "H1", "H2"}, {"P1xH1H2", "P1", "H1", "H2"},
      {"P1xH1H5", "P1", "H1", "H5"},  {"P1xH2H5", "P1", "H2", "H5"},  {"P1xH3H5", "P1", "H3", "H5"},
      {"P1xH4H5", "P1", "H4", "H5"}};
  for (const auto& q : quads)
    in.cells.push_back({q.id, {q.v}, {q.h1, q.h2}, Rat(0), "V(" + q.id + ")", 0, {ray(q.v, q.h1), ray(q.v, q.h2)}});

  E2Pair out{build_from_simplicial(in, true), {}};
  out.function.vertex_values = e2_vertex_values(coarse);
  out.function.ray_slopes = {{"H1", 1}, {"H2", 1}, {"H3", -2}, {"H4", -2}};
  out.function.notes.push_back(kE2ProvenanceNote);
  const auto problems = check_pl_function(out.complex, out.function);
  if (!problems.empty()) throw Error(ErrorCode::kIntegralityViolation, problems.front());
  return out;
}

CodimOneDivisor e2_printed_tau() {
  CodimOneDivisor d;
  for (const char* e : {"e15", "e59", "e35", "e57"}) d.coefficients[e] = Rat(1);
  for (const char* e : {"e12", "e23", "e14", "e47"}) d.coefficients[e] = Rat(-1);
  for (const char* e : {"e25", "e45", "e56", "e58"}) d.coefficients[e] = Rat(0);
  return d;
}

}  // namespace skeltrop
