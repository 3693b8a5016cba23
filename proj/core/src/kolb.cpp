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

#include <algorithm>

#include "skeltrop/mumford.hpp"

namespace skeltrop {

KolbEngine::KolbEngine(const TorusTriangulation& t) : t_(t), n_(t.vertices().size()) {
  if (!t_.vertex_determined())
    throw Error(ErrorCode::kNotVertexDetermined,
                "triangulation with grid denominator " + std::to_string(t_.m()) +
                    " has simplices that are not determined by their vertices");
  table_.assign(n_ * n_ * n_, Rat(0));
  const Rat vpi = t_.v_pi();

  // Transversal products: v(pi) for every triangle on the three vertices.
  for (const auto& tri : t_.triangles()) {
    std::array<std::size_t, 3> v;
    for (int i = 0; i < 3; ++i) v[i] = t_.vertex_index(tri.vertex_ids[i]);
    std::sort(v.begin(), v.end());
    at(v[0], v[1], v[2]) += vpi;
  }
  auto fill_symmetric = [this](std::size_t a, std::size_t b, std::size_t c, const Rat& x) {
    std::array<std::size_t, 3> v{a, b, c};
    std::sort(v.begin(), v.end());
    do {
      at(v[0], v[1], v[2]) = x;
    } while (std::next_permutation(v.begin(), v.end()));
  };
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b)
      for (std::size_t c = b + 1; c < n_; ++c) fill_symmetric(a, b, c, at(a, b, c));

  std::vector<GridPoint> pos;
  for (const auto& v : t_.vertices()) pos.push_back(t_.vertex_position(v));

  // D_b D_b D_c: relation (b) along a projection separating b from c.
  for (std::size_t b = 0; b < n_; ++b)
    for (std::size_t c = 0; c < n_; ++c) {
      if (b == c) continue;
      const bool use_x = pos[b].x != pos[c].x;
      if (!use_x && pos[b].y == pos[c].y)
        throw Error(ErrorCode::kIrreducibleTriple, "no projection separates " + t_.vertices()[b] + " and " +
                                                       t_.vertices()[c]);
      Rat sum = 0;
      for (std::size_t e = 0; e < n_; ++e) {
        if (e == b) continue;
        const bool same = use_x ? pos[e].x == pos[b].x : pos[e].y == pos[b].y;
        if (same) sum += at(c, b, e);
      }
      fill_symmetric(b, b, c, -sum);
    }

  // D_a^3: relation (a).
  for (std::size_t a = 0; a < n_; ++a) {
    Rat sum = 0;
    for (std::size_t e = 0; e < n_; ++e)
      if (e != a) sum += at(a, a, e);
    at(a, a, a) = -sum;
  }
}

Rat& KolbEngine::at(std::size_t a, std::size_t b, std::size_t c) { return table_[(a * n_ + b) * n_ + c]; }

const Rat& KolbEngine::at(std::size_t a, std::size_t b, std::size_t c) const {
  return table_[(a * n_ + b) * n_ + c];
}

Rat KolbEngine::triple(const std::string& a, const std::string& b, const std::string& c) const {
  return at(t_.vertex_index(a), t_.vertex_index(b), t_.vertex_index(c));
}

Rat KolbEngine::dot_edge(const DivisorExpr& expr, const std::string& a, const std::string& b) const {
  bool found = false;
  for (const auto& e : t_.edges())
    if ((e.va == a && e.vb == b) || (e.va == b && e.vb == a)) found = true;
  if (!found) throw Error(ErrorCode::kNotAnEdge, a + " and " + b + " are not joined by an edge");
  const Rat inv = Rat(1) / t_.v_pi();
  Rat sum = 0;
  for (const auto& [c, coef] : expr)
    if (coef != 0) sum += Rat(coef) * inv * triple(c, a, b);
  return sum;
}

Rat triple_number(const TorusTriangulation& t, const std::string& a, const std::string& b, const std::string& c) {
  return KolbEngine(t).triple(a, b, c);
}

Rat divisor_dot_edge_curve(const TorusTriangulation& t, const DivisorExpr& expr, const std::string& a,
                           const std::string& b) {
  return KolbEngine(t).dot_edge(expr, a, b);
}

long alpha_via_covering(const TorusTriangulation& coarse, const KolbEngine& engine, const std::string& edge,
                        const std::string& vertex) {
  const TorusTriangulation& fine = engine.triangulation();
  const long mc = coarse.m();
  if (fine.m() % mc != 0 || !(refine(coarse, fine.m() / mc) == fine))
    throw Error(ErrorCode::kInvalidInput, "fine triangulation is not a refinement of the coarse one");
  const long k = fine.m() / mc;
  const auto& e = coarse.edge(edge);
  if (e.va != vertex && e.vb != vertex)
    throw Error(ErrorCode::kInvalidInput, "vertex " + vertex + " is not an endpoint of " + edge);

  // Fine vertices over the coarse vertex: same grid point modulo mc.
  const GridPoint u = coarse.vertex_position(vertex);
  DivisorExpr lifts;
  for (const auto& v : fine.vertices()) {
    const GridPoint p = fine.vertex_position(v);
    if (p.x % mc == u.x && p.y % mc == u.y) lifts[v] = 1;
  }

  std::optional<Rat> value;
  std::string first;
  for (long lx = 0; lx < k; ++lx)
    for (long ly = 0; ly < k; ++ly) {
      const GridPoint a{e.a.x + mc * lx, e.a.y + mc * ly};
      const GridPoint b{e.b.x + mc * lx, e.b.y + mc * ly};
      const auto lifted = fine.edge_through(a, b);
      if (!lifted) throw Error(ErrorCode::kLiftInconsistency, "a lift of " + edge + " is not an edge of the refinement");
      const auto& fe = fine.edge(*lifted);
      const Rat x = engine.dot_edge(lifts, fe.va, fe.vb);
      if (!value) {
        value = x;
        first = *lifted;
      } else if (*value != x) {
        throw Error(ErrorCode::kLiftInconsistency, "lifts " + first + " and " + *lifted + " of " + edge +
                                                       " give " + value->str() + " and " + x.str());
      }
    }
  if (!value->is_integer())
    throw Error(ErrorCode::kLiftInconsistency, "non-integral intersection number " + value->str() + " on " + edge);
  return -value->num().get_si();
}

long alpha_via_covering(const TorusTriangulation& coarse, const TorusTriangulation& fine, const std::string& edge,
                        const std::string& vertex) {
  return alpha_via_covering(coarse, KolbEngine(fine), edge, vertex);
}

AlphaTable alpha_table(const TorusTriangulation& coarse, const TorusTriangulation& fine) {
  const KolbEngine engine(fine);
  AlphaTable out;
  for (const auto& e : coarse.edges()) {
    out[e.name][e.va] = alpha_via_covering(coarse, engine, e.name, e.va);
    out[e.name][e.vb] = alpha_via_covering(coarse, engine, e.name, e.vb);
  }
  return out;
}

}  // namespace skeltrop
