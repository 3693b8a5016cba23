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
#include <deque>
#include <functional>
#include <set>

#include "skeltrop/skeleton.hpp"

namespace skeltrop {

std::string face_id(const std::vector<std::string>& vertex_ids, const std::vector<std::string>& ray_labels) {
  std::string out = "[";
  for (std::size_t i = 0; i < vertex_ids.size(); ++i) out += (i ? "," : "") + vertex_ids[i];
  if (!ray_labels.empty()) {
    out += "|";
    for (std::size_t i = 0; i < ray_labels.size(); ++i) out += (i ? "," : "") + ray_labels[i];
  }
  return out + "]";
}

WeakTropicalComplex build_from_simplicial(const SimplicialInput& in, bool check) {
  using Key = std::pair<std::vector<std::string>, std::vector<std::string>>;
  const std::set<std::string> known(in.vertices.begin(), in.vertices.end());

  std::map<std::string, CellSpec> specs;
  std::map<Key, std::vector<std::string>> by_key;
  std::deque<std::string> work;
  std::vector<std::string> order;

  auto add = [&](CellSpec spec) {
    std::sort(spec.vertex_ids.begin(), spec.vertex_ids.end());
    std::sort(spec.ray_labels.begin(), spec.ray_labels.end());
    for (const auto& v : spec.vertex_ids)
      if (!known.count(v)) throw Error(ErrorCode::kInvalidInput, "cell " + spec.id + " uses unknown vertex " + v);
    if (spec.vertex_ids.size() == 1) spec.length = Rat(0);
    const std::string id = spec.id;
    by_key[{spec.vertex_ids, spec.ray_labels}].push_back(id);
    if (!specs.emplace(id, std::move(spec)).second) throw Error(ErrorCode::kInvalidInput, "duplicate cell id " + id);
    work.push_back(id);
    order.push_back(id);
  };
  for (const auto& c : in.cells) {
    if (c.vertex_ids.empty()) throw Error(ErrorCode::kInvalidInput, "cell " + c.id + " has no vertices");
    add(c);
  }

  std::map<std::string, std::vector<std::string>> facets;
  while (!work.empty()) {
    const std::string id = work.front();
    work.pop_front();
    const CellSpec spec = specs.at(id);
    if (!spec.facets.empty()) {
      for (const auto& f : spec.facets)
        if (!specs.count(f)) throw Error(ErrorCode::kInvalidInput, "cell " + id + " lists unknown facet " + f);
      facets[id] = spec.facets;
      continue;
    }
    std::vector<Key> keys;
    if (spec.vertex_ids.size() > 1)
      for (std::size_t i = 0; i < spec.vertex_ids.size(); ++i) {
        Key k{spec.vertex_ids, spec.ray_labels};
        k.first.erase(k.first.begin() + static_cast<long>(i));
        keys.push_back(std::move(k));
      }
    for (std::size_t i = 0; i < spec.ray_labels.size(); ++i) {
      Key k{spec.vertex_ids, spec.ray_labels};
      k.second.erase(k.second.begin() + static_cast<long>(i));
      keys.push_back(std::move(k));
    }
    for (const auto& k : keys) {
      auto it = by_key.find(k);
      if (it == by_key.end()) {
        CellSpec face;
        face.id = face_id(k.first, k.second);
        face.vertex_ids = k.first;
        face.ray_labels = k.second;
        face.length = spec.length;
        add(std::move(face));
        facets[id].push_back(by_key.at(k).front());
      } else if (it->second.size() == 1) {
        facets[id].push_back(it->second.front());
      } else {
        throw Error(ErrorCode::kInvalidInput, "face " + face_id(k.first, k.second) + " of cell " + id +
                                                  " is ambiguous; list the facets explicitly");
      }
    }
  }

  // All faces of each cell, through the facet graph.
  std::map<std::string, std::set<std::string>> below;
  std::function<const std::set<std::string>&(const std::string&, int)> collect =
      [&](const std::string& id, int depth) -> const std::set<std::string>& {
    if (depth > static_cast<int>(specs.size())) throw Error(ErrorCode::kInvalidInput, "facet graph has a cycle");
    auto it = below.find(id);
    if (it != below.end()) return it->second;
    std::set<std::string> acc;
    for (const auto& f : facets[id]) {
      acc.insert(f);
      const auto& sub = collect(f, depth + 1);
      acc.insert(sub.begin(), sub.end());
    }
    return below[id] = std::move(acc);
  };

  std::vector<CanonicalCell> cells;
  int dim = 0;
  for (const auto& id : order) {
    const auto& s = specs.at(id);
    cells.emplace_back(s.id, s.vertex_ids, s.ray_labels, s.length, s.stratum, s.stratum_dim);
    dim = std::max(dim, cells.back().dim());
  }
  std::map<std::string, const CanonicalCell*> by_id;
  for (const auto& c : cells) by_id[c.id()] = &c;

  std::vector<FaceInclusion> incs;
  for (const auto& id : order) {
    const CanonicalCell& parent = *by_id.at(id);
    for (const auto& child_id : collect(id, 0)) {
      const CanonicalCell& child = *by_id.at(child_id);
      FaceInclusion inc{child_id, id, {}};
      for (const auto& v : child.vertex_ids()) {
        auto j = parent.vertex_coordinate(v);
        if (!j) throw Error(ErrorCode::kInvalidInput, "facet " + child_id + " of " + id + " has foreign vertex " + v);
        inc.coordinate_map.push_back(*j);
      }
      for (const auto& l : child.ray_labels()) {
        auto j = parent.ray_coordinate(l);
        if (!j) throw Error(ErrorCode::kInvalidInput, "facet " + child_id + " of " + id + " has foreign ray " + l);
        inc.coordinate_map.push_back(*j);
      }
      incs.push_back(std::move(inc));
    }
  }

  WeakTropicalComplex out(in.dimension.value_or(dim), std::move(cells), std::move(incs), in.alpha_vertex,
                          in.alpha_ray);
  if (check) {
    const auto report = validate(out);
    if (!report.ok()) {
      const auto& f = report.violations.front();
      throw Error(ErrorCode::kInvalidInput,
                  f.check + " violated at " + (f.cells.empty() ? std::string("?") : f.cells.front()) + ": " + f.message);
    }
  }
  return out;
}

}  // namespace skeltrop
