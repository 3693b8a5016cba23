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

#include <cmath>
#include <cstdio>
#include <sstream>

#include "skeltrop/cli/commands.hpp"

namespace skeltrop::cli {
namespace {

constexpr double kSize = 480.0;
constexpr double kMargin = 60.0;

double px(double x) { return kMargin + kSize * x; }
double py(double y) { return kMargin + kSize * (1.0 - y); }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string render_svg(const TorusTriangulation& t, const std::map<std::string, Rat>& vertex_values,
                       const std::map<std::string, std::vector<std::string>>& rays) {
  const double m = static_cast<double>(t.m());
  const double side = kSize + 2 * kMargin;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(side) << "\" height=\"" << num(side)
     << "\" viewBox=\"0 0 " << num(side) << ' ' << num(side) << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<defs>\n<clipPath id=\"square\"><rect x=\"" << num(px(0)) << "\" y=\"" << num(py(1)) << "\" width=\""
     << num(kSize) << "\" height=\"" << num(kSize) << "\"/></clipPath>\n"
     << "<marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"3\" orient=\"auto\">"
     << "<path d=\"M0,0 L6,3 L0,6 z\" fill=\"#555\"/></marker>\n</defs>\n";
  os << "<rect x=\"" << num(px(0)) << "\" y=\"" << num(py(1)) << "\" width=\"" << num(kSize) << "\" height=\""
     << num(kSize) << "\" fill=\"#fafafa\" stroke=\"#000\"/>\n";

  // Triangles, with translates so that the whole square is covered.
  os << "<g clip-path=\"url(#square)\" fill=\"none\" stroke=\"#333\">\n";
  for (const auto& tri : t.triangles()) {
    for (int dx = -1; dx <= 1; ++dx)
      for (int dy = -1; dy <= 1; ++dy) {
        os << "<polygon points=\"";
        for (std::size_t i = 0; i < 3; ++i) {
          const double x = tri.corners[i].x / m + dx;
          const double y = tri.corners[i].y / m + dy;
          os << (i ? " " : "") << num(px(x)) << ',' << num(py(y));
        }
        os << "\"/>\n";
      }
  }
  os << "</g>\n";

  os << "<g fill=\"#888\" text-anchor=\"middle\">\n";
  for (const auto& tri : t.triangles()) {
    double cx = 0, cy = 0;
    for (const auto& p : tri.corners) {
      cx += p.x / m / 3.0;
      cy += p.y / m / 3.0;
    }
    os << "<text x=\"" << num(px(cx)) << "\" y=\"" << num(py(cy) + 4) << "\">" << tri.name << "</text>\n";
  }
  os << "</g>\n";

  // Ray cells as truncated arrows, spread around the vertex.
  os << "<g stroke=\"#555\" fill=\"#555\">\n";
  for (const auto& [v, labels] : rays) {
    const GridPoint p = t.vertex_position(v);
    const double x0 = px(p.x / m), y0 = py(p.y / m);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const double a = 2.0 * M_PI * (static_cast<double>(i) + 0.5) / static_cast<double>(labels.size()) + 0.3;
      const double x1 = x0 + 34.0 * std::cos(a), y1 = y0 - 34.0 * std::sin(a);
      os << "<line x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x1) << "\" y2=\"" << num(y1)
         << "\" stroke-dasharray=\"4,2\" marker-end=\"url(#head)\"/>\n";
      os << "<text stroke=\"none\" x=\"" << num(x0 + 46.0 * std::cos(a)) << "\" y=\"" << num(y0 - 46.0 * std::sin(a) + 4)
         << "\" text-anchor=\"middle\">" << labels[i] << "</text>\n";
    }
  }
  os << "</g>\n";

  // Vertices at every translate inside the closed square.
  os << "<g>\n";
  for (const auto& v : t.vertices()) {
    const GridPoint p = t.vertex_position(v);
    std::string label = v;
    if (auto it = vertex_values.find(v); it != vertex_values.end()) label += " F=" + it->second.str();
    for (int dx = 0; dx <= 1; ++dx)
      for (int dy = 0; dy <= 1; ++dy) {
        if ((dx && p.x != 0) || (dy && p.y != 0)) continue;
        const double x = px(p.x / m + dx), y = py(p.y / m + dy);
        os << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"4\" fill=\"#c00\"/>\n";
        os << "<text x=\"" << num(x + 6) << "\" y=\"" << num(y - 6) << "\">" << label << "</text>\n";
      }
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace skeltrop::cli
