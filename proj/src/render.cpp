// Copyright 2026 The Authors.
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

#include "tropical/render.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

#include "tropical/error.hpp"
#include "tropical/geometry.hpp"

namespace tropical {
namespace {

std::string Num(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.4f", value);
  std::string out(buffer);
  return out == "-0.0000" ? "0.0000" : out;
}

}  // namespace

std::string RenderSvg(const Arrangement& arr) {
  if (arr.d() != 3) {
    throw Error(ErrorCode::kUnsupportedRender,
                "rendering needs d = 3, got d = " + std::to_string(arr.d()));
  }
  const GenericityReport genericity = CheckGenericity(arr);

  // Planar apex positions; y grows upwards here and is flipped on output.
  std::vector<std::array<double, 2>> points;
  for (const auto& apex : arr.apexes()) {
    points.push_back({Rational(apex[0] - apex[2]).get_d(),
                      Rational(apex[1] - apex[2]).get_d()});
  }
  double min_x = points[0][0], max_x = min_x;
  double min_y = points[0][1], max_y = min_y;
  for (const auto& p : points) {
    min_x = std::min(min_x, p[0]);
    max_x = std::max(max_x, p[0]);
    min_y = std::min(min_y, p[1]);
    max_y = std::max(max_y, p[1]);
  }
  const double extent = std::max(max_x - min_x, max_y - min_y);
  const double margin = extent > 0 ? 0.2 * extent : 1.0;
  const double view_x = min_x - margin;
  const double view_y = -(max_y + margin);
  const double view_w = (max_x - min_x) + 2 * margin;
  const double view_h = (max_y - min_y) + 2 * margin;
  const double ray_length = 2 * (view_w + view_h);
  const double stroke = std::max(view_w, view_h) / 200;
  const double radius = 3 * stroke;

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" +
         Num(view_x) + " " + Num(view_y) + " " + Num(view_w) + " " +
         Num(view_h) + "\">\n";
  static constexpr std::array<std::array<double, 2>, 3> kDirections = {
      {{1.0, 1.0}, {0.0, -1.0}, {-1.0, 0.0}}};
  for (std::size_t i = 0; i < arr.n(); ++i) {
    const bool bold = !genericity.apexes[i].generic();
    const std::string width = Num(bold ? 3 * stroke : stroke);
    svg += "  <g id=\"hyperplane-" + std::to_string(i + 1) + "\">\n";
    for (const auto& dir : kDirections) {
      const double x2 = points[i][0] + ray_length * dir[0];
      const double y2 = points[i][1] + ray_length * dir[1];
      svg += std::string("    <line class=\"ray") + (bold ? " bold" : "") +
             "\" x1=\"" + Num(points[i][0]) + "\" y1=\"" + Num(-points[i][1]) +
             "\" x2=\"" + Num(x2) + "\" y2=\"" + Num(-y2) +
             "\" stroke=\"black\" stroke-width=\"" + width + "\"/>\n";
    }
    svg += "    <circle class=\"apex\" cx=\"" + Num(points[i][0]) + "\" cy=\"" +
           Num(-points[i][1]) + "\" r=\"" + Num(radius) + "\" fill=\"black\"/>\n";
    svg += "  </g>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace tropical
