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

// SVG drawing of an arrangement in TP^2.
//
// In the chart x_3 = 0 a hyperplane with apex v is the set where two of
// x_1 - v_1, x_2 - v_2, 0 - v_3 tie for the maximum. With p = (v_1 - v_3,
// v_2 - v_3) and u = x - p those loci are u_1 = u_2 >= 0, u_1 = 0 >= u_2 and
// u_2 = 0 >= u_1: three rays from p in directions (1,1), (0,-1) and (-1,0).

#ifndef TROPICAL_RENDER_HPP_
#define TROPICAL_RENDER_HPP_

#include <string>

#include "tropical/core.hpp"

namespace tropical {

// SVG 1.1 document with one "apex" circle per hyperplane and three "ray"
// lines each. Hyperplanes with a non-generic apex carry the "bold" class and
// a heavier stroke. Throws Error(kUnsupportedRender) unless d == 3.
std::string RenderSvg(const Arrangement& arr);

}  // namespace tropical

#endif  // TROPICAL_RENDER_HPP_
