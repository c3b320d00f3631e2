// Copyright 2026 The schemetool authors
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

#ifndef SCHEMES_WREATH_HPP
#define SCHEMES_WREATH_HPP

#include <map>
#include <vector>

#include "schemes/configuration.hpp"

namespace schemes {

/// Wreath product scheme on X x Y. Points are ordered x-major,
/// index = x*|Y| + y, so the adjacency identities sigma_tilde(s) = sigma_s
/// (x) I_Y and sigma_bar(t) = J_X (x) sigma_t hold with the conventional
/// Kronecker ordering (second factor fastest). Relations: tilde(s) joins
/// (x,y) ~ (x',y) with (x,x') in s; bar(t) joins (x,y) ~ (x',y') with
/// (y,y') in t != 1_Y.
struct WreathScheme {
  SchemeHandle product;
  SchemeHandle factor_x;  // (X, S)
  SchemeHandle factor_y;  // (Y, T)
  std::vector<int> tilde_map;  // S-color -> product color
  std::vector<int> bar_map;    // T-color -> product color; identity -> -1

  int nx() const { return factor_x.n(); }
  int ny() const { return factor_y.n(); }
  int point(int x, int y) const { return x * ny() + y; }
};

WreathScheme wreath_product(const SchemeHandle& s, const SchemeHandle& t);

/// For each product color, the neighborhood of (x0, y0): x0s x {y0} for
/// tilde colors and X x y0t for bar colors. Points sorted ascending.
std::map<int, std::vector<int>> point_star_sets(const WreathScheme& w, int x0,
                                                int y0);

}  // namespace schemes

#endif  // SCHEMES_WREATH_HPP
