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

#include "schemes/wreath.hpp"

#include <algorithm>

namespace schemes {

WreathScheme wreath_product(const SchemeHandle& s, const SchemeHandle& t) {
  const int nx = s.n(), ny = t.n();
  const int rs = s.rank(), rt = t.rank();

  // Provisional colors: tilde(s) = s, bar(t) = rs + rank of t among the
  // non-identity T-colors. build_from_color_matrix canonicalizes afterwards;
  // the maps are composed with its renumbering.
  std::vector<int> bar_provisional(rt, -1);
  {
    int next = rs;
    for (int c = 0; c < rt; ++c) {
      if (c != t.identity_color) bar_provisional[c] = next++;
    }
  }

  IntMatrix m(nx * ny);
  for (int x = 0; x < nx; ++x) {
    for (int y = 0; y < ny; ++y) {
      for (int x2 = 0; x2 < nx; ++x2) {
        for (int y2 = 0; y2 < ny; ++y2) {
          int c = (y == y2) ? s.cc.colors.at(x, x2)
                            : bar_provisional[t.cc.colors.at(y, y2)];
          m.at(x * ny + y, x2 * ny + y2) = c;
        }
      }
    }
  }

  WreathScheme w;
  std::vector<int> renumber;
  w.product = as_scheme(build_from_color_matrix(m, {}, &renumber));
  w.factor_x = s;
  w.factor_y = t;
  w.tilde_map.resize(rs);
  for (int c = 0; c < rs; ++c) w.tilde_map[c] = renumber[c];
  w.bar_map.assign(rt, -1);
  for (int c = 0; c < rt; ++c) {
    if (bar_provisional[c] >= 0) w.bar_map[c] = renumber[bar_provisional[c]];
  }
  return w;
}

std::map<int, std::vector<int>> point_star_sets(const WreathScheme& w, int x0,
                                                int y0) {
  if (x0 < 0 || x0 >= w.nx() || y0 < 0 || y0 >= w.ny()) {
    throw SchemeError(ErrorCode::BadInput, "base point out of range");
  }
  std::map<int, std::vector<int>> star;
  const int z0 = w.point(x0, y0);
  for (int z = 0; z < w.product.n(); ++z) {
    star[w.product.cc.colors.at(z0, z)].push_back(z);
  }
  return star;
}

}  // namespace schemes
