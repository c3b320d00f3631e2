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

#include <doctest.h>

#include "oracles.hpp"
#include "schemes/configuration.hpp"
#include "schemes/matrix_algebra.hpp"
#include "schemes/wreath.hpp"

using namespace schemes;

TEST_CASE("rank of the wreath product") {
  WreathScheme w = wreath_product(catalog_scheme("z2"), catalog_scheme("z7"));
  CHECK(w.product.n() == 14);
  CHECK(w.product.rank() == 2 + 3 - 1);
  CHECK(w.tilde_map.size() == 2);
  CHECK(w.bar_map.size() == 3);
  CHECK(w.bar_map[w.factor_y.identity_color] == -1);
}

TEST_CASE("adjacency tensor identities hold entrywise") {
  WreathScheme w = wreath_product(catalog_scheme("z4"), catalog_scheme("z7"));
  const int ny = w.ny();
  for (int s = 0; s < w.factor_x.rank(); ++s) {
    CMatrix expected = kron(adjacency_matrix(w.factor_x.cc, s),
                            CMatrix::Identity(ny, ny));
    CHECK((adjacency_matrix(w.product.cc, w.tilde_map[s]) - expected).norm() ==
          0.0);
  }
  for (int t = 0; t < w.factor_y.rank(); ++t) {
    if (w.bar_map[t] < 0) continue;
    CMatrix expected =
        kron(ones_matrix(w.nx()), adjacency_matrix(w.factor_y.cc, t));
    CHECK((adjacency_matrix(w.product.cc, w.bar_map[t]) - expected).norm() ==
          0.0);
  }
}

TEST_CASE("wreath valencies") {
  WreathScheme w = wreath_product(catalog_scheme("z4"), catalog_scheme("z13"));
  for (int s = 0; s < w.factor_x.rank(); ++s) {
    CHECK(w.product.valencies[w.tilde_map[s]] == w.factor_x.valencies[s]);
  }
  for (int t = 0; t < w.factor_y.rank(); ++t) {
    if (w.bar_map[t] < 0) continue;
    CHECK(w.product.valencies[w.bar_map[t]] ==
          w.nx() * w.factor_y.valencies[t]);
  }
}

TEST_CASE("wreath with a one-point factor is the other factor") {
  SchemeHandle z7 = catalog_scheme("z7");
  SUBCASE("left factor trivial") {
    WreathScheme w = wreath_product(trivial_scheme(), z7);
    CHECK(w.product.n() == 7);
    CHECK(w.product.rank() == 3);
    // point (0, y) = y; colors agree through bar_map / tilde_map.
    for (int y = 0; y < 7; ++y) {
      for (int y2 = 0; y2 < 7; ++y2) {
        int tc = z7.cc.colors.at(y, y2);
        int expected = y == y2 ? w.tilde_map[0] : w.bar_map[tc];
        CHECK(w.product.cc.colors.at(y, y2) == expected);
      }
    }
  }
  SUBCASE("right factor trivial") {
    WreathScheme w = wreath_product(z7, trivial_scheme());
    CHECK(w.product.n() == 7);
    CHECK(w.product.rank() == 3);
    for (int x = 0; x < 7; ++x) {
      for (int x2 = 0; x2 < 7; ++x2) {
        CHECK(w.product.cc.colors.at(x, x2) ==
              w.tilde_map[z7.cc.colors.at(x, x2)]);
      }
    }
  }
}

TEST_CASE("point star sets") {
  WreathScheme w = wreath_product(catalog_scheme("z2"), catalog_scheme("z7"));
  const int x0 = 1, y0 = 2;
  auto star = point_star_sets(w, x0, y0);

  // Identity tilde color: exactly the base point.
  CHECK(star.at(w.tilde_map[0]) ==
        std::vector<int>{w.point(x0, y0)});

  // Tilde of the swap color of Z_2: the other x at the same y.
  CHECK(star.at(w.tilde_map[1]) == std::vector<int>{w.point(1 - x0, y0)});

  // Bar of r1: all of X x y0*r1; 6 points for |X| = 2.
  std::vector<int> expected;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 7; ++y) {
      if (w.factor_y.cc.colors.at(y0, y) == 1) expected.push_back(w.point(x, y));
    }
  }
  std::sort(expected.begin(), expected.end());
  CHECK(star.at(w.bar_map[1]) == expected);
}

TEST_CASE("epsilon identity for bar neighborhoods") {
  WreathScheme w = wreath_product(catalog_scheme("z2"), catalog_scheme("z7"));
  const int x0 = 0, y0 = 0;
  auto star = point_star_sets(w, x0, y0);
  for (int t = 1; t < w.factor_y.rank(); ++t) {
    std::vector<int> y0t;
    for (int y = 0; y < 7; ++y) {
      if (w.factor_y.cc.colors.at(y0, y) == t) y0t.push_back(y);
    }
    CMatrix lhs = epsilon_diag(w.product.n(), star.at(w.bar_map[t]));
    CMatrix rhs = kron(CMatrix::Identity(2, 2), epsilon_diag(7, y0t));
    CHECK((lhs - rhs).norm() == 0.0);
  }
}

TEST_CASE("product tensor satisfies the valency identities") {
  WreathScheme w = wreath_product(catalog_scheme("z2"), catalog_scheme("z7"));
  const SchemeHandle& p = w.product;
  for (int u = 0; u < p.rank(); ++u) {
    for (int v = 0; v < p.rank(); ++v) {
      std::int64_t rhs = 0;
      for (int s = 0; s < p.rank(); ++s) {
        rhs += p.cc.tensor.at(u, v, s) * p.valencies[s];
      }
      CHECK(p.valencies[u] * p.valencies[v] == rhs);
    }
  }
}
