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

#ifndef SCHEMES_INT_MATRIX_HPP
#define SCHEMES_INT_MATRIX_HPP

#include <cassert>
#include <vector>

namespace schemes {

/// Square integer matrix, row-major. Used for color matrices.
struct IntMatrix {
  int n = 0;
  std::vector<int> a;

  IntMatrix() = default;
  explicit IntMatrix(int size, int fill = 0)
      : n(size), a(static_cast<size_t>(size) * size, fill) {}

  int& at(int x, int y) {
    assert(x >= 0 && x < n && y >= 0 && y < n);
    return a[static_cast<size_t>(x) * n + y];
  }
  int at(int x, int y) const {
    assert(x >= 0 && x < n && y >= 0 && y < n);
    return a[static_cast<size_t>(x) * n + y];
  }

  bool operator==(const IntMatrix& o) const = default;
};

}  // namespace schemes

#endif  // SCHEMES_INT_MATRIX_HPP
