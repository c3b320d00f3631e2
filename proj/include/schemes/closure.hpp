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

#ifndef SCHEMES_CLOSURE_HPP
#define SCHEMES_CLOSURE_HPP

#include <vector>

#include "schemes/configuration.hpp"

namespace schemes {

struct ClosureResult {
  CoherentConfiguration cc;
  /// Output color -> the input color class it refines.
  std::vector<int> parent_color;
};

/// Coherent closure of an arbitrary color partition of X x X: the coarsest
/// coherent refinement, computed by pairwise (2-dimensional) Weisfeiler-Leman
/// stabilization. The refinement is seeded with (c(x,y), c(y,x), x==y) so the
/// result is transpose-closed and separates the diagonal; each round refines
/// by the exact sorted multiset of color pairs (c(x,z), c(z,y)) over z.
/// Color numbering is by first occurrence in row-major order before the
/// canonical renumbering of build_from_color_matrix, so the output is
/// deterministic. Always terminates (at worst at the discrete partition).
ClosureResult coherent_closure(const IntMatrix& init);

/// One-point extension: the coherent closure of the scheme's partition with
/// the cell (x0, x0) split off. The sets x0s come out as unions of fibers.
ClosureResult one_point_extension(const SchemeHandle& scheme, int x0);

}  // namespace schemes

#endif  // SCHEMES_CLOSURE_HPP
