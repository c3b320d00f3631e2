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

#ifndef SCHEMES_EQUIVALENCED_HPP
#define SCHEMES_EQUIVALENCED_HPP

#include <array>
#include <vector>

#include "schemes/closure.hpp"
#include "schemes/configuration.hpp"

namespace schemes {

/// True iff every nontrivial color has valency k. Rejects one-point schemes
/// (TooFewPoints).
bool is_k_equivalenced(const SchemeHandle& scheme, std::int64_t k);

/// The four product shapes of nontrivial color pairs in a 3-equivalenced
/// scheme: sigma_u sigma_v is a sum of three distinct colors, or w1 + 2*w2
/// (both for v != u*), or 3*1 + w + w* with w != w*, or 3*1 + 2*u with
/// u = u* (both for v = u*).
enum class ProductPattern {
  ThreeDistinct,
  OnePlusTwo,
  ConjugatePair,
  SelfPaired,
};

const char* pattern_name(ProductPattern p);

struct ProductPatternEntry {
  int u = 0, v = 0;
  ProductPattern pattern{};
};

struct ProductPatternReport {
  std::vector<ProductPatternEntry> cases;  // every ordered nontrivial pair

  ProductPattern at(int u, int v) const;
};

/// Classifies every ordered pair of nontrivial colors by exact integer
/// coefficients; throws PatternViolation when a product matches no case
/// (the input is then not a valid 3-equivalenced scheme).
ProductPatternReport verify_product_patterns(const SchemeHandle& scheme);

/// A scheme relabeled so that the ascending point order within each
/// neighborhood y0t realizes the well-ordering: every extension-color block
/// between two such neighborhoods is the identity, the 3-cycle
/// [[0,1,0],[0,0,1],[1,0,0]] or its inverse.
struct WellOrderedExtension {
  SchemeHandle scheme;  // original
  int y0 = 0;
  std::vector<int> chain;                     // nontrivial colors t_1..t_l
  std::vector<int> chain_color;               // t'_{m_i}, i = 1..l-1
  std::vector<std::array<int, 3>> triple;     // per color (identity unused):
                                              // ordered points of y0t in
                                              // original labels
  std::vector<int> permutation;               // old label -> new label
  SchemeHandle relabeled;
  ClosureResult extension;                    // of `relabeled` at y0
};

/// Chain construction: orders y0t_1 ascending, then for each consecutive
/// pair picks the lowest-indexed color whose block between the two
/// neighborhoods is a full permutation and reorders the next neighborhood to
/// make that block the identity. The well-ordering property is then verified
/// exhaustively on every extension-color block; any violation (including a
/// neighborhood y0t that is not a single extension relation) throws
/// WellOrderingFailed with a witness. Requires 3-equivalenced and |T| > 2.
WellOrderedExtension well_order(const SchemeHandle& scheme, int y0);

struct FullBlockResult {
  int color = -1;
  std::array<std::array<int, 3>, 3> block{};  // rows y0u, cols y0v, ascending
};

/// Finds a color t with |t intersect (y0u x y0v)| = 3 (row sums 1); throws
/// NoneFound if absent, which contradicts coherence of a 3-equivalenced
/// scheme and is treated as input validation.
FullBlockResult exists_full_block(const SchemeHandle& scheme, int y0, int u,
                                  int v);

}  // namespace schemes

#endif  // SCHEMES_EQUIVALENCED_HPP
