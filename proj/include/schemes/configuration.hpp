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

#ifndef SCHEMES_CONFIGURATION_HPP
#define SCHEMES_CONFIGURATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "schemes/errors.hpp"
#include "schemes/int_matrix.hpp"

namespace schemes {

/// Intersection numbers p[s][t][u] of a coherent configuration: the number of
/// points z with (x,z) in s and (z,y) in t, for any (x,y) in u. Dense storage
/// for small rank, hashed fallback for large rank (the tensor is sparse: at
/// most n^3 entries are nonzero regardless of rank).
class IntersectionTensor {
 public:
  IntersectionTensor() = default;
  explicit IntersectionTensor(int rank);

  int rank() const { return rank_; }
  std::int64_t at(int s, int t, int u) const;
  void add(int s, int t, int u, std::int64_t value);

 private:
  int rank_ = 0;
  bool dense_ = true;
  std::vector<std::int64_t> dense_store_;
  std::unordered_map<std::uint64_t, std::int64_t> sparse_store_;
};

/// A coherent configuration: a color partition of X x X closed under
/// transpose, containing the diagonal as a union of classes, and with
/// constant intersection numbers. Colors are dense integers 0..rank-1 with
/// the diagonal colors canonicalized to the lowest indices. Immutable after
/// construction.
struct CoherentConfiguration {
  int n = 0;
  int rank = 0;
  IntMatrix colors;
  std::vector<int> transpose_map;    // involution on colors
  std::vector<int> diagonal_colors;  // ascending; one per fiber
  std::vector<std::string> names;    // optional labels, size rank or empty
  IntersectionTensor tensor;

  int color(int x, int y) const { return colors.at(x, y); }
  bool is_scheme() const { return diagonal_colors.size() == 1; }

  /// Fiber of a point = the class of its diagonal color.
  std::vector<std::vector<int>> fibers() const;
};

/// Homogeneous coherent configuration (1_X is a single color) with valencies.
struct SchemeHandle {
  CoherentConfiguration cc;
  int identity_color = 0;
  std::vector<std::int64_t> valencies;  // per color; identity has valency 1

  int n() const { return cc.n; }
  int rank() const { return cc.rank; }
  int dual(int s) const { return cc.transpose_map[s]; }
};

/// Validates the coherent-configuration axioms and computes the intersection
/// tensor by exhaustive counting. Colors are renumbered so that diagonal
/// colors come first (ordered by smallest point) followed by off-diagonal
/// colors in row-major first-occurrence order; `applied_renumber`, when
/// non-null, receives the old-color -> new-color map.
///
/// Throws SchemeError with code NotAPartition, DiagonalNotUnionOfColors,
/// NotTransposeClosed or IntersectionNumbersNotConstant (witnesses in the
/// message), in that order of checking.
CoherentConfiguration build_from_color_matrix(
    const IntMatrix& colors, std::vector<std::string> names = {},
    std::vector<int>* applied_renumber = nullptr);

/// Wraps a configuration as a scheme; throws NotHomogeneous otherwise.
SchemeHandle as_scheme(CoherentConfiguration cc);

std::int64_t intersection_number(const CoherentConfiguration& cc, int s, int t,
                                 int u);

std::int64_t valency(const SchemeHandle& scheme, int s);

struct RestrictionResult {
  CoherentConfiguration cc;
  std::vector<int> point_map;  // new point -> old point
  std::vector<int> color_map;  // new color -> old color
};

/// Restriction to a union of fibers; throws NotFiberUnion otherwise.
RestrictionResult restriction(const CoherentConfiguration& cc,
                              const std::vector<int>& points);

struct SemiregularityResult {
  bool semiregular = true;
  int witness_point = -1;
  int witness_color = -1;
};

/// True iff |xs| <= 1 for every point x and color s.
SemiregularityResult is_semiregular(const CoherentConfiguration& cc);

/// Relabels points: colors'(x, y) = colors(perm^-1(x), perm^-1(y)).
/// Color indices, transpose map and the intersection tensor are unchanged.
CoherentConfiguration apply_point_permutation(const CoherentConfiguration& cc,
                                              const std::vector<int>& perm);

// --- catalog generators (test corpus; abelian Cayley + one-class) ---

/// Rank-1 scheme on a single point.
SchemeHandle trivial_scheme();

/// K_n: rank-2 scheme, one off-diagonal class of valency n-1. Requires n >= 2.
SchemeHandle one_class_scheme(int n);

/// Translation scheme on Z_n: color(x, y) is the class of y-x mod n. The
/// classes must partition {1..n-1} and negation must map each class onto a
/// class (PartitionNotValid otherwise); the intersection-number axiom is then
/// validated like any other configuration.
SchemeHandle cayley_scheme(int modulus,
                           const std::vector<std::vector<int>>& classes);

/// Named catalog entries: trivial, z2, z4, k4, z7, z13.
SchemeHandle catalog_scheme(const std::string& name);

}  // namespace schemes

#endif  // SCHEMES_CONFIGURATION_HPP
