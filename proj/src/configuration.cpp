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

#include "schemes/configuration.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace schemes {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::NotTransposeClosed: return "NotTransposeClosed";
    case ErrorCode::DiagonalNotUnionOfColors: return "DiagonalNotUnionOfColors";
    case ErrorCode::IntersectionNumbersNotConstant: return "IntersectionNumbersNotConstant";
    case ErrorCode::InvalidColor: return "InvalidColor";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::NotFiberUnion: return "NotFiberUnion";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::PartitionNotValid: return "PartitionNotValid";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ExtractionUnstable: return "ExtractionUnstable";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::PatternViolation: return "PatternViolation";
    case ErrorCode::WellOrderingFailed: return "WellOrderingFailed";
    case ErrorCode::NoneFound: return "NoneFound";
    case ErrorCode::IdealViolation: return "IdealViolation";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "UnknownError";
}

IntersectionTensor::IntersectionTensor(int rank) : rank_(rank) {
  // 128^3 int64 entries = 16 MB; beyond that fall back to a hash map.
  dense_ = rank <= 128;
  if (dense_) {
    dense_store_.assign(static_cast<size_t>(rank) * rank * rank, 0);
  }
}

std::int64_t IntersectionTensor::at(int s, int t, int u) const {
  if (dense_) {
    return dense_store_[(static_cast<size_t>(s) * rank_ + t) * rank_ + u];
  }
  auto key = (static_cast<std::uint64_t>(s) * rank_ + t) * rank_ + u;
  auto it = sparse_store_.find(key);
  return it == sparse_store_.end() ? 0 : it->second;
}

void IntersectionTensor::add(int s, int t, int u, std::int64_t value) {
  if (dense_) {
    dense_store_[(static_cast<size_t>(s) * rank_ + t) * rank_ + u] += value;
  } else {
    auto key = (static_cast<std::uint64_t>(s) * rank_ + t) * rank_ + u;
    sparse_store_[key] += value;
  }
}

std::vector<std::vector<int>> CoherentConfiguration::fibers() const {
  std::vector<std::vector<int>> out(diagonal_colors.size());
  std::vector<int> index_of(rank, -1);
  for (size_t i = 0; i < diagonal_colors.size(); ++i) {
    index_of[diagonal_colors[i]] = static_cast<int>(i);
  }
  for (int x = 0; x < n; ++x) {
    out[index_of[colors.at(x, x)]].push_back(x);
  }
  return out;
}

namespace {

std::string cell_str(int x, int y) {
  std::ostringstream os;
  os << "(" << x << "," << y << ")";
  return os.str();
}

// Per-cell signature used by the intersection-number validator: sorted
// (s, t) -> count pairs over all z, keyed as s*rank + t. Compared exactly.
using CountRow = std::vector<std::pair<std::int64_t, std::int64_t>>;

CountRow cell_counts(const IntMatrix& m, int rank, int x, int y) {
  CountRow row;
  row.reserve(m.n);
  for (int z = 0; z < m.n; ++z) {
    row.emplace_back(static_cast<std::int64_t>(m.at(x, z)) * rank + m.at(z, y),
                     1);
  }
  std::sort(row.begin(), row.end());
  CountRow packed;
  for (const auto& e : row) {
    if (!packed.empty() && packed.back().first == e.first) {
      packed.back().second += 1;
    } else {
      packed.push_back(e);
    }
  }
  return packed;
}

}  // namespace

CoherentConfiguration build_from_color_matrix(
    const IntMatrix& input, std::vector<std::string> names,
    std::vector<int>* applied_renumber) {
  const int n = input.n;
  if (n < 1) throw SchemeError(ErrorCode::BadInput, "need at least one point");

  // Partition check: colors form a contiguous range with no empty class.
  int max_color = -1;
  for (int v : input.a) {
    if (v < 0) {
      throw SchemeError(ErrorCode::NotAPartition, "negative color entry");
    }
    max_color = std::max(max_color, v);
  }
  const int r = max_color + 1;
  std::vector<std::int64_t> class_size(r, 0);
  for (int v : input.a) class_size[v]++;
  for (int c = 0; c < r; ++c) {
    if (class_size[c] == 0) {
      throw SchemeError(ErrorCode::NotAPartition,
                        "color " + std::to_string(c) + " has no cells");
    }
  }

  // Diagonal analysis: each class must be pure diagonal or pure off-diagonal.
  std::vector<char> has_diag(r, 0), has_off(r, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      (x == y ? has_diag : has_off)[input.at(x, y)] = 1;
    }
  }
  for (int c = 0; c < r; ++c) {
    if (has_diag[c] && has_off[c]) {
      throw SchemeError(
          ErrorCode::DiagonalNotUnionOfColors,
          "color " + std::to_string(c) +
              " contains both diagonal and off-diagonal cells");
    }
  }

  // Canonical renumbering: diagonal colors first (by smallest point), then
  // off-diagonal colors by first cell in row-major order.
  std::vector<int> renumber(r, -1);
  int next = 0;
  for (int x = 0; x < n; ++x) {
    int c = input.at(x, x);
    if (renumber[c] < 0) renumber[c] = next++;
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int c = input.at(x, y);
      if (renumber[c] < 0) renumber[c] = next++;
    }
  }
  if (applied_renumber) *applied_renumber = renumber;

  CoherentConfiguration cc;
  cc.n = n;
  cc.rank = r;
  cc.colors = IntMatrix(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      cc.colors.at(x, y) = renumber[input.at(x, y)];
    }
  }
  for (int c = 0; c < r; ++c) {
    if (has_diag[c]) cc.diagonal_colors.push_back(renumber[c]);
  }
  std::sort(cc.diagonal_colors.begin(), cc.diagonal_colors.end());
  if (!names.empty()) {
    if (static_cast<int>(names.size()) != r) {
      throw SchemeError(ErrorCode::BadInput, "names size != rank");
    }
    cc.names.resize(r);
    for (int c = 0; c < r; ++c) cc.names[renumber[c]] = names[c];
  }

  // Transpose closure: the cellwise transpose of each class is a class.
  cc.transpose_map.assign(r, -1);
  std::vector<std::pair<int, int>> first_cell(r, {-1, -1});
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int c = cc.colors.at(x, y);
      if (first_cell[c].first < 0) {
        first_cell[c] = {x, y};
        cc.transpose_map[c] = cc.colors.at(y, x);
      } else if (cc.colors.at(y, x) != cc.transpose_map[c]) {
        throw SchemeError(
            ErrorCode::NotTransposeClosed,
            "color " + std::to_string(c) + ": cells " +
                cell_str(first_cell[c].first, first_cell[c].second) + " and " +
                cell_str(x, y) + " have transposes of different colors");
      }
    }
  }
  for (int c = 0; c < r; ++c) {
    if (cc.transpose_map[cc.transpose_map[c]] != c) {
      throw SchemeError(ErrorCode::NotTransposeClosed,
                        "transpose map not an involution at color " +
                            std::to_string(c));
    }
  }

  // Intersection numbers: the (s,t)-count profile of a cell must be constant
  // on each class. Abort on the first mismatch with two witnesses.
  std::vector<CountRow> profile(r);
  std::vector<std::pair<int, int>> rep(r, {-1, -1});
  cc.tensor = IntersectionTensor(r);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int u = cc.colors.at(x, y);
      CountRow row = cell_counts(cc.colors, r, x, y);
      if (rep[u].first < 0) {
        rep[u] = {x, y};
        profile[u] = std::move(row);
      } else if (row != profile[u]) {
        // Name one (s,t) pair that differs.
        std::int64_t s = -1, t = -1;
        for (const auto& e : profile[u]) {
          std::int64_t cnt = 0;
          for (const auto& f : row) {
            if (f.first == e.first) cnt = f.second;
          }
          if (cnt != e.second) {
            s = e.first / r;
            t = e.first % r;
            break;
          }
        }
        if (s < 0 && !row.empty()) {
          s = row[0].first / r;
          t = row[0].first % r;
        }
        throw SchemeError(
            ErrorCode::IntersectionNumbersNotConstant,
            "(s,t,u)=(" + std::to_string(s) + "," + std::to_string(t) + "," +
                std::to_string(u) + "): witnesses " +
                cell_str(rep[u].first, rep[u].second) + " and " +
                cell_str(x, y));
      }
    }
  }
  for (int u = 0; u < r; ++u) {
    for (const auto& e : profile[u]) {
      cc.tensor.add(static_cast<int>(e.first / r),
                    static_cast<int>(e.first % r), u, e.second);
    }
  }
  return cc;
}

SchemeHandle as_scheme(CoherentConfiguration cc) {
  if (cc.diagonal_colors.size() != 1) {
    throw SchemeError(ErrorCode::NotHomogeneous,
                      std::to_string(cc.diagonal_colors.size()) +
                          " fibers (expected 1)");
  }
  SchemeHandle handle;
  handle.identity_color = cc.diagonal_colors[0];
  handle.valencies.assign(cc.rank, 0);
  for (int s = 0; s < cc.rank; ++s) {
    handle.valencies[s] =
        cc.tensor.at(s, cc.transpose_map[s], handle.identity_color);
  }
  handle.cc = std::move(cc);
  return handle;
}

std::int64_t intersection_number(const CoherentConfiguration& cc, int s, int t,
                                 int u) {
  if (s < 0 || s >= cc.rank || t < 0 || t >= cc.rank || u < 0 || u >= cc.rank) {
    throw SchemeError(ErrorCode::InvalidColor,
                      "color out of range 0.." + std::to_string(cc.rank - 1));
  }
  return cc.tensor.at(s, t, u);
}

std::int64_t valency(const SchemeHandle& scheme, int s) {
  if (s < 0 || s >= scheme.rank()) {
    throw SchemeError(ErrorCode::InvalidColor, "color " + std::to_string(s));
  }
  return scheme.valencies[s];
}

RestrictionResult restriction(const CoherentConfiguration& cc,
                              const std::vector<int>& points) {
  std::vector<char> in_set(cc.n, 0);
  for (int p : points) {
    if (p < 0 || p >= cc.n) {
      throw SchemeError(ErrorCode::BadInput, "point out of range");
    }
    in_set[p] = 1;
  }
  // Y must be a union of fibers: membership must be constant per fiber.
  for (const auto& fiber : cc.fibers()) {
    int count = 0;
    for (int p : fiber) count += in_set[p];
    if (count != 0 && count != static_cast<int>(fiber.size())) {
      throw SchemeError(ErrorCode::NotFiberUnion,
                        "fiber of point " + std::to_string(fiber[0]) +
                            " is only partially included");
    }
  }

  RestrictionResult out;
  for (int p = 0; p < cc.n; ++p) {
    if (in_set[p]) out.point_map.push_back(p);
  }
  const int m = static_cast<int>(out.point_map.size());
  if (m == 0) throw SchemeError(ErrorCode::BadInput, "empty restriction");

  IntMatrix sub(m);
  std::vector<int> old_to_new_color(cc.rank, -1);
  int next = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      int c = cc.colors.at(out.point_map[i], out.point_map[j]);
      if (old_to_new_color[c] < 0) old_to_new_color[c] = next++;
      sub.at(i, j) = old_to_new_color[c];
    }
  }
  std::vector<int> renumber;
  out.cc = build_from_color_matrix(sub, {}, &renumber);
  out.color_map.assign(next, -1);
  for (int c = 0; c < cc.rank; ++c) {
    if (old_to_new_color[c] >= 0) {
      out.color_map[renumber[old_to_new_color[c]]] = c;
    }
  }
  return out;
}

SemiregularityResult is_semiregular(const CoherentConfiguration& cc) {
  std::vector<int> row_count(cc.rank);
  for (int x = 0; x < cc.n; ++x) {
    std::fill(row_count.begin(), row_count.end(), 0);
    for (int y = 0; y < cc.n; ++y) {
      if (++row_count[cc.colors.at(x, y)] > 1) {
        return {false, x, cc.colors.at(x, y)};
      }
    }
  }
  return {};
}

CoherentConfiguration apply_point_permutation(const CoherentConfiguration& cc,
                                              const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != cc.n) {
    throw SchemeError(ErrorCode::NotAPermutation, "size mismatch");
  }
  std::vector<char> seen(cc.n, 0);
  for (int v : perm) {
    if (v < 0 || v >= cc.n || seen[v]) {
      throw SchemeError(ErrorCode::NotAPermutation,
                        "not a bijection on 0.." + std::to_string(cc.n - 1));
    }
    seen[v] = 1;
  }
  CoherentConfiguration out = cc;
  for (int x = 0; x < cc.n; ++x) {
    for (int y = 0; y < cc.n; ++y) {
      out.colors.at(perm[x], perm[y]) = cc.colors.at(x, y);
    }
  }
  return out;
}

SchemeHandle trivial_scheme() {
  IntMatrix m(1, 0);
  return as_scheme(build_from_color_matrix(m));
}

SchemeHandle one_class_scheme(int n) {
  if (n < 2) throw SchemeError(ErrorCode::BadInput, "one_class needs n >= 2");
  IntMatrix m(n, 1);
  for (int x = 0; x < n; ++x) m.at(x, x) = 0;
  return as_scheme(build_from_color_matrix(m));
}

SchemeHandle cayley_scheme(int modulus,
                           const std::vector<std::vector<int>>& classes) {
  if (modulus < 1) throw SchemeError(ErrorCode::BadInput, "modulus >= 1");
  std::vector<int> class_of(modulus, -1);
  class_of[0] = 0;
  for (size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].empty()) {
      throw SchemeError(ErrorCode::PartitionNotValid, "empty class");
    }
    for (int v : classes[i]) {
      int w = ((v % modulus) + modulus) % modulus;
      if (w == 0) {
        throw SchemeError(ErrorCode::PartitionNotValid,
                          "0 may not appear in a class");
      }
      if (class_of[w] != -1) {
        throw SchemeError(ErrorCode::PartitionNotValid,
                          "residue " + std::to_string(w) +
                              " covered twice or clashes with 0");
      }
      class_of[w] = static_cast<int>(i) + 1;
    }
  }
  for (int v = 1; v < modulus; ++v) {
    if (class_of[v] < 0) {
      throw SchemeError(ErrorCode::PartitionNotValid,
                        "residue " + std::to_string(v) + " not covered");
    }
  }
  // Negation must map classes onto classes, otherwise transpose closure
  // breaks before we ever build the matrix.
  for (int v = 1; v < modulus; ++v) {
    int w = (modulus - v) % modulus;
    int iv = class_of[v];
    for (int u = 1; u < modulus; ++u) {
      if (class_of[u] == iv && class_of[(modulus - u) % modulus] != class_of[w]) {
        throw SchemeError(ErrorCode::PartitionNotValid,
                          "negation does not map the class of " +
                              std::to_string(v) + " onto a single class");
      }
    }
  }
  IntMatrix m(modulus);
  for (int x = 0; x < modulus; ++x) {
    for (int y = 0; y < modulus; ++y) {
      m.at(x, y) = class_of[((y - x) % modulus + modulus) % modulus];
    }
  }
  return as_scheme(build_from_color_matrix(m));
}

SchemeHandle catalog_scheme(const std::string& name) {
  if (name == "trivial") return trivial_scheme();
  if (name == "z2") return cayley_scheme(2, {{1}});
  if (name == "z4") return cayley_scheme(4, {{1}, {2}, {3}});
  if (name == "k4") return one_class_scheme(4);
  if (name == "z7") return cayley_scheme(7, {{1, 2, 4}, {3, 5, 6}});
  if (name == "z13") {
    return cayley_scheme(13, {{1, 3, 9}, {2, 6, 5}, {4, 12, 10}, {7, 8, 11}});
  }
  throw SchemeError(ErrorCode::BadInput, "unknown catalog scheme " + name);
}

}  // namespace schemes
