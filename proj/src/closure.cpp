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

#include "schemes/closure.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace schemes {

namespace {

ClosureResult run_closure(const IntMatrix& init) {
  const int n = init.n;
  for (int v : init.a) {
    if (v < 0) {
      throw SchemeError(ErrorCode::NotAPartition, "negative color entry");
    }
  }

  // Seed round: split by (c(x,y), c(y,x), diagonal flag).
  IntMatrix cur(n);
  int cur_rank = 0;
  {
    std::map<std::tuple<int, int, bool>, int> ids;
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        auto key = std::make_tuple(init.at(x, y), init.at(y, x), x == y);
        auto [it, inserted] = ids.emplace(key, cur_rank);
        if (inserted) ++cur_rank;
        cur.at(x, y) = it->second;
      }
    }
  }

  // Refinement rounds. Signatures are exact sorted encodings, no hashing.
  std::vector<std::int64_t> sig;
  sig.reserve(n + 1);
  while (true) {
    std::map<std::vector<std::int64_t>, int> ids;
    IntMatrix next(n);
    int next_rank = 0;
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        sig.clear();
        for (int z = 0; z < n; ++z) {
          sig.push_back(static_cast<std::int64_t>(cur.at(x, z)) * cur_rank +
                        cur.at(z, y));
        }
        std::sort(sig.begin(), sig.end());
        sig.push_back(cur.at(x, y));
        auto [it, inserted] = ids.emplace(sig, next_rank);
        if (inserted) ++next_rank;
        next.at(x, y) = it->second;
      }
    }
    if (next_rank == cur_rank) break;
    cur = std::move(next);
    cur_rank = next_rank;
  }

  ClosureResult out;
  std::vector<int> renumber;
  out.cc = build_from_color_matrix(cur, {}, &renumber);
  out.parent_color.assign(out.cc.rank, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      out.parent_color[renumber[cur.at(x, y)]] = init.at(x, y);
    }
  }
  return out;
}

}  // namespace

ClosureResult coherent_closure(const IntMatrix& init) {
  if (init.n < 1) throw SchemeError(ErrorCode::BadInput, "empty point set");
  return run_closure(init);
}

ClosureResult one_point_extension(const SchemeHandle& scheme, int x0) {
  if (x0 < 0 || x0 >= scheme.n()) {
    throw SchemeError(ErrorCode::BadInput, "base point out of range");
  }
  IntMatrix init = scheme.cc.colors;
  const int fresh = scheme.rank();
  init.at(x0, x0) = fresh;
  ClosureResult out = run_closure(init);
  // The split cell refines the identity class.
  for (int& p : out.parent_color) {
    if (p == fresh) p = scheme.identity_color;
  }
  return out;
}

}  // namespace schemes
