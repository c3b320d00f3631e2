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

// Test-only reference implementations, kept structurally independent of the
// library code they check.

#ifndef SCHEMES_TESTS_ORACLES_HPP
#define SCHEMES_TESTS_ORACLES_HPP

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "schemes/int_matrix.hpp"
#include "schemes/matrix_algebra.hpp"

namespace oracles {

// Number of z with colors(x,z) = s and colors(z,y) = t, by direct scan.
inline long brute_pair_count(const schemes::IntMatrix& colors, int s, int t,
                             int x, int y) {
  long count = 0;
  for (int z = 0; z < colors.n; ++z) {
    if (colors.at(x, z) == s && colors.at(z, y) == t) ++count;
  }
  return count;
}

// Row sum of the 0/1 adjacency matrix of a color.
inline long brute_row_sum(const schemes::IntMatrix& colors, int s, int x) {
  long count = 0;
  for (int y = 0; y < colors.n; ++y) {
    if (colors.at(x, y) == s) ++count;
  }
  return count;
}

// Relabels a color matrix by first occurrence in row-major order, so two
// matrices describe the same partition of X x X iff the relabelings agree.
inline schemes::IntMatrix canonical_partition(const schemes::IntMatrix& m) {
  std::map<int, int> ids;
  schemes::IntMatrix out(m.n);
  for (int x = 0; x < m.n; ++x) {
    for (int y = 0; y < m.n; ++y) {
      auto [it, fresh] = ids.emplace(m.at(x, y), static_cast<int>(ids.size()));
      out.at(x, y) = it->second;
    }
  }
  return out;
}

inline bool same_partition(const schemes::IntMatrix& a,
                           const schemes::IntMatrix& b) {
  return canonical_partition(a) == canonical_partition(b);
}

// True iff every class of `fine` is contained in one class of `coarse`.
inline bool refines(const schemes::IntMatrix& fine,
                    const schemes::IntMatrix& coarse) {
  if (fine.n != coarse.n) return false;
  std::map<int, int> parent;
  for (int x = 0; x < fine.n; ++x) {
    for (int y = 0; y < fine.n; ++y) {
      auto [it, fresh] = parent.emplace(fine.at(x, y), coarse.at(x, y));
      if (it->second != coarse.at(x, y)) return false;
    }
  }
  return true;
}

// Reference pairwise stabilizer. Deliberately written with string
// signatures and maps rather than the library's packed-integer encoding.
inline schemes::IntMatrix ref_coherent_closure(const schemes::IntMatrix& init) {
  const int n = init.n;
  auto relabel = [n](const std::vector<std::string>& sig) {
    std::map<std::string, int> ids;
    schemes::IntMatrix out(n);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        auto [it, fresh] =
            ids.emplace(sig[x * n + y], static_cast<int>(ids.size()));
        out.at(x, y) = it->second;
      }
    }
    return out;
  };

  std::vector<std::string> seed(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      std::ostringstream os;
      os << init.at(x, y) << "/" << init.at(y, x) << "/" << (x == y);
      seed[x * n + y] = os.str();
    }
  }
  schemes::IntMatrix cur = relabel(seed);

  while (true) {
    std::vector<std::string> sig(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        std::vector<std::pair<int, int>> walk;
        for (int z = 0; z < n; ++z) {
          walk.emplace_back(cur.at(x, z), cur.at(z, y));
        }
        std::sort(walk.begin(), walk.end());
        std::ostringstream os;
        os << cur.at(x, y) << "#";
        for (const auto& [a, b] : walk) os << a << "," << b << ";";
        sig[x * n + y] = os.str();
      }
    }
    schemes::IntMatrix next = relabel(sig);
    if (next == cur) return cur;
    cur = next;
  }
}

// Rank of the span of matrices via singular values of the stacked
// vectorizations. Independent of the library's Gram-Schmidt path.
inline int span_rank(const std::vector<schemes::CMatrix>& mats,
                     double cutoff = 1e-10) {
  if (mats.empty()) return 0;
  const Eigen::Index nn = mats[0].size();
  Eigen::MatrixXcd stacked(mats.size(), nn);
  for (size_t k = 0; k < mats.size(); ++k) {
    stacked.row(k) =
        Eigen::Map<const Eigen::VectorXcd>(mats[k].data(), nn);
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stacked);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv(k) > cutoff * std::max(1.0, sv(0))) ++rank;
  }
  return rank;
}

// Coefficients of sigma_u sigma_v for a Z_n translation scheme, computed
// from the class lists alone: the multiset of sums a+b mod n.
inline std::map<int, long> cayley_product_counts(
    int modulus, const std::vector<int>& class_u,
    const std::vector<int>& class_v) {
  std::map<int, long> counts;
  for (int a : class_u) {
    for (int b : class_v) {
      counts[(a + b) % modulus] += 1;
    }
  }
  return counts;
}

}  // namespace oracles

#endif  // SCHEMES_TESTS_ORACLES_HPP
