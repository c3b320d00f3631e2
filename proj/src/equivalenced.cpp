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

#include "schemes/equivalenced.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace schemes {

bool is_k_equivalenced(const SchemeHandle& scheme, std::int64_t k) {
  if (scheme.n() <= 1) {
    throw SchemeError(ErrorCode::TooFewPoints,
                      "k-equivalenced needs more than one point");
  }
  for (int s = 0; s < scheme.rank(); ++s) {
    if (s != scheme.identity_color && scheme.valencies[s] != k) return false;
  }
  return true;
}

const char* pattern_name(ProductPattern p) {
  switch (p) {
    case ProductPattern::ThreeDistinct: return "three_distinct";
    case ProductPattern::OnePlusTwo: return "one_plus_two";
    case ProductPattern::ConjugatePair: return "conjugate_pair";
    case ProductPattern::SelfPaired: return "self_paired";
  }
  return "?";
}

ProductPattern ProductPatternReport::at(int u, int v) const {
  for (const auto& e : cases) {
    if (e.u == u && e.v == v) return e.pattern;
  }
  throw SchemeError(ErrorCode::InvalidColor, "pair not in report");
}

namespace {

std::string coeff_str(const std::vector<std::pair<int, std::int64_t>>& cs) {
  std::ostringstream os;
  for (const auto& [w, p] : cs) os << " " << p << "*s" << w;
  return os.str();
}

}  // namespace

ProductPatternReport verify_product_patterns(const SchemeHandle& scheme) {
  if (!is_k_equivalenced(scheme, 3)) {
    throw SchemeError(ErrorCode::PatternViolation, "scheme is not 3-equivalenced");
  }
  const int id = scheme.identity_color;
  ProductPatternReport rep;
  for (int u = 0; u < scheme.rank(); ++u) {
    if (u == id) continue;
    for (int v = 0; v < scheme.rank(); ++v) {
      if (v == id) continue;
      std::vector<std::pair<int, std::int64_t>> nontrivial;
      std::int64_t id_coeff = 0;
      for (int w = 0; w < scheme.rank(); ++w) {
        std::int64_t p = scheme.cc.tensor.at(u, v, w);
        if (p == 0) continue;
        if (w == id) {
          id_coeff = p;
        } else {
          nontrivial.emplace_back(w, p);
        }
      }
      const bool adjoint_pair = (v == scheme.dual(u));
      ProductPattern pat;
      bool ok = false;
      if (!adjoint_pair && id_coeff == 0) {
        if (nontrivial.size() == 3 && nontrivial[0].second == 1 &&
            nontrivial[1].second == 1 && nontrivial[2].second == 1) {
          pat = ProductPattern::ThreeDistinct;
          ok = true;
        } else if (nontrivial.size() == 2) {
          auto coeffs = std::minmax(nontrivial[0].second, nontrivial[1].second);
          if (coeffs.first == 1 && coeffs.second == 2) {
            pat = ProductPattern::OnePlusTwo;
            ok = true;
          }
        }
      } else if (adjoint_pair && id_coeff == 3) {
        if (nontrivial.size() == 2 && nontrivial[0].second == 1 &&
            nontrivial[1].second == 1 &&
            scheme.dual(nontrivial[0].first) == nontrivial[1].first &&
            nontrivial[0].first != nontrivial[1].first) {
          pat = ProductPattern::ConjugatePair;
          ok = true;
        } else if (nontrivial.size() == 1 && nontrivial[0].second == 2 &&
                   nontrivial[0].first == u && scheme.dual(u) == u) {
          pat = ProductPattern::SelfPaired;
          ok = true;
        }
      }
      if (!ok) {
        std::vector<std::pair<int, std::int64_t>> all = nontrivial;
        if (id_coeff) all.emplace_back(id, id_coeff);
        throw SchemeError(ErrorCode::PatternViolation,
                          "sigma_" + std::to_string(u) + " * sigma_" +
                              std::to_string(v) + " =" + coeff_str(all) +
                              " matches no case");
      }
      rep.cases.push_back({u, v, pat});
    }
  }
  return rep;
}

namespace {

std::vector<int> neighborhood(const SchemeHandle& scheme, int y0, int t) {
  std::vector<int> pts;
  for (int y = 0; y < scheme.n(); ++y) {
    if (scheme.cc.colors.at(y0, y) == t) pts.push_back(y);
  }
  return pts;
}

// The three admissible 3x3 permutation patterns: identity, the 3-cycle C
// with C[k][k+1 mod 3] = 1, and its inverse.
int pattern_of_block(const std::array<std::array<int, 3>, 3>& block) {
  for (int shift = 0; shift < 3; ++shift) {
    bool match = true;
    for (int k = 0; k < 3 && match; ++k) {
      for (int l = 0; l < 3 && match; ++l) {
        match = block[k][l] == (l == (k + shift) % 3 ? 1 : 0);
      }
    }
    if (match) return shift;
  }
  return -1;
}

}  // namespace

FullBlockResult exists_full_block(const SchemeHandle& scheme, int y0, int u,
                                  int v) {
  const int id = scheme.identity_color;
  if (u == id || v == id || u >= scheme.rank() || v >= scheme.rank() ||
      u < 0 || v < 0) {
    throw SchemeError(ErrorCode::InvalidColor, "u, v must be nontrivial colors");
  }
  std::vector<int> rows = neighborhood(scheme, y0, u);
  std::vector<int> cols = neighborhood(scheme, y0, v);
  if (rows.size() != 3 || cols.size() != 3) {
    throw SchemeError(ErrorCode::BadInput, "neighborhoods must have size 3");
  }
  for (int t = 0; t < scheme.rank(); ++t) {
    FullBlockResult res;
    res.color = t;
    int total = 0;
    bool rows_ok = true;
    for (int k = 0; k < 3; ++k) {
      int row_count = 0;
      for (int l = 0; l < 3; ++l) {
        res.block[k][l] = scheme.cc.colors.at(rows[k], cols[l]) == t ? 1 : 0;
        row_count += res.block[k][l];
      }
      total += row_count;
      rows_ok = rows_ok && row_count == 1;
    }
    if (total == 3 && rows_ok) return res;
  }
  throw SchemeError(ErrorCode::NoneFound,
                    "no color meets y0*" + std::to_string(u) + " x y0*" +
                        std::to_string(v) + " in a full block");
}

WellOrderedExtension well_order(const SchemeHandle& scheme, int y0) {
  if (y0 < 0 || y0 >= scheme.n()) {
    throw SchemeError(ErrorCode::BadInput, "base point out of range");
  }
  if (!is_k_equivalenced(scheme, 3) || scheme.rank() <= 2) {
    throw SchemeError(ErrorCode::BadInput,
                      "well_order needs a 3-equivalenced scheme with |T| > 2");
  }

  WellOrderedExtension wo;
  wo.scheme = scheme;
  wo.y0 = y0;
  for (int t = 0; t < scheme.rank(); ++t) {
    if (t != scheme.identity_color) wo.chain.push_back(t);
  }
  wo.triple.assign(scheme.rank(), {-1, -1, -1});

  {
    std::vector<int> first = neighborhood(scheme, y0, wo.chain[0]);
    std::copy(first.begin(), first.end(), wo.triple[wo.chain[0]].begin());
  }
  for (size_t i = 0; i + 1 < wo.chain.size(); ++i) {
    const auto& cur = wo.triple[wo.chain[i]];
    std::vector<int> nxt = neighborhood(scheme, y0, wo.chain[i + 1]);
    bool found = false;
    for (int t = 0; t < scheme.rank() && !found; ++t) {
      if (t == scheme.identity_color) continue;
      std::array<int, 3> ordered{-1, -1, -1};
      int total = 0;
      bool perm = true;
      for (int k = 0; k < 3 && perm; ++k) {
        int row_count = 0;
        for (int b : nxt) {
          if (scheme.cc.colors.at(cur[k], b) == t) {
            ordered[k] = b;
            ++row_count;
          }
        }
        total += row_count;
        perm = row_count == 1;
      }
      if (perm && total == 3) {
        wo.triple[wo.chain[i + 1]] = ordered;
        wo.chain_color.push_back(t);
        found = true;
      }
    }
    if (!found) {
      throw SchemeError(ErrorCode::WellOrderingFailed,
                        "no full permutation block between y0*" +
                            std::to_string(wo.chain[i]) + " and y0*" +
                            std::to_string(wo.chain[i + 1]));
    }
  }

  // Relabel so ascending point order realizes the chosen triples.
  wo.permutation.resize(scheme.n());
  std::iota(wo.permutation.begin(), wo.permutation.end(), 0);
  for (int t : wo.chain) {
    std::vector<int> sorted_pts = neighborhood(scheme, y0, t);
    for (int k = 0; k < 3; ++k) wo.permutation[wo.triple[t][k]] = sorted_pts[k];
  }
  wo.relabeled = as_scheme(apply_point_permutation(scheme.cc, wo.permutation));
  wo.extension = one_point_extension(wo.relabeled, y0);

  // Exhaustive verification on the relabeled extension.
  const CoherentConfiguration& ext = wo.extension.cc;
  for (int t : wo.chain) {
    std::vector<int> pts = neighborhood(wo.relabeled, y0, t);
    int c0 = ext.colors.at(y0, pts[0]);
    for (int b : pts) {
      if (ext.colors.at(y0, b) != c0) {
        throw SchemeError(ErrorCode::WellOrderingFailed,
                          "neighborhood y0*" + std::to_string(t) +
                              " splits into several extension relations");
      }
    }
  }
  for (int tu : wo.chain) {
    std::vector<int> rows = neighborhood(wo.relabeled, y0, tu);
    for (int tv : wo.chain) {
      std::vector<int> cols = neighborhood(wo.relabeled, y0, tv);
      std::vector<char> seen(ext.rank, 0);
      for (int k = 0; k < 3; ++k) {
        for (int l = 0; l < 3; ++l) {
          seen[ext.colors.at(rows[k], cols[l])] = 1;
        }
      }
      for (int c = 0; c < ext.rank; ++c) {
        if (!seen[c]) continue;
        std::array<std::array<int, 3>, 3> block{};
        for (int k = 0; k < 3; ++k) {
          for (int l = 0; l < 3; ++l) {
            block[k][l] = ext.colors.at(rows[k], cols[l]) == c ? 1 : 0;
          }
        }
        if (pattern_of_block(block) < 0) {
          std::ostringstream os;
          os << "extension relation " << c << " on y0*" << tu << " x y0*"
             << tv << " is not a power of the 3-cycle:";
          for (int k = 0; k < 3; ++k) {
            os << " [" << block[k][0] << block[k][1] << block[k][2] << "]";
          }
          throw SchemeError(ErrorCode::WellOrderingFailed, os.str());
        }
      }
    }
  }
  // Consecutive chain blocks: exactly one extension relation restricts to
  // the identity pattern (distinct relations are disjoint, so more than one
  // would mean the input was not coherent).
  for (size_t i = 0; i + 1 < wo.chain.size(); ++i) {
    std::vector<int> rows = neighborhood(wo.relabeled, y0, wo.chain[i]);
    std::vector<int> cols = neighborhood(wo.relabeled, y0, wo.chain[i + 1]);
    int identity_blocks = 0;
    std::vector<char> counted(ext.rank, 0);
    for (int c = 0; c < ext.rank; ++c) {
      std::array<std::array<int, 3>, 3> block{};
      bool nonempty = false;
      for (int k = 0; k < 3; ++k) {
        for (int l = 0; l < 3; ++l) {
          block[k][l] = ext.colors.at(rows[k], cols[l]) == c ? 1 : 0;
          nonempty = nonempty || block[k][l];
        }
      }
      if (nonempty && pattern_of_block(block) == 0) ++identity_blocks;
    }
    if (identity_blocks != 1) {
      throw SchemeError(ErrorCode::WellOrderingFailed,
                        std::to_string(identity_blocks) +
                            " identity blocks between consecutive chain "
                            "neighborhoods (expected exactly 1)");
    }
  }
  return wo;
}

}  // namespace schemes
