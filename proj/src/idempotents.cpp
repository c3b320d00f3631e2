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

#include "schemes/idempotents.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "schemes/json_io.hpp"

namespace schemes {

namespace {

constexpr std::complex<double> omega_root() {
  return {-0.5, 0.8660254037844386467637231707529362};  // exp(2*pi*i/3)
}

std::vector<int> neighborhood(const SchemeHandle& scheme, int y0, int t) {
  std::vector<int> pts;
  for (int y = 0; y < scheme.n(); ++y) {
    if (scheme.cc.colors.at(y0, y) == t) pts.push_back(y);
  }
  return pts;
}

std::vector<int> t3_colors(const SchemeHandle& t) {
  std::vector<int> out;
  for (int c = 0; c < t.rank(); ++c) {
    if (c != t.identity_color) out.push_back(c);
  }
  return out;
}

// Numeric CPIs of an algebra with the trivial one removed, matched against
// its closed form.
std::vector<CMatrix> nontrivial_idempotents(const MatrixAlgebra& alg,
                                            const CMatrix& trivial,
                                            std::uint64_t seed,
                                            const Tolerances& tol,
                                            const char* what) {
  std::vector<IdempotentCertificate> all =
      central_primitive_idempotents(alg, seed, tol);
  std::vector<CMatrix> out;
  int dropped = 0;
  for (auto& cert : all) {
    if ((cert.element - trivial).norm() < tol.match) {
      ++dropped;
    } else {
      out.push_back(std::move(cert.element));
    }
  }
  if (dropped != 1) {
    throw SchemeError(ErrorCode::ExtractionUnstable,
                      std::string(what) + ": trivial idempotent matched " +
                          std::to_string(dropped) + " extracted elements");
  }
  return out;
}

}  // namespace

EpsilonTriple epsilon_patterns(int ny, const std::array<int, 3>& row_triple,
                               const std::array<int, 3>& col_triple) {
  EpsilonTriple e{CMatrix::Zero(ny, ny), CMatrix::Zero(ny, ny),
                  CMatrix::Zero(ny, ny)};
  for (int k = 0; k < 3; ++k) {
    e.plain(row_triple[k], col_triple[k]) = 1.0;
    e.over(row_triple[k], col_triple[(k + 1) % 3]) = 1.0;
    e.under(row_triple[k], col_triple[(k + 2) % 3]) = 1.0;
  }
  return e;
}

CMatrix g_matrix(const WreathScheme& w, const WellOrderedExtension& wo, int t,
                 int t_prime, OmegaVariant variant) {
  const auto& rt = wo.triple.at(t);
  const auto& ct = wo.triple.at(t_prime);
  if (rt[0] < 0 || ct[0] < 0) {
    throw SchemeError(ErrorCode::InvalidColor,
                      "color without a well-ordered triple");
  }
  EpsilonTriple e = epsilon_patterns(w.ny(), rt, ct);
  const std::complex<double> om = omega_root();
  const std::complex<double> a = variant == OmegaVariant::Omega ? om : om * om;
  const std::complex<double> b = variant == OmegaVariant::Omega ? om * om : om;
  CMatrix pattern = e.plain + a * e.over + b * e.under;
  return kron(ones_matrix(w.nx()), pattern) / (3.0 * w.nx());
}

std::pair<CMatrix, CMatrix> eta_idempotents(const WreathScheme& w,
                                            const WellOrderedExtension& wo) {
  const int n = w.product.n();
  CMatrix e1 = CMatrix::Zero(n, n), e2 = CMatrix::Zero(n, n);
  for (int t : wo.chain) {
    e1 += g_matrix(w, wo, t, t, OmegaVariant::Omega);
    e2 += g_matrix(w, wo, t, t, OmegaVariant::OmegaSquared);
  }
  return {std::move(e1), std::move(e2)};
}

std::vector<CMatrix> tilde_idempotents(const WreathScheme& w, int x0, int y0,
                                       std::uint64_t seed,
                                       const Tolerances& tol) {
  TerwilligerContext ctx = terwilliger_algebra(w.factor_x, x0, tol);
  std::vector<CMatrix> chis =
      nontrivial_idempotents(ctx.algebra, trivial_idempotent(w.factor_x, x0),
                             seed, tol, "T(X,S,x0)");
  CMatrix eps_y0 = epsilon_diag(w.ny(), {y0});
  std::vector<CMatrix> out;
  out.reserve(chis.size());
  for (const CMatrix& e : chis) out.push_back(kron(e, eps_y0));
  return out;
}

std::vector<std::pair<int, CMatrix>> hat_idempotents(const WreathScheme& w,
                                                     int y0,
                                                     std::uint64_t seed,
                                                     const Tolerances& tol) {
  const int nx = w.nx();
  std::vector<CMatrix> gens;
  for (int s = 0; s < w.factor_x.rank(); ++s) {
    gens.push_back(adjacency_matrix(w.factor_x.cc, s));
  }
  MatrixAlgebra adj = generate_algebra(gens, /*include_identity=*/true, tol);
  CMatrix trivial = ones_matrix(nx) / static_cast<double>(nx);
  std::vector<CMatrix> psis =
      nontrivial_idempotents(adj, trivial, seed, tol, "A(S)");

  std::vector<std::pair<int, CMatrix>> out;
  for (int t : t3_colors(w.factor_y)) {
    CMatrix eps_t = epsilon_diag(w.ny(), neighborhood(w.factor_y, y0, t));
    for (const CMatrix& e : psis) out.emplace_back(t, kron(e, eps_t));
  }
  return out;
}

IdealStructureReport verify_ideal_structure(const WreathScheme& w,
                                            const WellOrderedExtension& wo,
                                            int x0,
                                            const Tolerances& tol,
                                            const MatrixAlgebra* prebuilt) {
  const std::vector<int> t3 = t3_colors(w.factor_y);
  const int m = static_cast<int>(t3.size());
  IdealStructureReport rep;
  rep.t3_size = m;
  MatrixAlgebra built;
  if (!prebuilt) {
    built = terwilliger_algebra(w.product, w.point(x0, wo.y0), tol).algebra;
    prebuilt = &built;
  }
  const MatrixAlgebra& big = *prebuilt;

  for (int variant = 0; variant < 2; ++variant) {
    const OmegaVariant v =
        variant == 0 ? OmegaVariant::Omega : OmegaVariant::OmegaSquared;
    std::vector<std::vector<CMatrix>> g(m, std::vector<CMatrix>());
    std::vector<CMatrix> flat;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        g[i].push_back(g_matrix(w, wo, t3[i], t3[j], v));
        flat.push_back(g[i].back());
      }
    }
    std::vector<CMatrix> span = orthonormal_span(flat, tol.span_pivot);
    (variant == 0 ? rep.family_dim : rep.family_dim_prime) =
        static_cast<int>(span.size());

    // Matrix-unit multiplication rule.
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        for (int k = 0; k < m; ++k) {
          for (int l = 0; l < m; ++l) {
            CMatrix expected = (j == k) ? g[i][l]
                                        : CMatrix::Zero(w.product.n(),
                                                        w.product.n());
            rep.mult_table_residual =
                std::max(rep.mult_table_residual,
                         (g[i][j] * g[k][l] - expected).norm());
          }
        }
      }
    }

    // Ideal property: the generator action stays inside the span.
    for (size_t gi = 0; gi < big.generators.size(); ++gi) {
      const CMatrix& gen = big.generators[gi];
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          for (const CMatrix& prod : {CMatrix(gen * g[i][j]),
                                      CMatrix(g[i][j] * gen)}) {
            double r = in_span_residual(span, prod);
            rep.closure_residual = std::max(rep.closure_residual, r);
            if (r > tol.cert) {
              std::ostringstream os;
              os << "generator " << gi << " times G[" << t3[i] << "][" << t3[j]
                 << "] (variant " << variant << ") escapes the span, residual "
                 << r;
              throw SchemeError(ErrorCode::IdealViolation, os.str());
            }
          }
        }
      }
    }
  }

  // The two ideals annihilate each other.
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      CMatrix a = g_matrix(w, wo, t3[i], t3[j], OmegaVariant::Omega);
      for (int k = 0; k < m; ++k) {
        for (int l = 0; l < m; ++l) {
          CMatrix b = g_matrix(w, wo, t3[k], t3[l], OmegaVariant::OmegaSquared);
          rep.cross_residual =
              std::max({rep.cross_residual, (a * b).norm(), (b * a).norm()});
        }
      }
    }
  }
  if (rep.mult_table_residual > tol.cert || rep.cross_residual > tol.cert) {
    throw SchemeError(ErrorCode::IdealViolation,
                      "matrix-unit rule violated: table residual " +
                          std::to_string(rep.mult_table_residual) +
                          ", cross residual " +
                          std::to_string(rep.cross_residual));
  }
  return rep;
}

DecompositionReport theorem_decomposition(const SchemeHandle& s,
                                          const SchemeHandle& t, int x0,
                                          int y0, std::uint64_t seed,
                                          const Tolerances& tol) {
  if (!is_k_equivalenced(t, 3)) {
    throw SchemeError(ErrorCode::BadInput,
                      "the Y-factor must be 3-equivalenced");
  }
  if (x0 < 0 || x0 >= s.n() || y0 < 0 || y0 >= t.n()) {
    throw SchemeError(ErrorCode::BadInput, "base point out of range");
  }

  DecompositionReport rep;
  rep.seed = seed;
  rep.x0 = x0;
  rep.y0 = y0;
  rep.tol_cert = tol.cert;
  rep.tol_match = tol.match;
  rep.nx = s.n();
  rep.ny = t.n();
  rep.theorem_case = t.rank() == 2 ? 1 : 2;
  rep.t3_size = t.rank() - 1;

  WreathScheme w = wreath_product(s, t);
  const int n = w.product.n();
  const int z0 = w.point(x0, y0);
  TerwilligerContext big = terwilliger_algebra(w.product, z0, tol);
  std::vector<CMatrix> center = algebra_center(big.algebra);
  rep.center_dim = static_cast<int>(center.size());

  // Families.
  std::vector<std::pair<std::string, CMatrix>> family;
  family.emplace_back("trivial", trivial_idempotent(w.product, z0));
  for (CMatrix& e : tilde_idempotents(w, x0, y0, seed, tol)) {
    family.emplace_back("tilde", std::move(e));
    ++rep.tilde_count;
  }
  for (auto& [tc, e] : hat_idempotents(w, y0, seed, tol)) {
    family.emplace_back("hat:" + std::to_string(tc), std::move(e));
    ++rep.hat_count;
  }
  if (rep.theorem_case == 2) {
    WellOrderedExtension wo = well_order(t, y0);
    auto [e1, e2] = eta_idempotents(w, wo);
    family.emplace_back("eta1", std::move(e1));
    family.emplace_back("eta2", std::move(e2));
    rep.eta_count = 2;
  }
  rep.constructed_count = static_cast<int>(family.size());
  rep.formula_count = 1 + rep.tilde_count + rep.hat_count +
                      (rep.theorem_case == 2 ? 2 : 0);

  // Certification.
  for (auto& [label, e] : family) {
    rep.constructed.push_back(
        certify_idempotent(big.algebra, center, e, label, tol));
    const IdempotentCertificate& c = rep.constructed.back();
    rep.max_idempotency_residual =
        std::max(rep.max_idempotency_residual, c.idempotency_residual);
    rep.max_centrality_residual =
        std::max(rep.max_centrality_residual, c.centrality_residual);
    rep.max_span_residual = std::max(rep.max_span_residual, c.span_residual);
    if (!c.certified(tol)) {
      rep.diagnostics.push_back("constructed idempotent '" + label +
                                "' failed certification");
    }
  }
  rep.certs_ok = std::all_of(
      rep.constructed.begin(), rep.constructed.end(),
      [&](const IdempotentCertificate& c) { return c.certified(tol); });

  // Pairwise orthogonality and the sum identity.
  CMatrix sum = CMatrix::Zero(n, n);
  for (const auto& [label, e] : family) sum += e;
  rep.sum_residual = (sum - CMatrix::Identity(n, n)).norm();
  rep.sum_ok = rep.sum_residual < tol.cert;
  if (!rep.sum_ok) {
    rep.diagnostics.push_back("sum of constructed idempotents differs from "
                              "the identity by " +
                              std::to_string(rep.sum_residual));
  }
  for (size_t i = 0; i < family.size(); ++i) {
    for (size_t j = 0; j < family.size(); ++j) {
      if (i == j) continue;
      rep.max_pairwise_residual =
          std::max(rep.max_pairwise_residual,
                   (family[i].second * family[j].second).norm());
    }
  }
  rep.pairwise_ok = rep.max_pairwise_residual < tol.cert;

  // Numeric extraction and one-to-one matching.
  std::vector<IdempotentCertificate> numeric =
      central_primitive_idempotents(big.algebra, seed, tol);
  rep.numeric_count = static_cast<int>(numeric.size());
  rep.numeric_to_constructed.assign(numeric.size(), -1);
  std::vector<char> used(family.size(), 0);
  for (size_t i = 0; i < numeric.size(); ++i) {
    for (size_t j = 0; j < family.size(); ++j) {
      if (used[j]) continue;
      double d = (numeric[i].element - family[j].second).norm();
      if (d < tol.match) {
        rep.numeric_to_constructed[i] = static_cast<int>(j);
        rep.match_max_distance = std::max(rep.match_max_distance, d);
        used[j] = 1;
        break;
      }
    }
    if (rep.numeric_to_constructed[i] < 0) {
      rep.diagnostics.push_back(
          "numeric idempotent " + std::to_string(i) + " (rank " +
          std::to_string(static_cast<int>(
              std::lround(numeric[i].element.trace().real()))) +
          ") matches no constructed idempotent");
    }
  }
  rep.matched_bijectively =
      std::all_of(rep.numeric_to_constructed.begin(),
                  rep.numeric_to_constructed.end(),
                  [](int v) { return v >= 0; }) &&
      rep.numeric_count == rep.constructed_count;

  rep.count_formula_ok = rep.constructed_count == rep.formula_count;
  rep.count_center_ok = rep.constructed_count == rep.center_dim;
  if (!rep.count_center_ok) {
    rep.diagnostics.push_back(
        "constructed count " + std::to_string(rep.constructed_count) +
        " != center dimension " + std::to_string(rep.center_dim));
  }
  rep.pass = rep.certs_ok && rep.sum_ok && rep.pairwise_ok &&
             rep.count_formula_ok && rep.count_center_ok &&
             rep.matched_bijectively;
  return rep;
}

nlohmann::json decomposition_report_to_json(const DecompositionReport& rep) {
  nlohmann::json certs = nlohmann::json::array();
  for (const auto& c : rep.constructed) {
    certs.push_back({
        {"provenance", c.provenance},
        {"idempotency_residual", canonical_round(c.idempotency_residual)},
        {"centrality_residual", canonical_round(c.centrality_residual)},
        {"span_residual", canonical_round(c.span_residual)},
        {"central_component_dim", c.central_component_dim},
        {"rank", static_cast<int>(std::lround(c.element.trace().real()))},
    });
  }
  return nlohmann::json{
      {"schema_version", rep.schema_version},
      {"s", rep.s_label},
      {"t", rep.t_label},
      {"x0", rep.x0},
      {"y0", rep.y0},
      {"seed", rep.seed},
      {"tolerance", canonical_round(rep.tol_cert)},
      {"match_tolerance", canonical_round(rep.tol_match)},
      {"nx", rep.nx},
      {"ny", rep.ny},
      {"theorem_case", rep.theorem_case},
      {"t3_size", rep.t3_size},
      {"idempotents", certs},
      {"counts",
       {{"constructed", rep.constructed_count},
        {"tilde", rep.tilde_count},
        {"hat", rep.hat_count},
        {"eta", rep.eta_count},
        {"formula", rep.formula_count},
        {"center_dim", rep.center_dim},
        {"numeric", rep.numeric_count}}},
      {"residuals",
       {{"sum", canonical_round(rep.sum_residual)},
        {"max_pairwise", canonical_round(rep.max_pairwise_residual)},
        {"max_idempotency", canonical_round(rep.max_idempotency_residual)},
        {"max_centrality", canonical_round(rep.max_centrality_residual)},
        {"max_span", canonical_round(rep.max_span_residual)},
        {"match_max_distance", canonical_round(rep.match_max_distance)}}},
      {"numeric_to_constructed", rep.numeric_to_constructed},
      {"checks",
       {{"certificates", rep.certs_ok},
        {"sum_identity", rep.sum_ok},
        {"pairwise_orthogonal", rep.pairwise_ok},
        {"count_formula", rep.count_formula_ok},
        {"count_center", rep.count_center_ok},
        {"numeric_match", rep.matched_bijectively}}},
      {"diagnostics", rep.diagnostics},
      {"pass", rep.pass},
  };
}

}  // namespace schemes
