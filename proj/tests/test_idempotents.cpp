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
#include "schemes/idempotents.hpp"
#include "schemes/json_io.hpp"

using namespace schemes;

namespace {

struct Setup {
  WreathScheme w;
  WellOrderedExtension wo;
  TerwilligerContext big;
  std::vector<CMatrix> center;
};

Setup make_setup(const std::string& s, const std::string& t, int x0, int y0) {
  Setup su{wreath_product(catalog_scheme(s), catalog_scheme(t)),
           well_order(catalog_scheme(t), y0), {}, {}};
  su.big = terwilliger_algebra(su.w.product, su.w.point(x0, y0));
  su.center = algebra_center(su.big.algebra);
  return su;
}

}  // namespace

TEST_CASE("epsilon patterns partition the block") {
  EpsilonTriple e = epsilon_patterns(7, {1, 2, 4}, {6, 5, 3});
  CMatrix total = e.plain + e.over + e.under;
  for (int r : {1, 2, 4}) {
    for (int c : {6, 5, 3}) {
      CHECK(total(r, c) == 1.0);
    }
  }
  CHECK(total.sum() == std::complex<double>(9.0, 0.0));
  CHECK(e.plain(1, 6) == 1.0);
  CHECK(e.over(1, 5) == 1.0);
  CHECK(e.under(1, 3) == 1.0);
}

TEST_CASE("G matrices multiply like matrix units") {
  Setup su = make_setup("z2", "z7", 0, 0);
  const int t1 = su.wo.chain[0], t2 = su.wo.chain[1];

  CMatrix g11 = g_matrix(su.w, su.wo, t1, t1, OmegaVariant::Omega);
  CMatrix g12 = g_matrix(su.w, su.wo, t1, t2, OmegaVariant::Omega);
  CMatrix g21 = g_matrix(su.w, su.wo, t2, t1, OmegaVariant::Omega);
  CMatrix g22 = g_matrix(su.w, su.wo, t2, t2, OmegaVariant::Omega);

  CHECK((g11 * g11 - g11).norm() < 1e-12);
  CHECK((g12 * g21 - g11).norm() < 1e-12);
  CHECK((g12 * g22 - g12).norm() < 1e-12);
  CHECK((g12 * g12).norm() < 1e-12);  // middle indices differ
  CHECK((g11 * g21).norm() < 1e-12);

  SUBCASE("span has dimension |T_3|^2 and is linearly independent") {
    CHECK(oracles::span_rank({g11, g12, g21, g22}) == 4);
  }
  SUBCASE("the omega-squared family annihilates the omega family") {
    for (int a : {t1, t2}) {
      for (int b : {t1, t2}) {
        CMatrix gp = g_matrix(su.w, su.wo, a, b, OmegaVariant::OmegaSquared);
        CHECK((g11 * gp).norm() < 1e-12);
        CHECK((gp * g12).norm() < 1e-12);
      }
    }
  }
}

TEST_CASE("Lemma 3.5 proof identities") {
  Setup su = make_setup("z2", "z7", 0, 0);
  const int t1 = su.wo.chain[0], t2 = su.wo.chain[1];
  CMatrix g12 = g_matrix(su.w, su.wo, t1, t2, OmegaVariant::Omega);

  SUBCASE("sigma action lands in the column family") {
    std::vector<CMatrix> column = {
        g_matrix(su.w, su.wo, t1, t2, OmegaVariant::Omega),
        g_matrix(su.w, su.wo, t2, t2, OmegaVariant::Omega)};
    std::vector<CMatrix> span = orthonormal_span(column);
    for (int u = 0; u < su.w.product.rank(); ++u) {
      CMatrix prod = adjacency_matrix(su.w.product.cc, u) * g12;
      CHECK(in_span_residual(span, prod) < 1e-9);
    }
  }
  SUBCASE("epsilon action is diagonal") {
    // eps_{z0 u} G_{t,t'} = [u = bar t] G_{t,t'}.
    auto star = point_star_sets(su.w, 0, 0);
    for (const auto& [color, pts] : star) {
      CMatrix eps = epsilon_diag(su.w.product.n(), pts);
      CMatrix prod = eps * g12;
      if (color == su.w.bar_map[t1]) {
        CHECK((prod - g12).norm() < 1e-12);
      } else {
        CHECK(prod.norm() < 1e-12);
      }
    }
  }
}

TEST_CASE("eta idempotents") {
  Setup su = make_setup("z2", "z7", 0, 0);
  auto [e1, e2] = eta_idempotents(su.w, su.wo);

  CHECK((e1 * e1 - e1).norm() < 1e-12);
  CHECK((e2 * e2 - e2).norm() < 1e-12);
  CHECK((e1 * e2).norm() < 1e-12);
  CHECK((e2 * e1).norm() < 1e-12);

  // Rank = |T_3|: one rank-1 diagonal unit per valency-3 color. The
  // eigenvalue-count oracle confirms the trace.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      CMatrix(0.5 * (e1 + e1.adjoint())));
  int rank = 0;
  for (int k = 0; k < es.eigenvalues().size(); ++k) {
    if (es.eigenvalues()(k) > 0.5) ++rank;
  }
  CHECK(rank == 2);
  CHECK(std::abs(e1.trace().real() - 2.0) < 1e-12);

  SUBCASE("certified central primitive in T(S wr T)") {
    for (const CMatrix& e : {e1, e2}) {
      IdempotentCertificate cert =
          certify_idempotent(su.big.algebra, su.center, e, "eta");
      CHECK(cert.certified());
    }
  }
}

TEST_CASE("tilde idempotents") {
  SUBCASE("one-point and thin X-factors give an empty family") {
    WreathScheme w1 = wreath_product(trivial_scheme(), catalog_scheme("z7"));
    CHECK(tilde_idempotents(w1, 0, 0, 1).empty());
    WreathScheme w2 = wreath_product(catalog_scheme("z2"), catalog_scheme("z7"));
    CHECK(tilde_idempotents(w2, 0, 0, 1).empty());
    WreathScheme w4 = wreath_product(catalog_scheme("z4"), catalog_scheme("z7"));
    CHECK(tilde_idempotents(w4, 0, 0, 1).empty());
  }
  SUBCASE("K_4 as X-factor contributes one tilde idempotent") {
    WreathScheme w = wreath_product(catalog_scheme("k4"), catalog_scheme("z7"));
    std::vector<CMatrix> tilde = tilde_idempotents(w, 0, 0, 1);
    REQUIRE(tilde.size() == 1);
    TerwilligerContext big = terwilliger_algebra(w.product, w.point(0, 0));
    auto center = algebra_center(big.algebra);
    IdempotentCertificate cert =
        certify_idempotent(big.algebra, center, tilde[0], "tilde");
    CHECK(cert.certified());
  }
}

TEST_CASE("hat idempotents") {
  SUBCASE("trivial X-factor gives an empty family") {
    WreathScheme w = wreath_product(trivial_scheme(), catalog_scheme("z7"));
    CHECK(hat_idempotents(w, 0, 1).empty());
  }
  SUBCASE("(Z_2, Z_7): one psi and two colors") {
    Setup su = make_setup("z2", "z7", 0, 0);
    auto hats = hat_idempotents(su.w, 0, 1);
    REQUIRE(hats.size() == 2);
    CHECK(hats[0].first == 1);
    CHECK(hats[1].first == 2);
    for (const auto& [t, e] : hats) {
      IdempotentCertificate cert =
          certify_idempotent(su.big.algebra, su.center, e, "hat");
      CHECK(cert.certified());
      // hat e_psi * (eps_{x0 s} (x) eps_{y0}) = 0.
      for (int s = 0; s < su.w.factor_x.rank(); ++s) {
        std::vector<int> pts;
        for (int x = 0; x < su.w.nx(); ++x) {
          if (su.w.factor_x.cc.colors.at(0, x) == s) {
            pts.push_back(su.w.point(x, 0));
          }
        }
        CMatrix eps = epsilon_diag(su.w.product.n(), pts);
        CHECK((e * eps).norm() < 1e-12);
        CHECK((eps * e).norm() < 1e-12);
      }
    }
  }
}

TEST_CASE("ideal structure report") {
  Setup su = make_setup("z2", "z7", 0, 0);
  IdealStructureReport rep =
      verify_ideal_structure(su.w, su.wo, 0, {}, &su.big.algebra);
  CHECK(rep.t3_size == 2);
  CHECK(rep.family_dim == 4);
  CHECK(rep.family_dim_prime == 4);
  CHECK(rep.mult_table_residual < 1e-8);
  CHECK(rep.closure_residual < 1e-8);
  CHECK(rep.cross_residual < 1e-8);
}

TEST_CASE("sum identity for the constructed families") {
  Setup su = make_setup("z4", "z7", 0, 0);
  const int n = su.w.product.n();
  CMatrix sum = trivial_idempotent(su.w.product, su.w.point(0, 0));
  for (const CMatrix& e : tilde_idempotents(su.w, 0, 0, 1)) sum += e;
  for (const auto& [t, e] : hat_idempotents(su.w, 0, 1)) sum += e;
  auto [e1, e2] = eta_idempotents(su.w, su.wo);
  sum += e1 + e2;
  CHECK((sum - CMatrix::Identity(n, n)).norm() < 1e-8);
}

TEST_CASE("theorem decomposition: (Z_2, Z_7) gives exactly five") {
  DecompositionReport rep = theorem_decomposition(
      catalog_scheme("z2"), catalog_scheme("z7"), 0, 0, 1);
  CHECK(rep.pass);
  CHECK(rep.constructed_count == 5);
  CHECK(rep.center_dim == 5);
  CHECK(rep.formula_count == 5);
  CHECK(rep.tilde_count == 0);
  CHECK(rep.hat_count == 2);
  CHECK(rep.eta_count == 2);
  CHECK(rep.theorem_case == 2);
  CHECK(rep.sum_residual < 1e-8);
  CHECK(rep.max_pairwise_residual < 1e-8);
  CHECK(rep.matched_bijectively);
}

TEST_CASE("theorem decomposition is deterministic and seed-stable") {
  SchemeHandle s = catalog_scheme("z2"), t = catalog_scheme("z7");
  DecompositionReport a = theorem_decomposition(s, t, 0, 0, 1);
  DecompositionReport b = theorem_decomposition(s, t, 0, 0, 1);
  CHECK(decomposition_report_to_json(a).dump() ==
        decomposition_report_to_json(b).dump());

  DecompositionReport c = theorem_decomposition(s, t, 0, 0, 2);
  REQUIRE(c.constructed.size() == a.constructed.size());
  for (const auto& ca : a.constructed) {
    int matches = 0;
    for (const auto& cb : c.constructed) {
      if ((ca.element - cb.element).norm() < 1e-7) ++matches;
    }
    CHECK(matches == 1);
  }
}

TEST_CASE("theorem decomposition honestly reports the one-class gap") {
  // For |T| = 2 the constructed families (no eta) do not exhaust the
  // center: T(S wr K_4) has one more central primitive idempotent,
  // (1/|X|) J_X (x) eps_{y0t} - (1/(3|X|)) J_X (x) J_{y0t}. The report
  // must expose the mismatch rather than hide it.
  DecompositionReport rep = theorem_decomposition(
      trivial_scheme(), catalog_scheme("k4"), 0, 0, 1);
  CHECK_FALSE(rep.pass);
  CHECK(rep.theorem_case == 1);
  CHECK(rep.constructed_count == 1);
  CHECK(rep.formula_count == 1);
  CHECK(rep.center_dim == 2);
  CHECK_FALSE(rep.matched_bijectively);
  CHECK(rep.certs_ok);  // what is constructed is still certified
  CHECK_FALSE(rep.diagnostics.empty());

  // The residual center element is exactly the missing closed form.
  const int n = 4;
  std::vector<int> rest = {1, 2, 3};
  CMatrix eps = epsilon_diag(n, rest);
  CMatrix missing = eps - (eps * ones_matrix(n) * eps) / 3.0;
  CMatrix sum = rep.constructed[0].element;
  CHECK((CMatrix::Identity(n, n) - sum - missing).norm() < 1e-10);
}

TEST_CASE("decomposition report JSON uses canonical floats") {
  DecompositionReport rep = theorem_decomposition(
      catalog_scheme("z2"), catalog_scheme("z7"), 0, 0, 1);
  nlohmann::json j = decomposition_report_to_json(rep);
  CHECK(j.at("schema_version") == 1);
  CHECK(j.at("counts").at("constructed") == 5);
  double v = j.at("residuals").at("sum").get<double>();
  CHECK(v == canonical_round(v));
}
