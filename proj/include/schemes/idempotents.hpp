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

#ifndef SCHEMES_IDEMPOTENTS_HPP
#define SCHEMES_IDEMPOTENTS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "schemes/equivalenced.hpp"
#include "schemes/matrix_algebra.hpp"
#include "schemes/terwilliger.hpp"
#include "schemes/wreath.hpp"

namespace schemes {

/// The three 3x3 placement patterns between two ordered neighborhoods:
/// plain matches k -> k, over shifts k -> k+1 (mod 3), under shifts
/// k -> k+2. They sum to the all-ones block.
struct EpsilonTriple {
  CMatrix plain, over, under;
};

EpsilonTriple epsilon_patterns(int ny, const std::array<int, 3>& row_triple,
                               const std::array<int, 3>& col_triple);

enum class OmegaVariant { Omega, OmegaSquared };

/// G_{y0t, y0t'} = (3|X|)^-1 J_X (x) (plain + w*over + w^2*under) with
/// w = exp(2*pi*i/3); the OmegaSquared variant swaps w and w^2 (the G'
/// family).
CMatrix g_matrix(const WreathScheme& w, const WellOrderedExtension& wo, int t,
                 int t_prime, OmegaVariant variant);

/// e_eta1 = sum_t G_{t,t}, e_eta2 = sum_t G'_{t,t}. Requires |T| > 2.
std::pair<CMatrix, CMatrix> eta_idempotents(const WreathScheme& w,
                                            const WellOrderedExtension& wo);

/// Embedded central primitive idempotents e_chi (x) eps_{y0} of the copy of
/// T(X,S,x0) on the fiber X x {y0}, excluding the trivial one. Numeric
/// extraction on T(X,S,x0), seeded.
std::vector<CMatrix> tilde_idempotents(const WreathScheme& w, int x0, int y0,
                                       std::uint64_t seed,
                                       const Tolerances& tol = {});

/// e_psi (x) eps_{y0t} for every valency-3 color t and every nontrivial
/// central primitive idempotent of the adjacency algebra of the X-factor.
std::vector<std::pair<int, CMatrix>> hat_idempotents(const WreathScheme& w,
                                                     int y0,
                                                     std::uint64_t seed,
                                                     const Tolerances& tol = {});

struct IdealStructureReport {
  int t3_size = 0;
  int family_dim = 0;            // rank of the G-family span
  int family_dim_prime = 0;      // rank of the G'-family span
  double mult_table_residual = 0;  // matrix-unit rule, both families
  double closure_residual = 0;     // generator action stays in the span
  double cross_residual = 0;       // G * G' annihilation
};

/// Checks that both families span |T_3|^2-dimensional ideals of T(S wr T)
/// multiplying like matrix units. Throws IdealViolation (with the witness
/// generator and pair) when a product escapes the span beyond tol.cert.
/// `prebuilt` may pass an already-generated T(S wr T) to avoid regenerating
/// it.
IdealStructureReport verify_ideal_structure(const WreathScheme& w,
                                            const WellOrderedExtension& wo,
                                            int x0,
                                            const Tolerances& tol = {},
                                            const MatrixAlgebra* prebuilt = nullptr);

struct DecompositionReport {
  int schema_version = 1;
  std::string s_label, t_label;
  int x0 = 0, y0 = 0;
  std::uint64_t seed = 1;
  double tol_cert = 1e-8, tol_match = 1e-7;
  int nx = 0, ny = 0;
  int theorem_case = 0;  // 1: |T| = 2, 2: |T| > 2
  int t3_size = 0;

  std::vector<IdempotentCertificate> constructed;
  int constructed_count = 0;
  int tilde_count = 0, hat_count = 0, eta_count = 0;
  int formula_count = 0;
  int center_dim = 0;
  int numeric_count = 0;

  double sum_residual = 0;
  double max_pairwise_residual = 0;
  double max_idempotency_residual = 0;
  double max_centrality_residual = 0;
  double max_span_residual = 0;
  std::vector<int> numeric_to_constructed;  // -1 when unmatched
  double match_max_distance = 0;

  bool certs_ok = false;
  bool sum_ok = false;
  bool pairwise_ok = false;
  bool count_formula_ok = false;
  bool count_center_ok = false;
  bool matched_bijectively = false;
  bool pass = false;
  std::vector<std::string> diagnostics;
};

/// Full verification of the central-primitive-idempotent classification of
/// T(X x Y, S wr T, (x0,y0)): constructs the families (trivial, tilde, hat,
/// and eta when |T| > 2), certifies every element, checks pairwise
/// orthogonality and the sum identity, and matches the constructed set
/// one-to-one against seeded numeric extraction. Count mismatches, matching
/// failures and residual overruns are reported in the flags and diagnostics
/// rather than thrown, so a failing instance still yields a full report.
DecompositionReport theorem_decomposition(const SchemeHandle& s,
                                          const SchemeHandle& t, int x0,
                                          int y0, std::uint64_t seed,
                                          const Tolerances& tol = {});

nlohmann::json decomposition_report_to_json(const DecompositionReport& rep);

}  // namespace schemes

#endif  // SCHEMES_IDEMPOTENTS_HPP
