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

#ifndef SCHEMES_TERWILLIGER_HPP
#define SCHEMES_TERWILLIGER_HPP

#include "schemes/closure.hpp"
#include "schemes/matrix_algebra.hpp"
#include "schemes/wreath.hpp"

namespace schemes {

/// Terwilliger algebra of a scheme at a base point: generated by the
/// adjacency matrices together with the diagonal projectors onto the
/// neighborhoods x0s. Carries the one-point extension and a certificate that
/// every basis element lies in the span of the extension's adjacency
/// matrices.
struct TerwilligerContext {
  SchemeHandle scheme;
  int x0 = 0;
  MatrixAlgebra algebra;
  ClosureResult extension;
  double containment_residual = 0;
};

TerwilligerContext terwilliger_algebra(const SchemeHandle& scheme, int x0,
                                       const Tolerances& tol = {});

/// The central primitive idempotent of the trivial character:
/// sum over s of n_s^-1 * eps_{x0 s} J eps_{x0 s}. Exact by construction
/// (entries are 0 or 1/n_s).
CMatrix trivial_idempotent(const SchemeHandle& scheme, int x0);

struct ExtensionEqualityReport {
  int dim_terwilliger = 0;
  int extension_rank = 0;
  bool equal = false;
};

/// dim T(S, x0) versus the rank of the one-point extension. The containment
/// is certified in the context; equality is a property of the scheme.
ExtensionEqualityReport verify_extension_equality(
    const TerwilligerContext& ctx);

struct USubalgebraReport {
  MatrixAlgebra algebra;   // the flat subalgebra U of T(S wr T)
  int dim_u = 0;
  int dim_t_factor = 0;    // dim T(Y, T, y0)
  bool dims_equal = false;
  // max residual of J_X (x) sigma_c (c an extension color of the Y-factor)
  // against span(U); with dims_equal this certifies that {J_X (x) sigma_c}
  // is a basis of U.
  double basis_pattern_residual = 0;
};

/// The subalgebra of T(S wr T) spanned by matrices constant across X-blocks,
/// generated by |X|^-1 * J_X (x) (eps_{y0 t1} sigma_t eps_{y0 t2}). Its unit
/// is |X|^-1 J_X (x) I_Y, not the ambient identity.
USubalgebraReport u_subalgebra_basis(const WreathScheme& w, int y0,
                                     const Tolerances& tol = {});

struct CornerReport {
  int corner_dim = 0;      // dim of P T(S wr T) P, P = I_X (x) eps_{Y\{y0}}
  int generated_dim = 0;   // dim of the algebra from the reduced generators
  bool equal = false;
};

/// Compares the corner of T(S wr T) by eps_X (x) eps_{Y\{y0}} against the
/// algebra generated by {J_X (x) sigma_c restricted} U {sigma_s (x) I_{Y\y0}}.
CornerReport corner_restriction_report(const WreathScheme& w, int x0, int y0,
                                       const Tolerances& tol = {});

}  // namespace schemes

#endif  // SCHEMES_TERWILLIGER_HPP
