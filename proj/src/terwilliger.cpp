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

#include "schemes/terwilliger.hpp"

#include <algorithm>

namespace schemes {

namespace {

// Projection of m onto the span of the extension's adjacency matrices. The
// classes partition X x X, so the projection is classwise averaging.
CMatrix project_onto_colors(const CoherentConfiguration& ext,
                            const CMatrix& m) {
  std::vector<std::complex<double>> sum(ext.rank, 0.0);
  std::vector<std::int64_t> count(ext.rank, 0);
  for (int x = 0; x < ext.n; ++x) {
    for (int y = 0; y < ext.n; ++y) {
      sum[ext.colors.at(x, y)] += m(x, y);
      count[ext.colors.at(x, y)] += 1;
    }
  }
  CMatrix out(ext.n, ext.n);
  for (int x = 0; x < ext.n; ++x) {
    for (int y = 0; y < ext.n; ++y) {
      int c = ext.colors.at(x, y);
      out(x, y) = sum[c] / static_cast<double>(count[c]);
    }
  }
  return out;
}

std::vector<int> neighborhood(const SchemeHandle& scheme, int x0, int s) {
  std::vector<int> pts;
  for (int y = 0; y < scheme.n(); ++y) {
    if (scheme.cc.colors.at(x0, y) == s) pts.push_back(y);
  }
  return pts;
}

}  // namespace

TerwilligerContext terwilliger_algebra(const SchemeHandle& scheme, int x0,
                                       const Tolerances& tol) {
  if (x0 < 0 || x0 >= scheme.n()) {
    throw SchemeError(ErrorCode::BadInput, "base point out of range");
  }
  TerwilligerContext ctx;
  ctx.scheme = scheme;
  ctx.x0 = x0;

  std::vector<CMatrix> gens;
  for (int s = 0; s < scheme.rank(); ++s) {
    gens.push_back(adjacency_matrix(scheme.cc, s));
  }
  for (int s = 0; s < scheme.rank(); ++s) {
    gens.push_back(epsilon_diag(scheme.n(), neighborhood(scheme, x0, s)));
  }
  ctx.algebra = generate_algebra(gens, /*include_identity=*/true, tol);
  ctx.extension = one_point_extension(scheme, x0);

  double worst = 0;
  for (const CMatrix& b : ctx.algebra.basis) {
    worst = std::max(
        worst, (b - project_onto_colors(ctx.extension.cc, b)).norm());
  }
  ctx.containment_residual = worst;
  if (worst > tol.containment * std::max(1, scheme.n())) {
    throw SchemeError(ErrorCode::BadInput,
                      "Terwilliger basis escapes the extension span; "
                      "residual " + std::to_string(worst));
  }
  return ctx;
}

CMatrix trivial_idempotent(const SchemeHandle& scheme, int x0) {
  if (x0 < 0 || x0 >= scheme.n()) {
    throw SchemeError(ErrorCode::BadInput, "base point out of range");
  }
  const int n = scheme.n();
  CMatrix e = CMatrix::Zero(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int sa = scheme.cc.colors.at(x0, a);
      if (sa == scheme.cc.colors.at(x0, b)) {
        e(a, b) = 1.0 / static_cast<double>(scheme.valencies[sa]);
      }
    }
  }
  return e;
}

ExtensionEqualityReport verify_extension_equality(
    const TerwilligerContext& ctx) {
  ExtensionEqualityReport rep;
  rep.dim_terwilliger = ctx.algebra.dim();
  rep.extension_rank = ctx.extension.cc.rank;
  rep.equal = rep.dim_terwilliger == rep.extension_rank;
  return rep;
}

USubalgebraReport u_subalgebra_basis(const WreathScheme& w, int y0,
                                     const Tolerances& tol) {
  const int nx = w.nx(), ny = w.ny();
  const SchemeHandle& t_factor = w.factor_y;
  if (y0 < 0 || y0 >= ny) {
    throw SchemeError(ErrorCode::BadInput, "base point out of range");
  }

  const CMatrix jx = ones_matrix(nx);
  std::vector<CMatrix> eps(t_factor.rank());
  for (int t = 0; t < t_factor.rank(); ++t) {
    eps[t] = epsilon_diag(ny, neighborhood(t_factor, y0, t));
  }

  std::vector<CMatrix> gens;
  for (int t = 0; t < t_factor.rank(); ++t) {
    CMatrix sig = adjacency_matrix(t_factor.cc, t);
    for (int t1 = 0; t1 < t_factor.rank(); ++t1) {
      for (int t2 = 0; t2 < t_factor.rank(); ++t2) {
        CMatrix m = eps[t1] * sig * eps[t2];
        if (m.norm() == 0) continue;
        gens.push_back(kron(jx, m) / static_cast<double>(nx));
      }
    }
  }

  USubalgebraReport rep;
  rep.algebra = generate_algebra(gens, /*include_identity=*/false, tol);
  rep.dim_u = rep.algebra.dim();
  TerwilligerContext tctx = terwilliger_algebra(t_factor, y0, tol);
  rep.dim_t_factor = tctx.algebra.dim();
  rep.dims_equal = rep.dim_u == rep.dim_t_factor;

  double worst = 0;
  for (int c = 0; c < tctx.extension.cc.rank; ++c) {
    CMatrix pattern = kron(jx, adjacency_matrix(tctx.extension.cc, c));
    pattern /= pattern.norm();
    worst = std::max(worst, in_span_residual(rep.algebra.basis, pattern));
  }
  rep.basis_pattern_residual = worst;
  return rep;
}

CornerReport corner_restriction_report(const WreathScheme& w, int x0, int y0,
                                       const Tolerances& tol) {
  const int nx = w.nx(), ny = w.ny();
  std::vector<int> others;
  for (int y = 0; y < ny; ++y) {
    if (y != y0) others.push_back(y);
  }
  const CMatrix p = kron(CMatrix::Identity(nx, nx), epsilon_diag(ny, others));

  const int z0 = w.point(x0, y0);
  TerwilligerContext big = terwilliger_algebra(w.product, z0, tol);

  CornerReport rep;
  rep.corner_dim = compress_by_projector(big.algebra, p, tol).dim();

  // Reduced generating set: the Y-factor extension patterns restricted to
  // Y\{y0}, plus sigma_s (x) I on the restricted block.
  TerwilligerContext tctx = terwilliger_algebra(w.factor_y, y0, tol);
  std::vector<CMatrix> gens;
  const CMatrix jx = ones_matrix(nx);
  for (int c = 0; c < tctx.extension.cc.rank; ++c) {
    CMatrix m = p * kron(jx, adjacency_matrix(tctx.extension.cc, c)) * p;
    if (m.norm() > 0) gens.push_back(std::move(m));
  }
  for (int s = 0; s < w.factor_x.rank(); ++s) {
    gens.push_back(p * kron(adjacency_matrix(w.factor_x.cc, s),
                            CMatrix::Identity(ny, ny)) *
                   p);
  }
  rep.generated_dim =
      generate_algebra(gens, /*include_identity=*/false, tol).dim();
  rep.equal = rep.corner_dim == rep.generated_dim;
  return rep;
}

}  // namespace schemes
