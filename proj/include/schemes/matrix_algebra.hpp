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

#ifndef SCHEMES_MATRIX_ALGEBRA_HPP
#define SCHEMES_MATRIX_ALGEBRA_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "schemes/configuration.hpp"

namespace schemes {

/// Dense complex matrix, double precision. Carrier for adjacency matrices,
/// diagonal indicators, idempotents and algebra elements.
using CMatrix = Eigen::MatrixXcd;

struct Tolerances {
  double span_pivot = 1e-10;   // rank / span-membership pivot
  double cert = 1e-8;          // idempotency / centrality / orthogonality
  double eigen_gap = 1e-6;     // eigenvalue grouping in extraction
  double svd_cutoff = 1e-8;    // singular-value cutoff for component dims
  double match = 1e-7;         // constructed <-> numeric matching
  double containment = 1e-9;   // span-containment certificates
};

double frobenius_norm(const CMatrix& m);
bool approx_equal(const CMatrix& a, const CMatrix& b, double tol);

/// Trace inner product <a, b> = tr(a^* b).
std::complex<double> trace_inner(const CMatrix& a, const CMatrix& b);

/// Kronecker product; the second factor's index varies fastest.
CMatrix kron(const CMatrix& a, const CMatrix& b);

CMatrix adjacency_matrix(const CoherentConfiguration& cc, int color);
CMatrix epsilon_diag(int n, const std::vector<int>& points);
CMatrix ones_matrix(int n);

/// A finite-dimensional self-adjoint subalgebra of Mat_n(C), stored as a
/// basis orthonormal under the trace inner product. `generators` is the
/// augmented generating set (adjoints adjoined, plus the identity when
/// requested); `unit` is the multiplicative identity of the algebra when
/// known (the ambient identity for unital generation, the corner projector
/// for compressions).
struct MatrixAlgebra {
  int n = 0;
  std::vector<CMatrix> basis;
  std::vector<CMatrix> generators;
  std::optional<CMatrix> unit;

  int dim() const { return static_cast<int>(basis.size()); }
};

/// Smallest subalgebra containing the generators (and the ambient identity
/// when `include_identity`). Closed under conjugate-transpose by augmenting
/// the generating set with adjoints. Basis maintained by modified
/// Gram-Schmidt over vectorized matrices, orthogonalizing each candidate
/// twice; a direction is kept when its residual exceeds span_pivot relative
/// to the candidate's norm.
MatrixAlgebra generate_algebra(const std::vector<CMatrix>& gens,
                               bool include_identity = true,
                               const Tolerances& tol = {});

/// Residual of M against the orthonormal span (Frobenius norm of M minus its
/// projection).
double in_span_residual(const std::vector<CMatrix>& orthonormal_basis,
                        const CMatrix& m);

/// Orthonormal basis of the span of `mats` (modified Gram-Schmidt).
std::vector<CMatrix> orthonormal_span(const std::vector<CMatrix>& mats,
                                      double pivot_tol = 1e-10);

/// Orthonormal basis of the center {Z in A : ZB = BZ for all B}, computed by
/// solving the commutant system against the generating set inside the
/// algebra's coordinate space.
std::vector<CMatrix> algebra_center(const MatrixAlgebra& alg);

struct IdempotentCertificate {
  CMatrix element;
  double idempotency_residual = 0;  // ||E^2 - E||_F
  double centrality_residual = 0;   // max over generators ||EG - GE||_F
  double span_residual = 0;         // distance to the algebra's span
  int central_component_dim = -1;   // dim E * Z(A); 1 means primitive
  std::string provenance;           // trivial / tilde / hat:t / eta1 / eta2 / numeric

  bool certified(const Tolerances& tol = {}) const {
    return idempotency_residual < tol.cert && centrality_residual < tol.cert &&
           span_residual < tol.cert && central_component_dim == 1;
  }
};

/// Measures the certificate residuals of a candidate idempotent against an
/// algebra and its center.
IdempotentCertificate certify_idempotent(const MatrixAlgebra& alg,
                                         const std::vector<CMatrix>& center,
                                         const CMatrix& e,
                                         std::string provenance,
                                         const Tolerances& tol = {});

/// All central primitive idempotents of a conjugate-transpose-closed algebra.
/// Draws seeded pseudo-random Hermitian combinations of the center basis,
/// splits their spectra at gaps above eigen_gap, and intersects the spectral
/// projectors across rounds until their number equals dim(center) (at most 16
/// rounds, then ExtractionUnstable). Deterministic for a fixed seed; output
/// sorted by descending rank, then entrywise.
std::vector<IdempotentCertificate> central_primitive_idempotents(
    const MatrixAlgebra& alg, std::uint64_t seed, const Tolerances& tol = {});

/// Corner compression P * A * P of an algebra by a projector P in A. The
/// result's basis spans {P B P}; its unit is P.
MatrixAlgebra compress_by_projector(const MatrixAlgebra& alg, const CMatrix& p,
                                    const Tolerances& tol = {});

}  // namespace schemes

#endif  // SCHEMES_MATRIX_ALGEBRA_HPP
