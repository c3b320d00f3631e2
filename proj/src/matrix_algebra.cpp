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

#include "schemes/matrix_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace schemes {

double frobenius_norm(const CMatrix& m) { return m.norm(); }

bool approx_equal(const CMatrix& a, const CMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return (a - b).norm() < tol;
}

std::complex<double> trace_inner(const CMatrix& a, const CMatrix& b) {
  return (a.conjugate().cwiseProduct(b)).sum();
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CMatrix adjacency_matrix(const CoherentConfiguration& cc, int color) {
  if (color < 0 || color >= cc.rank) {
    throw SchemeError(ErrorCode::InvalidColor, "color " + std::to_string(color));
  }
  CMatrix m = CMatrix::Zero(cc.n, cc.n);
  for (int x = 0; x < cc.n; ++x) {
    for (int y = 0; y < cc.n; ++y) {
      if (cc.colors.at(x, y) == color) m(x, y) = 1.0;
    }
  }
  return m;
}

CMatrix epsilon_diag(int n, const std::vector<int>& points) {
  CMatrix m = CMatrix::Zero(n, n);
  for (int p : points) m(p, p) = 1.0;
  return m;
}

CMatrix ones_matrix(int n) { return CMatrix::Constant(n, n, 1.0); }

namespace {

// Orthogonalizes `m` against the basis twice (classical re-orthogonalization)
// and appends the normalized remainder when it is numerically new.
bool try_extend(std::vector<CMatrix>& basis, CMatrix m, double pivot_tol) {
  const double scale = std::max(1.0, m.norm());
  for (int pass = 0; pass < 2; ++pass) {
    for (const CMatrix& b : basis) {
      m.noalias() -= trace_inner(b, m) * b;
    }
  }
  const double r = m.norm();
  if (r <= pivot_tol * scale) return false;
  basis.push_back(m / r);
  return true;
}

}  // namespace

std::vector<CMatrix> orthonormal_span(const std::vector<CMatrix>& mats,
                                      double pivot_tol) {
  std::vector<CMatrix> basis;
  for (const CMatrix& m : mats) try_extend(basis, m, pivot_tol);
  return basis;
}

double in_span_residual(const std::vector<CMatrix>& basis, const CMatrix& m) {
  CMatrix rem = m;
  for (int pass = 0; pass < 2; ++pass) {
    for (const CMatrix& b : basis) {
      rem.noalias() -= trace_inner(b, rem) * b;
    }
  }
  return rem.norm();
}

MatrixAlgebra generate_algebra(const std::vector<CMatrix>& gens,
                               bool include_identity, const Tolerances& tol) {
  if (gens.empty() && !include_identity) {
    throw SchemeError(ErrorCode::BadInput, "no generators");
  }
  const int n = gens.empty() ? 0 : static_cast<int>(gens[0].rows());
  for (const CMatrix& g : gens) {
    if (g.rows() != g.cols() || static_cast<int>(g.rows()) != n) {
      throw SchemeError(ErrorCode::DimensionMismatch,
                        "generators must be square of equal dimension");
    }
  }

  MatrixAlgebra alg;
  alg.n = n;
  auto add_generator = [&alg](const CMatrix& g) {
    for (const CMatrix& have : alg.generators) {
      if ((have - g).norm() == 0.0) return;
    }
    alg.generators.push_back(g);
  };
  if (include_identity) {
    alg.unit = CMatrix::Identity(n, n);
    add_generator(*alg.unit);
  }
  for (const CMatrix& g : gens) {
    add_generator(g);
    add_generator(g.adjoint());
  }

  // Vectorized basis: column k holds vec(B_k), so orthogonalization runs as
  // matrix products over contiguous storage.
  const Eigen::Index nn = static_cast<Eigen::Index>(n) * n;
  Eigen::MatrixXcd cols(nn, 16);
  Eigen::Index m = 0;
  auto try_add = [&](Eigen::VectorXcd v) {
    const double scale = std::max(1.0, v.norm());
    for (int pass = 0; pass < 2 && m > 0; ++pass) {
      Eigen::VectorXcd coeff = cols.leftCols(m).adjoint() * v;
      v.noalias() -= cols.leftCols(m) * coeff;
    }
    const double r = v.norm();
    if (r <= tol.span_pivot * scale) return;
    if (m == cols.cols()) cols.conservativeResize(Eigen::NoChange, 2 * m);
    cols.col(m++) = v / r;
  };

  for (const CMatrix& g : alg.generators) {
    try_add(Eigen::Map<const Eigen::VectorXcd>(g.data(), nn));
  }

  // Close the span under multiplication by generators (left and right). A
  // span containing the generators and stable under both actions is the
  // generated algebra. Each frontier element's products are projected
  // against the basis in one block, then the survivors are admitted
  // sequentially.
  const int per_batch = 2 * static_cast<int>(alg.generators.size());
  Eigen::MatrixXcd batch(nn, per_batch);
  Eigen::Index processed = 0;
  while (processed < m) {
    const CMatrix b =
        Eigen::Map<const CMatrix>(cols.col(processed).data(), n, n);
    std::vector<double> scale(per_batch);
    for (size_t k = 0; k < alg.generators.size(); ++k) {
      CMatrix left = b * alg.generators[k];
      CMatrix right = alg.generators[k] * b;
      batch.col(2 * k) = Eigen::Map<const Eigen::VectorXcd>(left.data(), nn);
      batch.col(2 * k + 1) =
          Eigen::Map<const Eigen::VectorXcd>(right.data(), nn);
      scale[2 * k] = std::max(1.0, left.norm());
      scale[2 * k + 1] = std::max(1.0, right.norm());
    }
    Eigen::MatrixXcd coeff = cols.leftCols(m).adjoint() * batch;
    batch.noalias() -= cols.leftCols(m) * coeff;
    for (int j = 0; j < per_batch; ++j) {
      if (batch.col(j).norm() > tol.span_pivot * scale[j]) {
        try_add(batch.col(j));
      }
    }
    ++processed;
  }

  alg.basis.reserve(m);
  for (Eigen::Index k = 0; k < m; ++k) {
    alg.basis.push_back(Eigen::Map<const CMatrix>(cols.col(k).data(), n, n));
  }
  return alg;
}

std::vector<CMatrix> algebra_center(const MatrixAlgebra& alg) {
  const int m = alg.dim();
  if (m == 0) return {};
  const Eigen::Index nn = static_cast<Eigen::Index>(alg.n) * alg.n;

  // Gram matrix of the commutator constraints: a coordinate vector z is in
  // the kernel iff sum z_i B_i commutes with every generator.
  Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(m, m);
  Eigen::MatrixXcd v(m, nn);
  for (const CMatrix& g : alg.generators) {
    for (int i = 0; i < m; ++i) {
      CMatrix c = alg.basis[i] * g - g * alg.basis[i];
      v.row(i) = Eigen::Map<const Eigen::VectorXcd>(c.data(), nn);
    }
    gram.noalias() += v * v.adjoint();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
  const double cut =
      1e-14 * std::max(1.0, es.eigenvalues().maxCoeff());

  std::vector<CMatrix> center;
  for (int k = 0; k < m; ++k) {
    if (es.eigenvalues()(k) < cut) {
      CMatrix z = CMatrix::Zero(alg.n, alg.n);
      for (int i = 0; i < m; ++i) z += es.eigenvectors()(i, k) * alg.basis[i];
      center.push_back(std::move(z));
    }
  }
  return center;
}

IdempotentCertificate certify_idempotent(const MatrixAlgebra& alg,
                                         const std::vector<CMatrix>& center,
                                         const CMatrix& e,
                                         std::string provenance,
                                         const Tolerances& tol) {
  IdempotentCertificate cert;
  cert.element = e;
  cert.provenance = std::move(provenance);
  cert.idempotency_residual = (e * e - e).norm();
  double worst = 0;
  for (const CMatrix& g : alg.generators) {
    worst = std::max(worst, (e * g - g * e).norm());
  }
  cert.centrality_residual = worst;
  cert.span_residual = in_span_residual(alg.basis, e);

  // dim(E * Z(A)) via the singular values of the stacked products.
  if (!center.empty()) {
    const Eigen::Index nn = static_cast<Eigen::Index>(alg.n) * alg.n;
    Eigen::MatrixXcd stacked(center.size(), nn);
    for (size_t k = 0; k < center.size(); ++k) {
      CMatrix p = e * center[k];
      stacked.row(k) = Eigen::Map<const Eigen::VectorXcd>(p.data(), nn);
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stacked);
    const auto& sv = svd.singularValues();
    const double cut = tol.svd_cutoff * std::max(1.0, sv.size() ? sv(0) : 0.0);
    int rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
      if (sv(k) > cut) ++rank;
    }
    cert.central_component_dim = rank;
  }
  return cert;
}

namespace {

// Stable deterministic order: descending rank (trace of a projector), then
// entrywise lexicographic with a tolerance snap.
bool idempotent_less(const CMatrix& a, const CMatrix& b) {
  const double ta = a.trace().real(), tb = b.trace().real();
  if (std::abs(ta - tb) > 0.5) return ta > tb;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const std::complex<double> x = a.data()[i], y = b.data()[i];
    if (std::abs(x.real() - y.real()) > 1e-7) return x.real() < y.real();
    if (std::abs(x.imag() - y.imag()) > 1e-7) return x.imag() < y.imag();
  }
  return false;
}

}  // namespace

std::vector<IdempotentCertificate> central_primitive_idempotents(
    const MatrixAlgebra& alg, std::uint64_t seed, const Tolerances& tol) {
  std::vector<CMatrix> center = algebra_center(alg);
  const int want = static_cast<int>(center.size());
  if (want == 0) {
    throw SchemeError(ErrorCode::BadInput, "algebra has empty center basis");
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<CMatrix> projectors;

  for (int round = 0; round < 16; ++round) {
    // Random over the real basis {Z_k, i Z_k}, then Hermitized, so the
    // combination ranges over the whole real space of Hermitian center
    // elements (real coefficients on Z_k alone can miss the directions
    // carried by conjugate pairs).
    CMatrix h = CMatrix::Zero(alg.n, alg.n);
    for (const CMatrix& z : center) {
      h += std::complex<double>(unif(rng), unif(rng)) * z;
    }
    h = 0.5 * (h + h.adjoint()).eval();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    const auto& ev = es.eigenvalues();
    std::vector<CMatrix> groups;
    int start = 0;
    for (int k = 1; k <= alg.n; ++k) {
      if (k == alg.n || ev(k) - ev(k - 1) > tol.eigen_gap) {
        auto block = es.eigenvectors().middleCols(start, k - start);
        groups.push_back(block * block.adjoint());
        start = k;
      }
    }

    if (projectors.empty()) {
      projectors = std::move(groups);
    } else {
      std::vector<CMatrix> refined;
      for (const CMatrix& p : projectors) {
        for (const CMatrix& q : groups) {
          CMatrix pq = p * q;
          if (pq.trace().real() > 0.5) refined.push_back(std::move(pq));
        }
      }
      projectors = std::move(refined);
    }
    if (static_cast<int>(projectors.size()) == want) break;
  }
  if (static_cast<int>(projectors.size()) != want) {
    throw SchemeError(
        ErrorCode::ExtractionUnstable,
        "eigen-gap grouping found " + std::to_string(projectors.size()) +
            " projectors, center dimension is " + std::to_string(want));
  }

  std::sort(projectors.begin(), projectors.end(), idempotent_less);
  std::vector<IdempotentCertificate> out;
  out.reserve(projectors.size());
  for (const CMatrix& p : projectors) {
    out.push_back(certify_idempotent(alg, center, p, "numeric", tol));
  }
  return out;
}

MatrixAlgebra compress_by_projector(const MatrixAlgebra& alg, const CMatrix& p,
                                    const Tolerances& tol) {
  if (p.rows() != alg.n || p.cols() != alg.n) {
    throw SchemeError(ErrorCode::DimensionMismatch, "projector dimension");
  }
  MatrixAlgebra out;
  out.n = alg.n;
  out.unit = p;
  for (const CMatrix& g : alg.generators) out.generators.push_back(p * g * p);
  for (const CMatrix& b : alg.basis) {
    try_extend(out.basis, p * b * p, tol.span_pivot);
  }
  return out;
}

}  // namespace schemes
