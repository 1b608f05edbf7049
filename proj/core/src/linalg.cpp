// Copyright 2026 The qzz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qzz/linalg.hpp"

#include <cmath>
#include <random>

namespace qzz {

bool all_finite(const ComplexMatrix& m) {
  return m.allFinite();
}

double unitarity_defect(const ComplexMatrix& m) {
  const Index n = m.rows();
  ComplexMatrix gram = m.adjoint() * m;
  gram -= ComplexMatrix::Identity(n, n);
  return gram.norm();
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix m, bool validated)
    : mat_(std::move(m)), validated_(validated) {}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix m) : mat_(std::move(m)), validated_(false) {
  if (mat_.rows() != mat_.cols()) {
    throw DimensionError("UnitaryMatrix: matrix is not square (" +
                         std::to_string(mat_.rows()) + "x" +
                         std::to_string(mat_.cols()) + ")");
  }
  if (mat_.rows() < 1) {
    throw DimensionError("UnitaryMatrix: empty matrix");
  }
  validate();
}

UnitaryMatrix UnitaryMatrix::from_validated(ComplexMatrix m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw DimensionError("UnitaryMatrix::from_validated: matrix is not square");
  }
  return UnitaryMatrix(std::move(m), true);
}

void UnitaryMatrix::validate() {
  if (!all_finite(mat_)) {
    throw UnitarityError("UnitaryMatrix: non-finite entries");
  }
  const double defect = unitarity_defect(mat_);
  const double bound = kUnitaryTol * static_cast<double>(dim());
  if (defect > bound) {
    throw UnitarityError("UnitaryMatrix: ||U^dag U - I||_F = " +
                         std::to_string(defect) + " exceeds " +
                         std::to_string(bound));
  }
  validated_ = true;
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
  return UnitaryMatrix(mat_.adjoint(), validated_);
}

Complex hs_inner(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw DimensionError("hs_inner: shape mismatch");
  }
  // Tr(X Y^dag) = sum_ij X_ij conj(Y_ij); no matrix product needed.
  return (x.array() * y.array().conjugate()).sum();
}

double hs_norm(const ComplexMatrix& x) {
  return x.norm();
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b, Index cap) {
  const Index rows = a.rows() * b.rows();
  const Index cols = a.cols() * b.cols();
  if (a.rows() > 0 && b.rows() > 0 && (rows > cap || cols > cap)) {
    throw DimensionCapError(
        "tensor: result " + std::to_string(rows) + "x" + std::to_string(cols) +
        " exceeds the materialization cap " + std::to_string(cap));
  }
  ComplexMatrix out(rows, cols);
  // Explicit scalar loop: each entry is exactly one complex multiplication,
  // so nested products have the mandated left-to-right evaluation order
  // entry for entry (no vectorization- or contraction-dependent variants).
  for (Index ia = 0; ia < a.rows(); ++ia) {
    for (Index ja = 0; ja < a.cols(); ++ja) {
      const Complex scale = a(ia, ja);
      for (Index ib = 0; ib < b.rows(); ++ib) {
        for (Index jb = 0; jb < b.cols(); ++jb) {
          out(ia * b.rows() + ib, ja * b.cols() + jb) = scale * b(ib, jb);
        }
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace_second(const ComplexMatrix& x, Index dim1, Index dim2) {
  if (dim1 < 1 || dim2 < 1 || x.rows() != dim1 * dim2 || x.cols() != dim1 * dim2) {
    throw DimensionError("partial_trace_second: matrix of dimension " +
                         std::to_string(x.rows()) + " does not factor as " +
                         std::to_string(dim1) + "*" + std::to_string(dim2));
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim1, dim1);
  for (Index i = 0; i < dim1; ++i) {
    for (Index j = 0; j < dim1; ++j) {
      Complex acc(0.0, 0.0);
      for (Index b = 0; b < dim2; ++b) {
        acc += x(i * dim2 + b, j * dim2 + b);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

ComplexMatrix maximally_mixed(Index dim) {
  if (dim < 1) {
    throw DimensionError("maximally_mixed: dim must be >= 1");
  }
  return ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim);
}

UnitaryMatrix haar_unitary(Index n, std::uint64_t seed) {
  if (n < 1) {
    throw DimensionError("haar_unitary: n must be >= 1");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix ginibre(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      ginibre(i, j) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(ginibre);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  // Fix the gauge: scale column j by phase(R_jj) so that Q is distributed
  // with Haar measure rather than the QR-dependent one.
  const ComplexMatrix& qr_mat = qr.matrixQR();
  for (Index j = 0; j < n; ++j) {
    const Complex r = qr_mat(j, j);
    const double mag = std::abs(r);
    const Complex phase = mag > 0.0 ? r / mag : Complex(1.0, 0.0);
    q.col(j) *= phase;
  }
  return UnitaryMatrix(std::move(q));
}

UnitaryMatrix permutation_unitary(const std::vector<Index>& perm) {
  const Index n = static_cast<Index>(perm.size());
  if (n < 1) {
    throw DimensionError("permutation_unitary: empty permutation");
  }
  std::vector<bool> seen(perm.size(), false);
  for (Index image : perm) {
    if (image < 0 || image >= n || seen[static_cast<std::size_t>(image)]) {
      throw DimensionError("permutation_unitary: not a bijection");
    }
    seen[static_cast<std::size_t>(image)] = true;
  }
  ComplexMatrix u = ComplexMatrix::Zero(n, n);
  for (Index j = 0; j < n; ++j) {
    u(perm[static_cast<std::size_t>(j)], j) = Complex(1.0, 0.0);
  }
  return UnitaryMatrix::from_validated(std::move(u));
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace qzz
