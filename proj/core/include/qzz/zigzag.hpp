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

#ifndef QZZ_ZIGZAG_HPP
#define QZZ_ZIGZAG_HPP

#include "qzz/channel.hpp"
#include "qzz/linalg.hpp"

namespace qzz {

/// The controlled block unitary built from an ensemble {U_b}: on the product
/// space V1 (x) C^{D1} it maps |a>(x)|b> to (U_b|a>)(x)|b>. Basis order is
/// first factor major: composite index a*D1 + b. In that ordering the matrix
/// is a permuted block-diagonal with D1 logical blocks of size N1, block b
/// being U_b.
class LiftedUnitary {
 public:
  LiftedUnitary(UnitaryMatrix u, Index block_dim, Index block_count)
      : u_(std::move(u)), block_dim_(block_dim), block_count_(block_count) {}

  const UnitaryMatrix& unitary() const { return u_; }
  Index dim() const { return u_.dim(); }
  Index block_dim() const { return block_dim_; }      // N1
  Index block_count() const { return block_count_; }  // D1

  /// The lifted channel as a degree-1 ensemble, X -> U. X U.^dag.
  MixedUnitaryEnsemble as_ensemble() const;

 private:
  UnitaryMatrix u_;
  Index block_dim_;
  Index block_count_;
};

/// Lifts the ensemble of g1 to the block unitary U. on dimension N1*D1:
/// <a',b'| U. |a,b> = delta_{b',b} (U_b)_{a',a}.
LiftedUnitary lift(const MixedUnitaryEnsemble& g1, Index cap = kDefaultDimensionCap);

/// Zig-Zag product of g1 (on V1, D1-regular) with g2 (on a space of dimension
/// D1). The result lives on dimension N1*D1, has degree D2^2, and its Kraus
/// unitaries are W_{a,b} = (I (x) V_b) U. (I (x) V_a^dag) at canonical index
/// a*D2 + b. Equal, as a channel, to (I (x) G2) o G1. o (I (x) G2^dag).
/// Throws DimensionError unless g2.dim() == g1.degree().
MixedUnitaryEnsemble zigzag(const MixedUnitaryEnsemble& g1,
                            const MixedUnitaryEnsemble& g2,
                            Index cap = kDefaultDimensionCap);

/// Orthogonal projection of X (on dim1*dim2) onto
/// W_par = span{ sigma (x) I~ }: returns Tr_2(X) (x) I~.
ComplexMatrix project_parallel(const ComplexMatrix& x, Index dim1, Index dim2);

/// The complementary projection X - project_parallel(X). Together they are a
/// Pythagorean decomposition: ||X||^2 = ||X_par||^2 + ||X_perp||^2.
ComplexMatrix project_perp(const ComplexMatrix& x, Index dim1, Index dim2);

}  // namespace qzz

#endif  // QZZ_ZIGZAG_HPP
