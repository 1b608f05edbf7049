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

#ifndef QZZ_CHANNEL_HPP
#define QZZ_CHANNEL_HPP

#include <string>
#include <vector>

#include "qzz/linalg.hpp"

namespace qzz {

/// A D-regular mixed-unitary superoperator: the uniform average of D unitary
/// conjugations X -> (1/D) sum_d U_d X U_d^dag. Only uniform weights are
/// supported; that is the regularity every composition rule here relies on.
/// Immutable after construction.
class MixedUnitaryEnsemble {
 public:
  /// Throws DimensionError if the list is empty or the dimensions disagree.
  /// Unitarity of each member is enforced by the UnitaryMatrix type itself.
  explicit MixedUnitaryEnsemble(std::vector<UnitaryMatrix> unitaries,
                                std::string label = "");

  Index dim() const { return dim_; }
  Index degree() const { return static_cast<Index>(unitaries_.size()); }
  const std::string& label() const { return label_; }
  const UnitaryMatrix& unitary(Index d) const {
    return unitaries_[static_cast<std::size_t>(d)];
  }
  const std::vector<UnitaryMatrix>& unitaries() const { return unitaries_; }

  /// Applies the channel: (1/D) sum_d U_d X U_d^dag. The sum is accumulated
  /// by a pairwise tree reduction in index order, so the result is
  /// reproducible bit for bit.
  ComplexMatrix apply(const ComplexMatrix& x) const;

 private:
  Index dim_;
  std::vector<UnitaryMatrix> unitaries_;
  std::string label_;
};

/// Hilbert-Schmidt adjoint: each U_d replaced by U_d^dag. Satisfies
/// <apply(g, X), Y> = <X, apply(adjoint_channel(g), Y)> for all X, Y.
MixedUnitaryEnsemble adjoint_channel(const MixedUnitaryEnsemble& g);

/// G^2 as an explicit ensemble of degree D^2. Kraus order is canonical:
/// index d1*D + d2 holds U_{d2} U_{d1} (d1 outer, d2 inner), which matches
/// apply(square(g), X) == apply(g, apply(g, X)).
MixedUnitaryEnsemble square(const MixedUnitaryEnsemble& g);

/// G1 (x) G2 as an explicit ensemble of dimension N1*N2 and degree D1*D2.
/// Kraus order: index d*D2 + e holds U_d (x) V_e (d outer, e inner).
MixedUnitaryEnsemble tensor_channels(const MixedUnitaryEnsemble& g1,
                                     const MixedUnitaryEnsemble& g2,
                                     Index cap = kDefaultDimensionCap);

/// The degree-1 ensemble {I} on `dim`; the identity channel.
MixedUnitaryEnsemble identity_ensemble(Index dim);

/// {I, X, Y, Z} on dimension 2. Annihilates every traceless operator, so its
/// expander parameter is exactly 0.
MixedUnitaryEnsemble pauli_ensemble();

/// Ensemble of permutation unitaries, one per permutation. For permutations
/// drawn from a graph's permutation decomposition this restricts to the
/// classical random walk on diagonal operators.
MixedUnitaryEnsemble permutation_ensemble(
    const std::vector<std::vector<Index>>& perms, std::string label = "");

}  // namespace qzz

#endif  // QZZ_CHANNEL_HPP
