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

#include "qzz/channel.hpp"

#include <utility>

namespace qzz {

MixedUnitaryEnsemble::MixedUnitaryEnsemble(std::vector<UnitaryMatrix> unitaries,
                                           std::string label)
    : dim_(0), unitaries_(std::move(unitaries)), label_(std::move(label)) {
  if (unitaries_.empty()) {
    throw DimensionError("MixedUnitaryEnsemble: empty Kraus list");
  }
  dim_ = unitaries_.front().dim();
  for (std::size_t d = 0; d < unitaries_.size(); ++d) {
    if (unitaries_[d].dim() != dim_) {
      throw DimensionError("MixedUnitaryEnsemble: unitary " + std::to_string(d) +
                           " has dimension " + std::to_string(unitaries_[d].dim()) +
                           ", expected " + std::to_string(dim_));
    }
  }
}

ComplexMatrix MixedUnitaryEnsemble::apply(const ComplexMatrix& x) const {
  if (x.rows() != dim_ || x.cols() != dim_) {
    throw DimensionError("apply: operator dimension " + std::to_string(x.rows()) +
                         "x" + std::to_string(x.cols()) +
                         " does not match channel dimension " + std::to_string(dim_));
  }
  const Index deg = degree();
  std::vector<ComplexMatrix> terms;
  terms.reserve(static_cast<std::size_t>(deg));
  for (Index d = 0; d < deg; ++d) {
    const ComplexMatrix& u = unitaries_[static_cast<std::size_t>(d)].matrix();
    terms.push_back(u * x * u.adjoint());
  }
  // Pairwise tree reduction in index order.
  for (Index stride = 1; stride < deg; stride *= 2) {
    for (Index i = 0; i + stride < deg; i += 2 * stride) {
      terms[static_cast<std::size_t>(i)] += terms[static_cast<std::size_t>(i + stride)];
    }
  }
  return terms.front() / static_cast<double>(deg);
}

MixedUnitaryEnsemble adjoint_channel(const MixedUnitaryEnsemble& g) {
  std::vector<UnitaryMatrix> us;
  us.reserve(static_cast<std::size_t>(g.degree()));
  for (Index d = 0; d < g.degree(); ++d) {
    us.push_back(g.unitary(d).adjoint());
  }
  return MixedUnitaryEnsemble(std::move(us), "adjoint(" + g.label() + ")");
}

MixedUnitaryEnsemble square(const MixedUnitaryEnsemble& g) {
  const Index degree = g.degree();
  std::vector<UnitaryMatrix> us;
  us.reserve(static_cast<std::size_t>(degree * degree));
  for (Index d1 = 0; d1 < degree; ++d1) {
    for (Index d2 = 0; d2 < degree; ++d2) {
      us.push_back(UnitaryMatrix::from_validated(g.unitary(d2).matrix() *
                                                 g.unitary(d1).matrix()));
    }
  }
  return MixedUnitaryEnsemble(std::move(us), "square(" + g.label() + ")");
}

MixedUnitaryEnsemble tensor_channels(const MixedUnitaryEnsemble& g1,
                                     const MixedUnitaryEnsemble& g2, Index cap) {
  std::vector<UnitaryMatrix> us;
  us.reserve(static_cast<std::size_t>(g1.degree() * g2.degree()));
  for (Index d = 0; d < g1.degree(); ++d) {
    for (Index e = 0; e < g2.degree(); ++e) {
      us.push_back(UnitaryMatrix::from_validated(
          tensor(g1.unitary(d).matrix(), g2.unitary(e).matrix(), cap)));
    }
  }
  return MixedUnitaryEnsemble(std::move(us),
                              "tensor(" + g1.label() + "," + g2.label() + ")");
}

MixedUnitaryEnsemble identity_ensemble(Index dim) {
  std::vector<UnitaryMatrix> us;
  us.push_back(UnitaryMatrix::from_validated(ComplexMatrix::Identity(dim, dim)));
  return MixedUnitaryEnsemble(std::move(us), "identity(" + std::to_string(dim) + ")");
}

MixedUnitaryEnsemble pauli_ensemble() {
  ComplexMatrix x(2, 2), y(2, 2), z(2, 2);
  x << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0);
  y << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  z << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0);
  std::vector<UnitaryMatrix> us;
  us.push_back(UnitaryMatrix::from_validated(ComplexMatrix::Identity(2, 2)));
  us.push_back(UnitaryMatrix(std::move(x)));
  us.push_back(UnitaryMatrix(std::move(y)));
  us.push_back(UnitaryMatrix(std::move(z)));
  return MixedUnitaryEnsemble(std::move(us), "pauli");
}

MixedUnitaryEnsemble permutation_ensemble(
    const std::vector<std::vector<Index>>& perms, std::string label) {
  std::vector<UnitaryMatrix> us;
  us.reserve(perms.size());
  for (const auto& perm : perms) {
    us.push_back(permutation_unitary(perm));
  }
  return MixedUnitaryEnsemble(std::move(us), std::move(label));
}

}  // namespace qzz
