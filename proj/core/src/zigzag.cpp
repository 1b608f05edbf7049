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

#include "qzz/zigzag.hpp"

namespace qzz {

MixedUnitaryEnsemble LiftedUnitary::as_ensemble() const {
  std::vector<UnitaryMatrix> us;
  us.push_back(u_);
  return MixedUnitaryEnsemble(std::move(us), "lifted");
}

LiftedUnitary lift(const MixedUnitaryEnsemble& g1, Index cap) {
  const Index n1 = g1.dim();
  const Index d1 = g1.degree();
  const Index dim = n1 * d1;
  if (dim > cap) {
    throw DimensionCapError("lift: dimension " + std::to_string(dim) +
                            " exceeds the materialization cap " + std::to_string(cap));
  }
  ComplexMatrix u = ComplexMatrix::Zero(dim, dim);
  for (Index b = 0; b < d1; ++b) {
    const ComplexMatrix& ub = g1.unitary(b).matrix();
    for (Index ap = 0; ap < n1; ++ap) {
      for (Index a = 0; a < n1; ++a) {
        u(ap * d1 + b, a * d1 + b) = ub(ap, a);
      }
    }
  }
  return LiftedUnitary(UnitaryMatrix::from_validated(std::move(u)), n1, d1);
}

MixedUnitaryEnsemble zigzag(const MixedUnitaryEnsemble& g1,
                            const MixedUnitaryEnsemble& g2, Index cap) {
  if (g2.dim() != g1.degree()) {
    throw DimensionError(
        "zigzag: the seed channel must act on a space of dimension equal to the "
        "regularity of the first factor (g1 is " + std::to_string(g1.degree()) +
        "-regular, g2 has dimension " + std::to_string(g2.dim()) + ")");
  }
  const Index n1 = g1.dim();
  const Index d2 = g2.degree();
  const LiftedUnitary lifted = lift(g1, cap);
  const ComplexMatrix& udot = lifted.unitary().matrix();
  const ComplexMatrix eye1 = ComplexMatrix::Identity(n1, n1);

  // Precompute I (x) V_a once per seed unitary.
  std::vector<ComplexMatrix> wide;
  wide.reserve(static_cast<std::size_t>(d2));
  for (Index a = 0; a < d2; ++a) {
    wide.push_back(tensor(eye1, g2.unitary(a).matrix(), cap));
  }

  std::vector<UnitaryMatrix> us;
  us.reserve(static_cast<std::size_t>(d2 * d2));
  for (Index a = 0; a < d2; ++a) {
    const ComplexMatrix right = udot * wide[static_cast<std::size_t>(a)].adjoint();
    for (Index b = 0; b < d2; ++b) {
      us.push_back(UnitaryMatrix::from_validated(wide[static_cast<std::size_t>(b)] * right));
    }
  }
  return MixedUnitaryEnsemble(std::move(us),
                              "zigzag(" + g1.label() + "," + g2.label() + ")");
}

ComplexMatrix project_parallel(const ComplexMatrix& x, Index dim1, Index dim2) {
  return tensor(partial_trace_second(x, dim1, dim2), maximally_mixed(dim2));
}

ComplexMatrix project_perp(const ComplexMatrix& x, Index dim1, Index dim2) {
  return x - project_parallel(x, dim1, dim2);
}

}  // namespace qzz
