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

#ifndef QZZ_LINALG_HPP
#define QZZ_LINALG_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qzz {

using Complex = std::complex<double>;
using Index = Eigen::Index;

/// Dense row-major complex matrix. Every operator in L(V) is one of these;
/// all dimensions at play are small enough that dense storage is the right
/// default.
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Hard ceiling on the row/column count of any matrix we agree to
/// materialize. Compositions can blow up dimensions exponentially, so
/// overflowing this cap is reported as an explicit refusal instead of an
/// allocation failure.
inline constexpr Index kDefaultDimensionCap = Index{1} << 16;

/// Relative unitarity tolerance: U passes if ||U^dag U - I||_F <= kUnitaryTol * n.
inline constexpr double kUnitaryTol = 1e-10;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operands whose shapes cannot be combined (or factored as requested).
struct DimensionError : Error {
  using Error::Error;
};

/// A result would exceed the configured materialization cap.
struct DimensionCapError : Error {
  using Error::Error;
};

/// A matrix failed the unitarity check. `kraus_index` is >= 0 when the
/// failure is attributable to a specific member of an ensemble.
struct UnitarityError : Error {
  explicit UnitarityError(const std::string& what, Index index = -1)
      : Error(what), kraus_index(index) {}
  Index kraus_index;
};

struct IoError : Error {
  using Error::Error;
};

bool all_finite(const ComplexMatrix& m);

/// ||U^dag U - I||_F, the quantity bounded by the unitarity invariant.
double unitarity_defect(const ComplexMatrix& m);

/// A square matrix that has been checked (or is known by construction) to be
/// unitary. `validated()` reports whether the numeric check actually ran;
/// products, adjoints and tensor products of unitaries are closed under
/// unitarity and skip the re-check.
class UnitaryMatrix {
 public:
  /// Validating constructor. Throws UnitarityError if the defect exceeds
  /// kUnitaryTol * n, DimensionError if the matrix is not square, and
  /// Error on non-finite entries.
  explicit UnitaryMatrix(ComplexMatrix m);

  /// Wraps a matrix that is unitary by construction (e.g. a product of
  /// validated unitaries) without running the O(n^3) check.
  static UnitaryMatrix from_validated(ComplexMatrix m);

  const ComplexMatrix& matrix() const { return mat_; }
  Index dim() const { return mat_.rows(); }
  bool validated() const { return validated_; }

  UnitaryMatrix adjoint() const;

  /// Runs (or re-runs) the numeric unitarity check, updating the flag.
  void validate();

 private:
  UnitaryMatrix(ComplexMatrix m, bool validated);

  ComplexMatrix mat_;
  bool validated_;
};

/// Hilbert-Schmidt inner product <X, Y> = Tr(X Y^dag). The induced norm is
/// the Frobenius norm, the only norm used anywhere in this library.
Complex hs_inner(const ComplexMatrix& x, const ComplexMatrix& y);

double hs_norm(const ComplexMatrix& x);

/// Kronecker product A (x) B, first factor major: entry
/// ((i_a * rows_b + i_b), (j_a * cols_b + j_b)) = A(i_a, j_a) * B(i_b, j_b),
/// each computed as a single multiplication so that nested products have a
/// reproducible floating-point evaluation order. Throws DimensionCapError
/// when the result would exceed `cap` rows or columns.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b,
                     Index cap = kDefaultDimensionCap);

/// Partial trace over the second tensor factor: X on dim1*dim2 -> Tr_2(X)
/// on dim1. Preserves the trace.
ComplexMatrix partial_trace_second(const ComplexMatrix& x, Index dim1,
                                   Index dim2);

/// The completely mixed state on `dim`: identity normalized to unit trace.
ComplexMatrix maximally_mixed(Index dim);

/// Haar-distributed random unitary: QR of a complex Ginibre matrix with the
/// R-diagonal phase correction. Deterministic for a fixed seed.
UnitaryMatrix haar_unitary(Index n, std::uint64_t seed);

/// Permutation unitary U|j> = |perm[j]>. Throws DimensionError unless `perm`
/// is a bijection on {0, ..., n-1}.
UnitaryMatrix permutation_unitary(const std::vector<Index>& perm);

/// Splitmix64 step, used to derive independent per-item seeds from one.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace qzz

#endif  // QZZ_LINALG_HPP
