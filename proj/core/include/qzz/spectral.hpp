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

#ifndef QZZ_SPECTRAL_HPP
#define QZZ_SPECTRAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qzz/channel.hpp"
#include "qzz/linalg.hpp"

namespace qzz {

// The expander parameter lambda-bar of a channel G is the operator norm of G
// restricted to the subspace of traceless operators (equivalently, operators
// Hilbert-Schmidt-orthogonal to the completely mixed state): the smallest
// number such that ||G(A)|| <= lambda-bar ||A|| whenever Tr(A) = 0. The
// worst case ranges over all of L(V), not just Hermitian operators.

enum class SpectralMethod { kExactSvd, kPowerIteration };

std::string to_string(SpectralMethod m);

struct SpectralEstimate {
  double lambda = 0.0;
  SpectralMethod method = SpectralMethod::kExactSvd;
  int iterations = 0;      // 0 for the direct method
  double residual = 0.0;   // power method: |Rayleigh quotient change| at stop
  std::uint64_t seed = 0;  // power method only
  bool converged = true;
};

/// Largest dimension for which lambda_exact will build the N^2 x N^2
/// superoperator matrix (at 64 that matrix is 4096 x 4096).
inline constexpr Index kDefaultExactDimCap = 64;

/// The matrix of X -> apply(g, X) in the standard operator basis with
/// row-major vectorization: S = (1/D) sum_d U_d (x) conj(U_d), of size N^2.
ComplexMatrix superoperator_matrix(const MixedUnitaryEnsemble& g);

/// Orthonormal Hermitian basis of the traceless operators on C^n, in a fixed
/// generalized Gell-Mann order: for each index pair j < k (lexicographic) the
/// symmetric element (E_jk + E_kj)/sqrt(2) then the antisymmetric element
/// -i(E_jk - E_kj)/sqrt(2), followed by the n-1 diagonal elements
/// (E_00 + ... + E_{l-1,l-1} - l E_ll)/sqrt(l(l+1)) for l = 1..n-1.
/// Prepending I/sqrt(n) (the normalized completely mixed state) makes this an
/// orthonormal basis of all of L(C^n).
std::vector<ComplexMatrix> traceless_operator_basis(Index n);

/// The matrix of X -> apply(g, X) expressed in an arbitrary operator basis:
/// entry (i, j) = <B_i, G(B_j)>. The basis is not required to span L(V); for
/// an invariant subspace this is the restriction of the channel to it.
ComplexMatrix superoperator_in_basis(const MixedUnitaryEnsemble& g,
                                     const std::vector<ComplexMatrix>& basis);

/// Largest singular value of a dense matrix, by direct decomposition.
/// Small matrices use a singular value decomposition; larger ones go through
/// the Hermitian eigenproblem of A^dag A (LAPACK when available).
double largest_singular_value(const ComplexMatrix& a);
double largest_singular_value(const Eigen::MatrixXd& a);

/// Exact expander parameter: builds the superoperator matrix in the
/// orthonormal operator basis whose first element is the normalized
/// completely mixed state, drops that first row and column (the restriction
/// to traceless operators on both sides), and returns the largest singular
/// value of the remaining block. Throws DimensionCapError above `dim_cap`;
/// use lambda_power there instead.
SpectralEstimate lambda_exact(const MixedUnitaryEnsemble& g,
                              Index dim_cap = kDefaultExactDimCap);

struct PowerOptions {
  double tol = 1e-10;       // stop when the Rayleigh quotient stagnates by <= tol
  int max_iter = 10000;     // per restart
  int restarts = 3;
  std::uint64_t seed = 0x715ec7a1u;
};

/// Matrix-free power iteration for lambda-bar: iterates M^dag M where
/// M = P o G o P and P(X) = X - Tr(X) I~, never materializing the N^2 x N^2
/// matrix. Returns sqrt of the best converged Rayleigh quotient across
/// restarts. `converged` is false if no restart stagnated within max_iter;
/// the best estimate so far is still returned.
SpectralEstimate lambda_power(const MixedUnitaryEnsemble& g,
                              const PowerOptions& opts = {});

}  // namespace qzz

#endif  // QZZ_SPECTRAL_HPP
