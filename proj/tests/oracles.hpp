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

// Independent reference computations the tests check the library against.
// These deliberately avoid the code paths used by the implementation:
// superoperators are built by applying the channel to standard basis
// elements (not by Kronecker sums), singular values come from Jacobi SVD,
// and the traceless restriction is formed with a Householder complement of
// the vectorized identity (not the Gell-Mann basis).

#ifndef QZZ_TESTS_ORACLES_HPP
#define QZZ_TESTS_ORACLES_HPP

#include <cstdint>
#include <vector>

#include "qzz/channel.hpp"
#include "qzz/construction.hpp"
#include "qzz/linalg.hpp"

namespace qzz::oracle {

/// Largest singular value by two-sided Jacobi SVD.
double sigma_max(const ComplexMatrix& m);

/// N^2 x N^2 superoperator matrix of the channel, column (k*n + l) holding
/// the row-major vectorization of apply(g, E_kl).
ComplexMatrix superoperator(const MixedUnitaryEnsemble& g);

/// Expander parameter: restrict the oracle superoperator to the orthogonal
/// complement of vec(I) on both sides (complement built by QR completion)
/// and take its largest singular value.
double lambda(const MixedUnitaryEnsemble& g);

/// All singular values of an operator X, for norm identities.
std::vector<double> singular_values(const ComplexMatrix& x);

/// Net size from brute-force word enumeration with the same dedup rule as
/// build_net: every word of length 0..max_len in BFS order, accepted if its
/// conjugation distance (computed via this file's sigma_max) to each
/// accepted word exceeds accuracy/2.
std::size_t word_net_count(const GeneratorSet& gens, int max_len, double accuracy);

/// Second-largest singular value of a classical walk matrix restricted to
/// the mean-zero subspace (the complement of the all-ones vector).
double classical_second_singular(const Eigen::MatrixXd& walk);

/// Deterministic complex Ginibre matrix, for random test operators.
ComplexMatrix ginibre(Index rows, Index cols, std::uint64_t seed);

/// Random traceless operator with unit Hilbert-Schmidt norm.
ComplexMatrix random_traceless(Index n, std::uint64_t seed);

/// Random density operator (Hermitian, positive, unit trace).
ComplexMatrix random_density(Index n, std::uint64_t seed);

}  // namespace qzz::oracle

#endif  // QZZ_TESTS_ORACLES_HPP
