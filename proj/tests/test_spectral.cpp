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

#include "qzz/spectral.hpp"

#include <doctest.h>

#include "oracles.hpp"

using namespace qzz;

namespace {

MixedUnitaryEnsemble random_ensemble(Index n, Index d, std::uint64_t seed) {
  std::vector<UnitaryMatrix> us;
  for (Index k = 0; k < d; ++k) {
    us.push_back(haar_unitary(n, mix_seed(seed, static_cast<std::uint64_t>(k))));
  }
  return MixedUnitaryEnsemble(std::move(us), "random");
}

MixedUnitaryEnsemble circulant_walk(Index n, const std::vector<Index>& shifts) {
  std::vector<std::vector<Index>> perms;
  for (Index s : shifts) {
    std::vector<Index> perm(static_cast<std::size_t>(n));
    for (Index j = 0; j < n; ++j) {
      perm[static_cast<std::size_t>(j)] = ((j + s) % n + n) % n;
    }
    perms.push_back(std::move(perm));
  }
  return permutation_ensemble(perms, "circulant");
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("superoperator_matrix matches the basis-image oracle") {
  const MixedUnitaryEnsemble g = random_ensemble(3, 2, 41);
  const ComplexMatrix fast = superoperator_matrix(g);
  const ComplexMatrix slow = oracle::superoperator(g);
  CHECK((fast - slow).norm() <= 1e-13 * slow.norm());
}

TEST_CASE("the traceless basis is orthonormal, traceless, and hermitian") {
  for (Index n : {2, 3, 5}) {
    const auto basis = traceless_operator_basis(n);
    REQUIRE(static_cast<Index>(basis.size()) == n * n - 1);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(std::abs(basis[i].trace()) <= 1e-14);
      CHECK((basis[i] - basis[i].adjoint()).norm() <= 1e-14);
      for (std::size_t j = 0; j <= i; ++j) {
        const Complex overlap = hs_inner(basis[i], basis[j]);
        CHECK(std::abs(overlap - (i == j ? Complex(1, 0) : Complex(0, 0))) <= 1e-13);
      }
    }
  }
}

TEST_CASE("the traceless basis plus the mixed state reconstructs any operator") {
  const Index n = 4;
  const ComplexMatrix x = oracle::ginibre(n, n, 42);
  const ComplexMatrix eye_part =
      ComplexMatrix::Identity(n, n) / std::sqrt(static_cast<double>(n));
  ComplexMatrix rebuilt = hs_inner(x, eye_part) * eye_part;
  for (const ComplexMatrix& b : traceless_operator_basis(n)) {
    rebuilt += hs_inner(x, b) * b;
  }
  CHECK((rebuilt - x).norm() <= 1e-12 * x.norm());
}

TEST_CASE("superoperator_in_basis over the full traceless basis reproduces lambda") {
  const MixedUnitaryEnsemble g = random_ensemble(3, 2, 43);
  const ComplexMatrix block = superoperator_in_basis(g, traceless_operator_basis(3));
  CHECK(oracle::sigma_max(block) == doctest::Approx(lambda_exact(g).lambda).epsilon(1e-11));
}

TEST_CASE("lambda_exact matches the independent oracle on random ensembles") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Index n = 2 + static_cast<Index>(seed % 3) * 2;  // 2, 4, 6
    const Index d = 1 + static_cast<Index>(seed % 4);
    const MixedUnitaryEnsemble g = random_ensemble(n, d, 1000 + seed);
    CHECK(lambda_exact(g).lambda == doctest::Approx(oracle::lambda(g)).epsilon(1e-10));
  }
}

TEST_CASE("lambda_exact knows the classic fixed points") {
  CHECK(lambda_exact(identity_ensemble(3)).lambda == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(lambda_exact(pauli_ensemble()).lambda <= 1e-12);
  std::vector<UnitaryMatrix> one;
  one.push_back(haar_unitary(4, 44));
  CHECK(lambda_exact(MixedUnitaryEnsemble(std::move(one))).lambda ==
        doctest::Approx(1.0).epsilon(1e-12));
  // N = 1: the traceless subspace is empty.
  CHECK(lambda_exact(identity_ensemble(1)).lambda == 0.0);
}

TEST_CASE("lambda_exact refuses dimensions beyond its cap") {
  const MixedUnitaryEnsemble g = random_ensemble(8, 1, 45);
  CHECK_THROWS_WITH_AS(lambda_exact(g, 4), doctest::Contains("lambda_power"),
                       DimensionCapError);
}

TEST_CASE("lambda_power agrees with lambda_exact") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const Index n = (seed % 2 == 0) ? 4 : 8;
    const Index d = 2 + static_cast<Index>(seed % 3);
    const MixedUnitaryEnsemble g = random_ensemble(n, d, 2000 + seed);
    const double exact = lambda_exact(g).lambda;
    PowerOptions opts;
    opts.seed = 3000 + seed;
    const SpectralEstimate est = lambda_power(g, opts);
    CHECK(est.converged);
    CHECK(est.lambda == doctest::Approx(exact).epsilon(1e-8));
    CHECK(est.lambda <= exact + 1e-8);
  }
}

TEST_CASE("lambda_power handles the degenerate channels too") {
  CHECK(lambda_power(pauli_ensemble()).lambda <= 1e-10);
  const SpectralEstimate id_est = lambda_power(identity_ensemble(4));
  CHECK(id_est.lambda == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(lambda_power(identity_ensemble(1)).lambda == 0.0);
}

TEST_CASE("lambda is invariant under a fixed unitary conjugation of the ensemble") {
  const MixedUnitaryEnsemble g = random_ensemble(4, 3, 46);
  const UnitaryMatrix w = haar_unitary(4, 47);
  std::vector<UnitaryMatrix> conjugated;
  for (Index d = 0; d < g.degree(); ++d) {
    conjugated.push_back(UnitaryMatrix::from_validated(
        w.matrix() * g.unitary(d).matrix() * w.matrix().adjoint()));
  }
  const MixedUnitaryEnsemble gw(std::move(conjugated));
  CHECK(lambda_exact(gw).lambda == doctest::Approx(lambda_exact(g).lambda).epsilon(1e-9));
}

TEST_CASE("lambda of the adjoint channel equals lambda of the channel") {
  const MixedUnitaryEnsemble g = random_ensemble(4, 2, 48);
  CHECK(lambda_exact(adjoint_channel(g)).lambda ==
        doctest::Approx(lambda_exact(g).lambda).epsilon(1e-9));
}

TEST_CASE("lambda stays within [0, 1] up to rounding") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const MixedUnitaryEnsemble g =
        random_ensemble(2 + static_cast<Index>(seed), 1 + static_cast<Index>(seed % 3),
                        4000 + seed);
    const double l = lambda_exact(g).lambda;
    CHECK(l >= -1e-12);
    CHECK(l <= 1.0 + 1e-10);
  }
}

TEST_CASE("diagonal restriction of a permutation channel is the classical walk") {
  // Triangle: 3-vertex circulant with shifts +1 and -1; the classical walk
  // matrix has eigenvalues 1, -1/2, -1/2, so the second singular value is 1/2.
  const MixedUnitaryEnsemble g = circulant_walk(3, {1, -1});
  const auto basis = traceless_operator_basis(3);
  // Diagonal elements come last: indices n(n-1) .. n^2-2.
  std::vector<ComplexMatrix> diag_basis(basis.end() - 2, basis.end());
  const ComplexMatrix block = superoperator_in_basis(g, diag_basis);
  const double quantum_diag = oracle::sigma_max(block);
  CHECK(quantum_diag == doctest::Approx(0.5).epsilon(1e-12));

  Eigen::MatrixXd walk = Eigen::MatrixXd::Zero(3, 3);
  for (Index j = 0; j < 3; ++j) {
    walk((j + 1) % 3, j) += 0.5;
    walk((j + 2) % 3, j) += 0.5;
  }
  CHECK(quantum_diag ==
        doctest::Approx(oracle::classical_second_singular(walk)).epsilon(1e-10));
}

}  // TEST_SUITE
