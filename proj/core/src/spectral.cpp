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

#include <algorithm>
#include <cmath>
#include <utility>

#ifdef QZZ_HAVE_LAPACKE
#include <lapacke.h>
#endif

namespace qzz {

std::string to_string(SpectralMethod m) {
  switch (m) {
    case SpectralMethod::kExactSvd:
      return "exact";
    case SpectralMethod::kPowerIteration:
      return "power";
  }
  return "?";
}

ComplexMatrix superoperator_matrix(const MixedUnitaryEnsemble& g) {
  const Index n = g.dim();
  const Index n2 = n * n;
  ComplexMatrix s = ComplexMatrix::Zero(n2, n2);
  for (Index d = 0; d < g.degree(); ++d) {
    const ComplexMatrix& u = g.unitary(d).matrix();
    s += tensor(u, u.conjugate(), n2);
  }
  return s / static_cast<double>(g.degree());
}

namespace {

// A traceless basis element as a sparse list of (vectorized index, coeff)
// pairs; row-major vectorization index of entry (r, c) on C^n is r*n + c.
struct SparseOp {
  std::vector<std::pair<Index, Complex>> entries;
};

std::vector<SparseOp> sparse_traceless_basis(Index n) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<SparseOp> basis;
  basis.reserve(static_cast<std::size_t>(n * n - 1));
  for (Index j = 0; j < n; ++j) {
    for (Index k = j + 1; k < n; ++k) {
      SparseOp sym;
      sym.entries = {{j * n + k, Complex(inv_sqrt2, 0)}, {k * n + j, Complex(inv_sqrt2, 0)}};
      basis.push_back(std::move(sym));
      SparseOp asym;
      asym.entries = {{j * n + k, Complex(0, -inv_sqrt2)}, {k * n + j, Complex(0, inv_sqrt2)}};
      basis.push_back(std::move(asym));
    }
  }
  for (Index l = 1; l < n; ++l) {
    SparseOp diag;
    const double scale = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    for (Index m = 0; m < l; ++m) {
      diag.entries.emplace_back(m * n + m, Complex(scale, 0));
    }
    diag.entries.emplace_back(l * n + l, Complex(-static_cast<double>(l) * scale, 0));
    basis.push_back(std::move(diag));
  }
  return basis;
}

}  // namespace

std::vector<ComplexMatrix> traceless_operator_basis(Index n) {
  if (n < 1) {
    throw DimensionError("traceless_operator_basis: n must be >= 1");
  }
  std::vector<ComplexMatrix> out;
  for (const SparseOp& op : sparse_traceless_basis(n)) {
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    for (const auto& [idx, coeff] : op.entries) {
      m(idx / n, idx % n) = coeff;
    }
    out.push_back(std::move(m));
  }
  return out;
}

ComplexMatrix superoperator_in_basis(const MixedUnitaryEnsemble& g,
                                     const std::vector<ComplexMatrix>& basis) {
  const Index m = static_cast<Index>(basis.size());
  ComplexMatrix out(m, m);
  for (Index j = 0; j < m; ++j) {
    const ComplexMatrix image = g.apply(basis[static_cast<std::size_t>(j)]);
    for (Index i = 0; i < m; ++i) {
      out(i, j) = hs_inner(image, basis[static_cast<std::size_t>(i)]);
    }
  }
  return out;
}

namespace {

#ifdef QZZ_HAVE_LAPACKE
// Largest eigenvalue of a Hermitian matrix via zheevr. The row-major buffer
// is handed to the column-major interface unchanged: that reads H^T =
// conj(H), which has the same (real) spectrum.
double largest_hermitian_eigenvalue_lapack(ComplexMatrix h) {
  const lapack_int n = static_cast<lapack_int>(h.rows());
  std::vector<double> w(static_cast<std::size_t>(n));
  lapack_int found = 0;
  std::vector<lapack_int> isuppz(2);
  const lapack_int info = LAPACKE_zheevr(
      LAPACK_COL_MAJOR, 'N', 'I', 'U', n,
      reinterpret_cast<lapack_complex_double*>(h.data()), n, 0.0, 0.0, n, n,
      0.0, &found, w.data(), nullptr, 1, isuppz.data());
  if (info != 0) {
    throw Error("zheevr failed with info = " + std::to_string(info));
  }
  return w[0];
}

double largest_symmetric_eigenvalue_lapack(Eigen::MatrixXd h) {
  const lapack_int n = static_cast<lapack_int>(h.rows());
  std::vector<double> w(static_cast<std::size_t>(n));
  lapack_int found = 0;
  std::vector<lapack_int> isuppz(2);
  const lapack_int info =
      LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'N', 'I', 'U', n, h.data(), n, 0.0, 0.0,
                     n, n, 0.0, &found, w.data(), nullptr, 1, isuppz.data());
  if (info != 0) {
    throw Error("dsyevr failed with info = " + std::to_string(info));
  }
  return w[0];
}
#endif

}  // namespace

double largest_singular_value(const ComplexMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) {
    return 0.0;
  }
  if (std::min(a.rows(), a.cols()) <= 512) {
    Eigen::BDCSVD<ComplexMatrix> svd(a);
    return svd.singularValues()(0);
  }
  ComplexMatrix h = a.adjoint() * a;
#ifdef QZZ_HAVE_LAPACKE
  const double top = largest_hermitian_eigenvalue_lapack(std::move(h));
#else
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  const double top = es.eigenvalues().maxCoeff();
#endif
  return std::sqrt(std::max(0.0, top));
}

double largest_singular_value(const Eigen::MatrixXd& a) {
  if (a.rows() == 0 || a.cols() == 0) {
    return 0.0;
  }
  if (std::min(a.rows(), a.cols()) <= 512) {
    Eigen::BDCSVD<Eigen::MatrixXd> svd(a);
    return svd.singularValues()(0);
  }
  Eigen::MatrixXd h = a.transpose() * a;
#ifdef QZZ_HAVE_LAPACKE
  const double top = largest_symmetric_eigenvalue_lapack(std::move(h));
#else
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
  const double top = es.eigenvalues().maxCoeff();
#endif
  return std::sqrt(std::max(0.0, top));
}

SpectralEstimate lambda_exact(const MixedUnitaryEnsemble& g, Index dim_cap) {
  const Index n = g.dim();
  if (n > dim_cap) {
    throw DimensionCapError("lambda_exact: dimension " + std::to_string(n) +
                            " exceeds the exact-method cap " + std::to_string(dim_cap) +
                            "; use lambda_power instead");
  }
  SpectralEstimate est;
  est.method = SpectralMethod::kExactSvd;
  if (n == 1) {
    est.lambda = 0.0;  // the traceless subspace is empty
    return est;
  }

  // Superoperator in the basis {I~/||I~||, Gell-Mann...}: the first row and
  // column carry the fixed point, so the traceless restriction is the matrix
  // over the Gell-Mann elements alone. Both basis changes exploit that every
  // basis element has O(n) nonzero entries.
  const ComplexMatrix s = superoperator_matrix(g);
  const std::vector<SparseOp> basis = sparse_traceless_basis(n);
  const Index m = static_cast<Index>(basis.size());

  // TODO: s.col(idx) strides across the row-major superoperator; transposing
  // S once would make this pass cache-friendly at the dimension cap.
  ComplexMatrix s_cols(n * n, m);  // S * vec(B_j)
  for (Index j = 0; j < m; ++j) {
    s_cols.col(j).setZero();
    for (const auto& [idx, coeff] : basis[static_cast<std::size_t>(j)].entries) {
      s_cols.col(j) += coeff * s.col(idx);
    }
  }
  // <B_i, S B_j> with both operators Hermitian is a real number, so the
  // restriction is a real matrix; its singular values over the real span
  // equal those over the full complex traceless space (complexification
  // leaves singular values unchanged). The imaginary rounding residue
  // (~1e-16) is dropped.
  Eigen::MatrixXd restricted(m, m);
  for (Index i = 0; i < m; ++i) {
    const auto& rows = basis[static_cast<std::size_t>(i)].entries;
    for (Index j = 0; j < m; ++j) {
      Complex acc(0, 0);
      for (const auto& [idx, coeff] : rows) {
        acc += std::conj(coeff) * s_cols(idx, j);
      }
      restricted(i, j) = acc.real();
    }
  }
  est.lambda = largest_singular_value(restricted);
  return est;
}

namespace {

// X - Tr(X) I~, in place.
void project_traceless(ComplexMatrix& x) {
  const Complex tr = x.trace();
  const Complex shift = tr / static_cast<double>(x.rows());
  x.diagonal().array() -= shift;
}

struct PowerRun {
  double rayleigh = 0.0;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

PowerRun power_once(const MixedUnitaryEnsemble& g, const MixedUnitaryEnsemble& g_adj,
                    double tol, int max_iter, std::uint64_t seed) {
  const Index n = g.dim();
  ComplexMatrix x = haar_unitary(n, seed).matrix();
  project_traceless(x);
  x /= hs_norm(x);

  PowerRun run;
  double prev = -1.0;
  for (int k = 1; k <= max_iter; ++k) {
    ComplexMatrix y = g.apply(x);
    project_traceless(y);
    run.rayleigh = y.squaredNorm();  // ||M x||^2 with ||x|| = 1
    ComplexMatrix z = g_adj.apply(y);
    project_traceless(z);
    const double zn = hs_norm(z);
    run.iterations = k;
    if (zn == 0.0) {
      // The iterate was annihilated: the Rayleigh quotient is exact (e.g. the
      // Pauli channel sends every traceless operator to zero).
      run.residual = 0.0;
      run.converged = true;
      return run;
    }
    x = z / zn;
    run.residual = std::abs(run.rayleigh - prev);
    if (prev >= 0.0 && run.residual <= tol) {
      run.converged = true;
      return run;
    }
    prev = run.rayleigh;
  }
  return run;
}

}  // namespace

SpectralEstimate lambda_power(const MixedUnitaryEnsemble& g, const PowerOptions& opts) {
  SpectralEstimate est;
  est.method = SpectralMethod::kPowerIteration;
  est.seed = opts.seed;
  if (g.dim() == 1) {
    est.lambda = 0.0;
    return est;
  }
  if (opts.max_iter < 1 || opts.restarts < 1) {
    throw Error("lambda_power: max_iter and restarts must be >= 1");
  }
  const MixedUnitaryEnsemble g_adj = adjoint_channel(g);
  double best = -1.0;
  bool any_converged = false;
  double best_residual = 0.0;
  int total_iterations = 0;
  for (int r = 0; r < opts.restarts; ++r) {
    const PowerRun run =
        power_once(g, g_adj, opts.tol, opts.max_iter, mix_seed(opts.seed, static_cast<std::uint64_t>(r)));
    total_iterations += run.iterations;
    if (run.rayleigh > best) {
      best = run.rayleigh;
      best_residual = run.residual;
    }
    any_converged = any_converged || run.converged;
  }
  est.lambda = std::sqrt(std::max(0.0, best));
  est.iterations = total_iterations;
  est.residual = best_residual;
  est.converged = any_converged;
  return est;
}

}  // namespace qzz
