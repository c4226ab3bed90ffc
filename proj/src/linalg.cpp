// Copyright 2026 The fermicorr Authors
// SPDX-License-Identifier: Apache-2.0

#include <fermicorr/linalg.hpp>

#include <cmath>

namespace fermicorr {

HermitianEigen hermitian_eigen(const Matrix& m) {
  const Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector hermitian_eigenvalues(const Matrix& m) {
  const Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

double entropy_of_spectrum(const RealVector& eigenvalues) {
  double s = 0.0;
  for (double lambda : eigenvalues) {
    if (lambda > 0.0) s -= lambda * std::log(lambda);
  }
  return s;
}

double frobenius_norm(const Matrix& m) { return m.norm(); }

double hermiticity_error(const Matrix& m) { return (m - m.adjoint()).cwiseAbs().maxCoeff(); }

}  // namespace fermicorr
