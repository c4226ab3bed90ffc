// Copyright 2026 The fermicorr Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace fermicorr {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Eigenvalues below this magnitude (and above -kPsdTol) are treated as zero.
inline constexpr double kPsdTol = 1e-10;

struct HermitianEigen {
  RealVector values;  // ascending
  Matrix vectors;
};

/// Eigendecomposition of the Hermitian part of m.
HermitianEigen hermitian_eigen(const Matrix& m);
RealVector hermitian_eigenvalues(const Matrix& m);

/// -Σ λ log λ with λ in [-kPsdTol, 0] clipped to zero; 0 log 0 = 0.
double entropy_of_spectrum(const RealVector& eigenvalues);

double frobenius_norm(const Matrix& m);
/// max |m_ij - conj(m_ji)|
double hermiticity_error(const Matrix& m);

/// f(m) = V f(Λ) V† for Hermitian m.
template <class F>
Matrix hermitian_function(const Matrix& m, F&& f) {
  const HermitianEigen eig = hermitian_eigen(m);
  RealVector mapped(eig.values.size());
  for (Eigen::Index i = 0; i < mapped.size(); ++i) mapped(i) = f(eig.values(i));
  return eig.vectors * mapped.asDiagonal() * eig.vectors.adjoint();
}

}  // namespace fermicorr
