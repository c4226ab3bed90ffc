// Copyright 2026 The fermicorr Authors
// SPDX-License-Identifier: Apache-2.0

#include <fermicorr/random_states.hpp>

#include <stdexcept>

namespace fermicorr {

Matrix random_ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = Complex(normal(rng), normal(rng));
  }
  return m;
}

Matrix random_unitary(Eigen::Index n, Rng& rng) {
  const Eigen::HouseholderQR<Matrix> qr(random_ginibre(n, n, rng));
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix r = qr.matrixQR();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

Matrix random_hermitian(Eigen::Index n, Rng& rng) {
  const Matrix g = random_ginibre(n, n, rng);
  return 0.5 * (g + g.adjoint());
}

Vector random_vector(Eigen::Index n, Rng& rng) {
  Vector v = random_ginibre(n, 1, rng).col(0);
  return v / v.norm();
}

Matrix random_density_matrix(Eigen::Index n, Rng& rng, Eigen::Index rank) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  const Matrix g = random_ginibre(n, rank > 0 ? rank : n, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

DensityMatrix random_fock_state(int modes, Rng& rng, Eigen::Index rank) {
  const Eigen::Index n = Eigen::Index{1} << modes;
  return DensityMatrix::fock(random_density_matrix(n, rng, rank), modes);
}

DensityMatrix random_sector_state(int modes, int particles, Rng& rng, Eigen::Index rank) {
  std::vector<Bits> basis = sector_basis(modes, particles);
  const auto n = static_cast<Eigen::Index>(basis.size());
  return DensityMatrix(random_density_matrix(n, rng, rank), std::move(basis), modes);
}

}  // namespace fermicorr
