// Copyright 2026 The fermicorr Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file random_states.hpp
 * @brief Seeded random matrices and states for property checks.
 */

#pragma once

#include <random>

#include <fermicorr/fock.hpp>

namespace fermicorr {

using Rng = std::mt19937_64;

/// Ginibre matrix with standard complex normal entries.
Matrix random_ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng);
/// Haar-random unitary.
Matrix random_unitary(Eigen::Index n, Rng& rng);
/// Hermitian matrix with Gaussian entries.
Matrix random_hermitian(Eigen::Index n, Rng& rng);
/// Random unit vector.
Vector random_vector(Eigen::Index n, Rng& rng);

/// Hilbert-Schmidt random density matrix of the given rank (0 = full).
Matrix random_density_matrix(Eigen::Index n, Rng& rng, Eigen::Index rank = 0);

/// Random state on the full Fock space of `modes` modes.
DensityMatrix random_fock_state(int modes, Rng& rng, Eigen::Index rank = 0);
/// Random state supported on the N-particle sector.
DensityMatrix random_sector_state(int modes, int particles, Rng& rng, Eigen::Index rank = 0);

}  // namespace fermicorr
