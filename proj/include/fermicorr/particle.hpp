// Copyright 2026 The fermicorr Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file particle.hpp
 * @brief Particle-picture measures: one-particle reduced density matrix,
 *        nonfreeness and the two-fermion quantum nonfreeness.
 */

#pragma once

#include <fermicorr/measures.hpp>

namespace fermicorr {

/// (ρ₁)_ij = Tr[ρ f†_j f_i], trace-normalized to the particle number.
struct OneRDM {
  Matrix entries;

  /// Natural occupation numbers, ascending.
  RealVector occupations() const { return hermitian_eigenvalues(entries); }
  double particle_number() const { return entries.trace().real(); }
};

OneRDM one_rdm(const DensityMatrix& rho);

/// S(ρ₁) + S(1 - ρ₁) - S(ρ).
EntropyValue nonfreeness(const DensityMatrix& rho);

/**
 * K_ij = Σ ε^{abcd} w⁽ⁱ⁾_ab w⁽ʲ⁾_cd for N = 2 fermions in d = 4 modes, where
 * √λ_i |v_i⟩ = Σ_ab w⁽ⁱ⁾_ab f†_a f†_b |0⟩ runs over the nonzero spectral terms.
 * K is complex symmetric, so |κ| are taken as its singular values.
 */
struct KMatrix {
  Matrix entries;
  RealVector kappa;  // |κ_i|, descending

  double trace_norm() const { return kappa.sum(); }
};

/// Eigenvalues of ρ at or below this are dropped before assembling K.
inline constexpr double kPruneTol = 1e-14;

/// Throws std::invalid_argument unless ρ lives on the N=2 sector of 4 modes.
KMatrix schliemann_k(const DensityMatrix& rho);

/// max(0, 2 max|κ| - Σ|κ|).
double quantum_nonfreeness(const DensityMatrix& rho);

/// Threshold for "no quantum nonfreeness".
inline constexpr double kQnfTol = 1e-9;

/// Action of a one-particle unitary u (d x d) on the two-particle sector,
/// in the ascending configuration order of sector_basis(d, 2).
Matrix pair_rotation(const Matrix& u);

/// Same on the full Fock space (all sectors), for d <= kMaxModes.
Matrix fock_rotation(const Matrix& u);

}  // namespace fermicorr
