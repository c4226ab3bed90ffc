// Copyright 2026 The fermicorr Authors
// SPDX-License-Identifier: Apache-2.0

// Independent reference implementations used only by the tests. Nothing here
// calls into the library's Fock-space machinery.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Kronecker product, first factor most significant.
Matrix kron(const Matrix& a, const Matrix& b);

/// f†_i on d modes from Pauli strings: Z ⊗ ... ⊗ Z ⊗ σ⁺ on mode i, mode 0
/// least significant in the basis index.
Matrix creation(int d, int i);

/// Hubbard dimer (L↑, L↓, R↑, R↓) Hamiltonian on the full Fock space.
Matrix dimer_hamiltonian(double t, double U = 1.0);

/// Restriction of a full-Fock operator to the configurations with `particles` bits set.
Matrix restrict_to_sector(const Matrix& op, int d, int particles);

/// Sorted eigenvalues of a Hermitian matrix.
Eigen::VectorXd eigenvalues(const Matrix& h);

/// Partial trace of an operator on C^{da} ⊗ C^{db} with the A index fastest.
Matrix trace_out_b(const Matrix& m, int da, int db);
Matrix trace_out_a(const Matrix& m, int da, int db);

/// -Σ λ log λ.
double entropy(const Matrix& rho);

/// (|L↑R↓⟩ - |L↓R↑⟩)/√2 as a 16 x 16 projector.
Matrix singlet_fock();

/// ¼ Σ_{σσ'} |Lσ, Rσ'⟩⟨Lσ, Rσ'| on the full Fock space.
Matrix dissociated_mixture_fock();

/// Relative entropy of entanglement of a 16 x 16 dimer state after the local
/// particle-number projection, for states whose one-electron-per-site block is
/// a two-qubit Werner state. Throws std::domain_error otherwise.
double werner_ree_after_projection(const Matrix& rho_fock);

}  // namespace oracle
