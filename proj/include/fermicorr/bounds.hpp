// Copyright 2026 The fermicorr Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file bounds.hpp
 * @brief Free-energy bounds on thermal correlations in terms of the coupling
 *        between centers.
 *
 * The bounds compare a Gibbs state with the product of its marginals, which is
 * an admissible state only when the Gibbs state is taken over the full Fock
 * space. The checks therefore use the grand-canonical state exp(-(H - μN)/T)/Z
 * at half filling, μ = U/2.
 */

#pragma once

#include <vector>

#include <fermicorr/hubbard.hpp>
#include <fermicorr/measures.hpp>

namespace fermicorr {

struct BoundReport {
  double I = 0.0;  // generalized mutual information, nats
  double rhs = 0.0;  // (2/T) Σ ‖H_ij‖_F
  double ratio = 0.0;  // I / rhs, 0 when rhs == 0
  bool satisfied = true;
};

/// Slack on I ≤ rhs.
inline constexpr double kBoundTol = 1e-9;

/// Frobenius norm of each coupling term, in the order of parts.couplings.
std::vector<double> coupling_norms(const HamiltonianParts& parts);

/// exp(-(H - μN)/T)/Z on the full Fock space of the Hamiltonian.
DensityMatrix grand_canonical_state(const HamiltonianParts& parts, double T, double mu);

/// Grand-canonical dimer state at μ = U/2.
DensityMatrix dimer_grand_canonical_state(const DimerParams& p, double T);

BoundReport wolf_bound_check(double T, double r);
BoundReport general_bound_check(const ChainParams& chain, double T);

/// The intermediate quantities of the bound for a bipartite Hamiltonian.
struct FreeEnergyChain {
  double free_energy_state;  // F(ρ)
  double free_energy_product;  // F(ρ_A ⊗ ρ_B)
  double energy_gap;  // Tr[H(ρ - ρ_A ⊗ ρ_B)]
  double entropy_gap;  // T [S(ρ) - S(ρ_A ⊗ ρ_B)]
  double coupling_trace;  // |Tr[H_AB (ρ_A ⊗ ρ_B - ρ)]|
  double coupling_ceiling;  // 2 ‖H_AB‖_F
  double local_residual;  // max_i |Tr[H_i (ρ_A ⊗ ρ_B - ρ)]|
};

FreeEnergyChain free_energy_chain(double T, double r);

struct DynCorrRatio {
  double c_dyn = 0.0;
  double c_stat = 1.0;
  /// False when the coupling vanishes (or I and rhs are both at the numerical floor).
  bool defined = false;
};

/// I / rhs below this is reported but flagged as undefined.
inline constexpr double kRatioFloor = 1e-12;

DynCorrRatio dyn_corr_ratio(double T, double r);
DynCorrRatio dyn_corr_ratio(const ChainParams& chain, double T);

}  // namespace fermicorr
