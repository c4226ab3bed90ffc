// Copyright 2026 The fermicorr Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file measures.hpp
 * @brief Entropic functionals on fermionic density matrices (natural log).
 */

#pragma once

#include <cmath>
#include <limits>

#include <fermicorr/fock.hpp>

namespace fermicorr {

/// Non-negative entropy-like quantity in nats, possibly +infinity.
class EntropyValue {
 public:
  EntropyValue() = default;
  explicit EntropyValue(double nats) : nats_(nats < 0.0 ? 0.0 : nats) {}
  static EntropyValue infinite() {
    EntropyValue v;
    v.nats_ = std::numeric_limits<double>::infinity();
    return v;
  }

  double nats() const { return nats_; }
  double bits() const { return nats_ / std::log(2.0); }
  bool is_infinite() const { return std::isinf(nats_); }

 private:
  double nats_ = 0.0;
};

/// Support threshold for relative entropy.
inline constexpr double kSupportTol = 1e-12;

EntropyValue vn_entropy(const DensityMatrix& rho);
/// Same eigenvalue formula applied to any Hermitian matrix (e.g. a 1RDM with trace N).
double vn_entropy(const Matrix& hermitian);

/// S(ρ||σ) = Tr ρ(log ρ - log σ); infinite if supp ρ ⊄ supp σ.
EntropyValue rel_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// S(ρ_A) + S(ρ_B) - S(ρ) for a two-block partition.
EntropyValue mutual_info(const DensityMatrix& rho, const ModePartition& partition);

/// Mutual information, optionally of the local particle-number projected state.
EntropyValue mode_correlation(const DensityMatrix& rho, const ModePartition& partition, bool ssr);

/// Σ_i S(ρ_i) - S(ρ) over all blocks.
EntropyValue generalized_mutual_info(const DensityMatrix& rho, const ModePartition& partition);

/// Local Hermitian operators on the Fock spaces of blocks A and B.
struct ObservablePair {
  Matrix a;
  Matrix b;
};

/// <A ⊗ B> - <A><B>.
double corr_function(const DensityMatrix& rho, const ObservablePair& pair, const ModePartition& partition);

/// sqrt(2 log 2) sqrt(I): the ceiling on |C(A,B)| / (|A|_F |B|_F).
double correlation_function_ceiling(EntropyValue mutual_information);

/// Reduced states of every block (after making the partition contiguous).
std::vector<DensityMatrix> block_marginals(const DensityMatrix& rho, const ModePartition& partition);

}  // namespace fermicorr
