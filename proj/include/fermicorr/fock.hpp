// Copyright 2026 The fermicorr Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fock.hpp
 * @brief Fermionic Fock space for a handful of spin-orbitals (modes).
 *
 * Configuration states are bitmasks: bit i is the occupation of mode i and
 * |n_0 ... n_{d-1}> = (f†_0)^{n_0} ... (f†_{d-1})^{n_{d-1}} |0>. A ModePartition
 * whose blocks are contiguous and ordered splits the index of a basis state as
 * bits = a | (b << m), so the Fock space factorizes literally as F_A ⊗ F_B with
 * the A index running fastest. Every fermionic sign lives in creation_op and
 * reorder_modes.
 */

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <fermicorr/linalg.hpp>

namespace fermicorr {

inline constexpr int kMaxModes = 12;

using Bits = std::uint32_t;

/// Ordered, uniquely labelled set of spin-orbitals.
class ModeBasis {
 public:
  explicit ModeBasis(std::vector<std::string> labels);
  /// Labels "0", "1", ..., "d-1".
  static ModeBasis anonymous(int modes);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of(const std::string& label) const;

 private:
  std::vector<std::string> labels_;
};

/// Occupation-number basis label.
struct OccupationState {
  Bits bits = 0;

  int particle_number() const;
  bool occupied(int mode) const { return (bits >> mode) & 1u; }
  friend bool operator==(OccupationState, OccupationState) = default;
};

int popcount(Bits bits);

/// All configurations of `modes` modes with exactly `particles` fermions, ascending.
std::vector<Bits> sector_basis(int modes, int particles);
/// 0, 1, ..., 2^modes - 1.
std::vector<Bits> fock_basis(int modes);

/// Ordered disjoint blocks of mode indices covering 0..d-1.
class ModePartition {
 public:
  ModePartition(std::vector<std::vector<int>> blocks, int modes);
  /// Contiguous blocks of the given sizes, in order.
  static ModePartition contiguous(std::span<const int> sizes);
  static ModePartition bipartition(int modes_a, int modes_b);

  int modes() const { return modes_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<int>& block(int k) const { return blocks_.at(k); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_size(int k) const { return static_cast<int>(blocks_.at(k).size()); }
  Bits mask(int k) const { return masks_.at(k); }
  /// Particle number of configuration `bits` inside block k.
  int local_particles(Bits bits, int k) const { return popcount(bits & masks_[k]); }

  /// Blocks are consecutive ranges listed in increasing order.
  bool is_contiguous() const;
  /// Permutation (new position -> old mode) that makes the blocks contiguous.
  std::vector<int> contiguous_order() const;

 private:
  std::vector<std::vector<int>> blocks_;
  std::vector<Bits> masks_;
  int modes_;
};

/**
 * Hermitian, positive semidefinite, unit-trace matrix over a declared list of
 * configuration states. The list is either the whole Fock space (basis[i] == i)
 * or a sub-basis such as a fixed particle-number sector.
 */
class DensityMatrix {
 public:
  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kEigenvalueTol = 1e-10;
  static constexpr double kTraceTol = 1e-10;

  /// Validates all invariants; throws std::invalid_argument otherwise.
  DensityMatrix(Matrix entries, std::vector<Bits> basis, int modes);

  static DensityMatrix fock(Matrix entries, int modes);
  static DensityMatrix pure(const Vector& amplitudes, std::vector<Bits> basis, int modes);

  const Matrix& matrix() const { return entries_; }
  const std::vector<Bits>& basis() const { return basis_; }
  int modes() const { return modes_; }
  Eigen::Index dim() const { return entries_.rows(); }
  bool is_full_fock() const;

  /// Same state written over the full 2^d Fock basis.
  DensityMatrix to_fock() const;
  /// Restriction to a sub-basis; throws if weight outside it exceeds `tol`.
  DensityMatrix restrict_to(const std::vector<Bits>& basis, double tol = 1e-10) const;

 private:
  struct Unchecked {};
  DensityMatrix(Unchecked, Matrix entries, std::vector<Bits> basis, int modes);
  friend DensityMatrix detail_unchecked_state(Matrix, std::vector<Bits>, int);

  Matrix entries_;
  std::vector<Bits> basis_;
  int modes_;
};

/// Skips validation; for results that are valid by construction.
DensityMatrix detail_unchecked_state(Matrix entries, std::vector<Bits> basis, int modes);

/// Idempotent projector on a set of configurations, e.g. P_N or P_{N',N''}.
class SectorProjector {
 public:
  /// Total particle number N.
  static SectorProjector total(int modes, int particles);
  /// One particle number per block of `partition`.
  static SectorProjector local(const ModePartition& partition, std::vector<int> particles);

  bool contains(Bits bits) const;
  /// Diagonal 0/1 matrix on the full Fock space.
  Matrix matrix() const;

 private:
  SectorProjector(int modes, std::vector<Bits> masks, std::vector<int> particles);
  int modes_;
  std::vector<Bits> masks_;
  std::vector<int> particles_;
};

/// f†_mode on the full Fock space with the Jordan-Wigner sign.
Matrix creation_op(const ModeBasis& basis, int mode);
Matrix annihilation_op(const ModeBasis& basis, int mode);
Matrix number_op(int modes);

/// Relabel modes: mode perm[i] of the old ordering becomes mode i.
DensityMatrix reorder_modes(const DensityMatrix& state, std::span<const int> perm);
/// Same unitary for an operator on the full Fock space.
Matrix reorder_modes(const Matrix& op, int modes, std::span<const int> perm);

/// Reduced state of block `keep`; partition must be contiguous.
DensityMatrix partial_trace(const DensityMatrix& state, const ModePartition& partition, int keep);

/// Sum over local particle-number tuples of P ρ P.
DensityMatrix ssr_project(const DensityMatrix& state, const ModePartition& partition);

/// ρ_1 ⊗ ρ_2 ⊗ ... on concatenated mode sets (block k occupies the next modes).
DensityMatrix tensor_product(std::span<const DensityMatrix> factors);
DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);

/// Operator A ⊗ B on F_A ⊗ F_B for contiguous blocks, A index fastest.
Matrix tensor_operator(const Matrix& a, const Matrix& b);

/// State moved to a contiguous ordering of `partition`, with the partition that now applies.
struct ContiguousView {
  DensityMatrix state;
  ModePartition partition;
};
ContiguousView make_contiguous(const DensityMatrix& state, const ModePartition& partition);

}  // namespace fermicorr
