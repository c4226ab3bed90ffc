// Copyright 2026 The fermicorr Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file ree.hpp
 * @brief Mode entanglement across a bipartition: twirls, partial-transpose
 *        tests and the relative entropy of entanglement.
 *
 * All routines work on the full Fock space of a two-block partition after it
 * has been made contiguous, i.e. on F_A ⊗ F_B with the A index fastest.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <fermicorr/measures.hpp>

namespace fermicorr {

/**
 * Group of local unitaries U_A ⊗ U_B, given by generators.
 *
 * Phase families are U(θ) = exp(iθ(h_A ⊗ 1 + 1 ⊗ h_B)) with diagonal integer
 * charges h_A, h_B; their Haar average is the exact dephasing onto charge
 * eigenspaces. Discrete generators must normalize every phase family (map its
 * charge eigenspaces onto each other), which holds for spin flips versus S_z.
 */
class SymmetryGroup {
 public:
  struct Generator {
    enum class Kind { kDiscrete, kPhaseFamily };
    Kind kind;
    std::string name;
    Matrix local_a;  // unitary, or diagonal charge matrix for a phase family
    Matrix local_b;
  };

  SymmetryGroup(Eigen::Index dim_a, Eigen::Index dim_b);

  /// Throws std::invalid_argument if u_a or u_b is not unitary to 1e-12.
  void add_discrete(std::string name, const Matrix& u_a, const Matrix& u_b);
  /// Charges must be integers.
  void add_phase_family(std::string name, const RealVector& charge_a, const RealVector& charge_b);

  Eigen::Index dim_a() const { return dim_a_; }
  Eigen::Index dim_b() const { return dim_b_; }
  Eigen::Index dim() const { return dim_a_ * dim_b_; }
  const std::vector<Generator>& generators() const { return generators_; }
  bool empty() const { return generators_.empty(); }

  /// Full-space unitary of a discrete generator, or the Hermitian charge of a family.
  Matrix full_matrix(const Generator& g) const;

  /// Group average of a matrix on F_A ⊗ F_B.
  Matrix average(const Matrix& m) const;

  /// Subgroup generated by the generators that leave `rho` invariant.
  SymmetryGroup stabilizer(const Matrix& rho, double tol = 1e-10) const;

  std::size_t discrete_order() const { return elements_.size(); }

 private:
  void rebuild();

  Eigen::Index dim_a_;
  Eigen::Index dim_b_;
  std::vector<Generator> generators_;
  std::vector<Matrix> elements_;  // closure of the discrete generators
  std::vector<std::vector<long>> charges_;  // per full basis index, one entry per family
};

/// Local particle-number phases on both sides, for blocks of any size.
SymmetryGroup local_charge_group(int modes_a, int modes_b);
/// Local charges, collective S_z rotation and simultaneous spin flip for two
/// blocks of modes (↑, ↓) each, such as the left/right split of the dimer.
SymmetryGroup dimer_symmetry_group();

/// T_G(ρ). The state's Fock space must match the group dimensions.
DensityMatrix twirl(const DensityMatrix& rho, const SymmetryGroup& group);

/// Minimum eigenvalue of the partial transpose over the second block.
double ppt_min_eigenvalue(const DensityMatrix& rho, const ModePartition& partition);

/// PPT threshold for "no entanglement".
inline constexpr double kPptTol = 1e-10;

/**
 * Exact separability test for states whose fixed-local-charge blocks are at
 * most 2x3 dimensional (after the optional SSR projection), where PPT is
 * necessary and sufficient. Throws std::domain_error when that structure is
 * missing.
 */
bool is_separable(const DensityMatrix& rho, const ModePartition& partition, bool ssr);

struct SolverSettings {
  int components = 16;
  int max_components = 64;
  int restarts = 8;
  std::uint64_t seed = 20200101;
  /// Stop when the objective improves by less than this (relative) over `window` iterations.
  double tolerance = 1e-9;
  int window = 50;
  int max_iterations = 3000;
  /// Restarts end early once two of them agree to this relative accuracy (0 disables).
  double agreement = 1e-7;
  /// Objective value treated as zero.
  double zero_value = 1e-6;
  bool use_symmetry = true;
  /// Candidate symmetries; the default depends on the block sizes.
  std::optional<SymmetryGroup> symmetry;
};

struct ReeResult {
  EntropyValue value;
  /// Gradient norm of the objective at the returned point.
  double gradient_norm = 0.0;
  bool converged = false;
  int components = 0;
  int evaluations = 0;
  /// Number of discrete elements and phase families used for the reduction.
  std::size_t symmetry_generators = 0;
  /// Mutual information of the (projected) state; an upper bound on the result.
  EntropyValue upper_bound;
  Matrix closest_separable;  // on F_A ⊗ F_B
};

/// Solver gave up; carries the best point found.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, ReeResult best) : std::runtime_error(what), best_(std::move(best)) {}
  const ReeResult& best() const { return best_; }

 private:
  ReeResult best_;
};

/**
 * min over separable σ of S(ρ̃||σ), with ρ̃ the SSR projection of ρ when `ssr`
 * is set. σ ranges over twirled mixtures of product pure states; weights and
 * local vectors are optimized by L-BFGS from several starts.
 */
ReeResult mode_entanglement(const DensityMatrix& rho, const ModePartition& partition, bool ssr,
                            const SolverSettings& settings = {});

}  // namespace fermicorr
