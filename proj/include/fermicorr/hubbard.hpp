// Copyright 2026 The fermicorr Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file hubbard.hpp
 * @brief Hubbard dimer and short Hubbard chains.
 *
 * Mode layout: center i owns modes 2i (spin up) and 2i+1 (spin down), so the
 * dimer reads L↑, L↓, R↑, R↓ and every center is a contiguous block.
 * Energies are in units of U (fixed to 1) and k_B = 1.
 */

#pragma once

#include <array>
#include <vector>

#include <fermicorr/fock.hpp>

namespace fermicorr {

/// Geometry of the dimer; hopping decays as t = exp(-r).
class DimerParams {
 public:
  static DimerParams from_distance(double r);
  /// t must be > 0; use from_distance for the r -> infinity side.
  static DimerParams from_hopping(double t);

  double r() const { return r_; }
  double t() const { return t_; }
  double U() const { return 1.0; }

 private:
  DimerParams(double r, double t) : r_(r), t_(t) {}
  double r_;
  double t_;
};

enum class DimerSpace { kFock, kTwoParticle };

ModeBasis dimer_mode_basis();
/// {L↑, L↓} | {R↑, R↓}
ModePartition dimer_partition();
/// The six N=2 configurations in ascending bit order.
std::vector<Bits> dimer_sector_basis();

/// Local, coupling and total parts of a Hamiltonian on the full Fock space.
struct HamiltonianParts {
  Matrix total;
  std::vector<Matrix> local;  // one per center
  struct Coupling {
    int i;
    int j;
    Matrix term;
  };
  std::vector<Coupling> couplings;
  ModePartition centers;
};

Matrix dimer_hamiltonian(const DimerParams& p, DimerSpace space = DimerSpace::kTwoParticle);
HamiltonianParts dimer_hamiltonian_parts(const DimerParams& p);

/// Closed-form spectrum and N=2 eigenvectors (columns, sector basis order).
struct DimerSpectrum {
  std::array<double, 6> energies;  // E0 ... E5
  double W;
  double a, b, c, d;
  double gap;  // E1 - E0
  Matrix eigenvectors;  // 6 x 6, column k belongs to energies[k]
};

DimerSpectrum analytic_spectrum(double t);

/// Pure ground state on the N=2 sector.
DensityMatrix ground_state(const DimerParams& p);
/// e^{-H/T}/Z on the N=2 sector; T must be > 0.
DensityMatrix gibbs_state(const DimerParams& p, double T);
/// ground_state for T == 0, gibbs_state otherwise.
DensityMatrix thermal_state(const DimerParams& p, double T);

/// e^{-H/T}/Z for an arbitrary Hermitian matrix over `basis`.
DensityMatrix gibbs_from_hamiltonian(const Matrix& h, double T, std::vector<Bits> basis, int modes);

/// Free energy Tr[Hρ] - T S(ρ).
double free_energy(const Matrix& h, const DensityMatrix& rho, double T);

struct ChainParams {
  std::vector<double> hoppings;  // t_{i,i+1}; centers = hoppings.size() + 1
  double U = 1.0;

  int centers() const { return static_cast<int>(hoppings.size()) + 1; }
  /// Equal hoppings between adjacent centers.
  static ChainParams uniform(int centers, double t, double U = 1.0);
};

inline constexpr int kMaxChainCenters = 4;

/// Open chain with one orbital (two spin-modes) per center, on the full Fock space.
HamiltonianParts chain_hamiltonian(const ChainParams& p);
ModeBasis chain_mode_basis(int centers);

}  // namespace fermicorr
