// Copyright 2026 The fermicorr Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include <Eigen/Eigenvalues>

#include <fermicorr/bounds.hpp>
#include <fermicorr/hubbard.hpp>

#include "oracles.hpp"
#include "properties.hpp"

using namespace fermicorr;

namespace {

// exp(-(H - N/2)/T)/Z built from the Pauli-string operators.
oracle::Matrix reference_grand_canonical(double t, double T) {
  oracle::Matrix n = oracle::Matrix::Zero(16, 16);
  for (int i = 0; i < 4; ++i) n += oracle::creation(4, i) * oracle::creation(4, i).adjoint();
  const oracle::Matrix k = oracle::dimer_hamiltonian(t) - 0.5 * n;
  Eigen::SelfAdjointEigenSolver<oracle::Matrix> es(k);
  const Eigen::VectorXd w = (-(es.eigenvalues().array() - es.eigenvalues().minCoeff()) / T).exp();
  const oracle::Matrix rho = es.eigenvectors() * w.cast<oracle::Complex>().asDiagonal() * es.eigenvectors().adjoint();
  return rho / rho.trace();
}

}  // namespace

TEST(CouplingNorms, DimerHoppingIsFourT) {
  for (double t : {1e-3, 0.2, 1.0}) {
    const auto norms = coupling_norms(dimer_hamiltonian_parts(DimerParams::from_hopping(t)));
    ASSERT_EQ(norms.size(), 1u);
    EXPECT_NEAR(norms[0], 4.0 * t, 1e-12 * (1 + t));
  }
}

TEST(CouplingNorms, ChainTermsAreEqualAndLinear) {
  const auto a = coupling_norms(chain_hamiltonian(ChainParams::uniform(3, 0.2)));
  const auto b = coupling_norms(chain_hamiltonian(ChainParams::uniform(3, 0.4)));
  ASSERT_EQ(a.size(), 2u);
  EXPECT_NEAR(a[0], a[1], 1e-12);
  EXPECT_NEAR(b[0], 2.0 * a[0], 1e-12);
  const auto zero = coupling_norms(chain_hamiltonian(ChainParams::uniform(3, 0.0)));
  EXPECT_EQ(zero[0], 0.0);
  EXPECT_EQ(zero[1], 0.0);
}

TEST(GrandCanonical, MatchesReference) {
  for (double T : {0.05, 0.5}) {
    const DensityMatrix rho = dimer_grand_canonical_state(DimerParams::from_distance(1.0), T);
    EXPECT_LE((rho.matrix() - reference_grand_canonical(std::exp(-1.0), T)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(WolfBound, MutualInformationMatchesReference) {
  const double T = 0.1, r = 0.8;
  const oracle::Matrix rho = reference_grand_canonical(std::exp(-r), T);
  const double expect =
      oracle::entropy(oracle::trace_out_b(rho, 4, 4)) + oracle::entropy(oracle::trace_out_a(rho, 4, 4)) -
      oracle::entropy(rho);
  const BoundReport b = wolf_bound_check(T, r);
  EXPECT_NEAR(b.I, expect, 1e-10);
  EXPECT_NEAR(b.rhs, 2.0 / T * 4.0 * std::exp(-r), 1e-12);
}

TEST(WolfBound, HoldsOnGrid) {
  for (double T : {0.05, 0.1, 0.5}) {
    for (double r = 0.1; r <= 8.0; r += 0.05) {
      const BoundReport b = wolf_bound_check(T, r);
      EXPECT_TRUE(b.satisfied) << "T=" << T << " r=" << r << " I=" << b.I << " rhs=" << b.rhs;
      EXPECT_GE(b.I, -1e-12);
    }
  }
}

TEST(WolfBound, RightHandSideVanishesWithDistance) {
  const BoundReport far = wolf_bound_check(0.1, 30.0);
  EXPECT_LT(far.rhs, 1e-10);
  EXPECT_LE(far.I, far.rhs + kBoundTol);
}

TEST(WolfBound, ChainOfTwoAgrees) {
  for (double r : {0.5, 2.0}) {
    const BoundReport a = wolf_bound_check(0.2, r);
    const BoundReport b = general_bound_check(ChainParams::uniform(2, std::exp(-r)), 0.2);
    EXPECT_NEAR(a.I, b.I, 1e-12);
    EXPECT_NEAR(a.rhs, b.rhs, 1e-12);
  }
}

TEST(GeneralBound, ThreeCenters) {
  const BoundReport b = general_bound_check(ChainParams::uniform(3, 0.2), 0.1);
  EXPECT_TRUE(b.satisfied);
  EXPECT_GT(b.I, 0.0);
  const ChainParams uneven{{0.3, 0.05}};
  EXPECT_TRUE(general_bound_check(uneven, 0.1).satisfied);
}

TEST(GeneralBound, DecoupledCentersHaveNoCorrelation) {
  const BoundReport b = general_bound_check(ChainParams::uniform(3, 0.0), 0.1);
  EXPECT_NEAR(b.I, 0.0, 1e-12);
  EXPECT_EQ(b.rhs, 0.0);
  EXPECT_EQ(b.ratio, 0.0);
}

TEST(FreeEnergyChain, Steps) {
  const FreeEnergyChain c = free_energy_chain(0.1, 1.0);
  EXPECT_LE(c.local_residual, 1e-10);
  EXPECT_LE(c.free_energy_state, c.free_energy_product + 1e-12);
  EXPECT_LE(c.coupling_trace, c.coupling_ceiling + 1e-12);
  EXPECT_TRUE(props::free_energy_chain().ok);
}

TEST(DynCorrRatio, Range) {
  for (double r : {0.2, 1.0, 3.0}) {
    const DynCorrRatio d = dyn_corr_ratio(0.1, r);
    EXPECT_TRUE(d.defined);
    EXPECT_GE(d.c_dyn, 0.0);
    EXPECT_LE(d.c_dyn, 1.0);
    EXPECT_NEAR(d.c_dyn + d.c_stat, 1.0, 1e-15);
    const BoundReport b = wolf_bound_check(0.1, r);
    EXPECT_GE(b.rhs / b.I, 1.0);
  }
  EXPECT_FALSE(dyn_corr_ratio(ChainParams::uniform(2, 0.0), 0.1).defined);
}

TEST(BoundProperties, RandomChecks) {
  EXPECT_TRUE(props::correlation_function_ceiling(props::kDefaultSeed).ok);
  EXPECT_TRUE(props::gibbs_minimizes_free_energy(props::kDefaultSeed).ok);
}
