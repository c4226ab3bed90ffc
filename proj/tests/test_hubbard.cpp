// Copyright 2026 The fermicorr Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>

#include <fermicorr/hubbard.hpp>
#include <fermicorr/measures.hpp>

#include "oracles.hpp"
#include "properties.hpp"

using namespace fermicorr;

TEST(Hubbard, HamiltonianMatchesPauliConstruction) {
  for (double t : {1e-3, 0.3, 1.7}) {
    const Matrix h = dimer_hamiltonian(DimerParams::from_hopping(t), DimerSpace::kFock);
    EXPECT_LE((h - oracle::dimer_hamiltonian(t)).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(Hubbard, ZeroHoppingIsDiagonal) {
  const Matrix h = oracle::restrict_to_sector(oracle::dimer_hamiltonian(0.0), 4, 2);
  Eigen::VectorXd d = h.diagonal().real();
  std::sort(d.data(), d.data() + d.size());
  EXPECT_EQ(d, (Eigen::VectorXd(6) << 0, 0, 0, 0, 1, 1).finished());
  EXPECT_LE((h - Matrix(h.diagonal().asDiagonal())).norm(), 0.0);
}

TEST(Hubbard, ConservesParticlesAndSpin) {
  const Matrix h = dimer_hamiltonian(DimerParams::from_distance(0.4), DimerSpace::kFock);
  const Matrix n = number_op(4);
  Matrix sz = Matrix::Zero(16, 16);
  for (int b = 0; b < 16; ++b) sz(b, b) = 0.5 * (((b >> 0) & 1) - ((b >> 1) & 1) + ((b >> 2) & 1) - ((b >> 3) & 1));
  EXPECT_LE((h * n - n * h).cwiseAbs().maxCoeff(), 1e-13);
  EXPECT_LE((h * sz - sz * h).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(Hubbard, AnalyticSpectrumExamples) {
  const DimerSpectrum zero = analytic_spectrum(0.0);
  EXPECT_DOUBLE_EQ(zero.a, 1.0);
  EXPECT_DOUBLE_EQ(zero.b, 0.0);
  EXPECT_DOUBLE_EQ(zero.energies[0], 0.0);
  EXPECT_DOUBLE_EQ(zero.energies[5], 1.0);
  const DimerSpectrum s = analytic_spectrum(0.5);
  EXPECT_NEAR(s.W, 1.118034, 1e-6);
  EXPECT_NEAR(s.energies[0], -0.618034, 1e-6);
  EXPECT_NEAR(s.energies[5], 1.618034, 1e-6);
  EXPECT_NEAR(s.a * s.a, 0.723607, 1e-6);
  EXPECT_NEAR(s.b * s.b, 0.276393, 1e-6);
}

TEST(Hubbard, AnalyticSpectrumMatchesDiagonalizationOnLogGrid) {
  for (int k = 0; k < 60; ++k) {
    const double t = std::pow(10.0, -4.0 + 5.0 * k / 59.0);
    const Eigen::VectorXd numeric = oracle::eigenvalues(oracle::restrict_to_sector(oracle::dimer_hamiltonian(t), 4, 2));
    const DimerSpectrum s = analytic_spectrum(t);
    std::vector<double> analytic(s.energies.begin(), s.energies.end());
    std::sort(analytic.begin(), analytic.end());
    for (int i = 0; i < 6; ++i) EXPECT_NEAR(numeric(i), analytic[i], 1e-10);
  }
}

TEST(Hubbard, EigenvectorsDiagonalizeHamiltonian) {
  for (double t : {0.05, 0.5, 2.0}) {
    const DimerSpectrum s = analytic_spectrum(t);
    const Matrix h = dimer_hamiltonian(DimerParams::from_hopping(t));
    const Matrix v = s.eigenvectors;
    EXPECT_LE((v.adjoint() * v - Matrix::Identity(6, 6)).cwiseAbs().maxCoeff(), 1e-12);
    for (int k = 0; k < 6; ++k) EXPECT_LE((h * v.col(k) - s.energies[k] * v.col(k)).norm(), 1e-12);
  }
}

TEST(Hubbard, DissociationAsymptotics) {
  const double r = 6.0, t = std::exp(-r);
  const DimerSpectrum s = analytic_spectrum(t);
  EXPECT_NEAR(s.gap / (4.0 * std::exp(-2.0 * r)), 1.0, 0.01);
  EXPECT_NEAR(s.b / (2.0 * std::exp(-r)), 1.0, 0.01);
  for (double tt : {1e-6, 1e-3, 1.0}) EXPECT_GT(analytic_spectrum(tt).gap, 0.0);
}

TEST(Hubbard, GibbsLimits) {
  const DensityMatrix hot = gibbs_state(DimerParams::from_distance(0.5), 1e6);
  EXPECT_LE((hot.matrix() - Matrix::Identity(6, 6) / 6.0).cwiseAbs().maxCoeff(), 1e-5);

  const DimerParams p = DimerParams::from_distance(0.5);
  const DensityMatrix cold = gibbs_state(p, 1e-4);
  const Vector psi0 = analytic_spectrum(p.t()).eigenvectors.col(0);
  EXPECT_GE(psi0.dot(cold.matrix() * psi0).real(), 1.0 - 1e-6);

  const DensityMatrix far = gibbs_state(DimerParams::from_distance(12.0), 0.1);
  const Matrix mixture = oracle::restrict_to_sector(oracle::dissociated_mixture_fock(), 4, 2);
  const Eigen::VectorXd diff = oracle::eigenvalues(far.matrix() - mixture);
  EXPECT_LE(0.5 * diff.cwiseAbs().sum(), 1e-4);
}

TEST(Hubbard, ThermalStateAtZeroIsGroundState) {
  const DimerParams p = DimerParams::from_distance(1.0);
  EXPECT_LE((thermal_state(p, 0.0).matrix() - ground_state(p).matrix()).norm(), 0.0);
  EXPECT_THROW(gibbs_state(p, 0.0), std::invalid_argument);
  EXPECT_THROW(gibbs_state(p, -1.0), std::invalid_argument);
}

TEST(Hubbard, ChainOfTwoIsTheDimer) {
  const DimerParams p = DimerParams::from_distance(0.7);
  EXPECT_LE((chain_hamiltonian(ChainParams::uniform(2, p.t())).total - dimer_hamiltonian(p, DimerSpace::kFock)).norm(),
            0.0);
}

TEST(Hubbard, DecoupledChainIsBlockDiagonalInLocalCharges) {
  const HamiltonianParts parts = chain_hamiltonian(ChainParams::uniform(3, 0.0));
  const Matrix& h = parts.total;
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    for (Eigen::Index j = 0; j < h.cols(); ++j) {
      if (i != j) EXPECT_EQ(h(i, j), Complex(0.0));
    }
  }
}

TEST(Hubbard, CouplingNormShrinksWithHopping) {
  double previous = 1e300;
  for (double t : {1.0, 0.5, 0.1, 0.01}) {
    const double norm = frobenius_norm(chain_hamiltonian(ChainParams::uniform(3, t)).couplings[0].term);
    EXPECT_LT(norm, previous);
    previous = norm;
  }
}

TEST(Hubbard, ChainValidation) {
  EXPECT_THROW(chain_hamiltonian(ChainParams::uniform(5, 0.1)), std::invalid_argument);
  EXPECT_THROW(chain_hamiltonian(ChainParams{{-0.1}, 1.0}), std::invalid_argument);
  EXPECT_THROW(DimerParams::from_hopping(0.0), std::invalid_argument);
}

TEST(HubbardProperties, GibbsMinimizesFreeEnergy) { EXPECT_TRUE(props::gibbs_minimizes_free_energy(8).ok); }
