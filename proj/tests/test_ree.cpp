// Copyright 2026 The fermicorr Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <fermicorr/critical.hpp>
#include <fermicorr/hubbard.hpp>
#include <fermicorr/random_states.hpp>
#include <fermicorr/ree.hpp>

#include "oracles.hpp"
#include "properties.hpp"

using namespace fermicorr;

namespace {

const double kLn2 = std::log(2.0);

DensityMatrix singlet() { return DensityMatrix::fock(oracle::singlet_fock(), 4); }
DensityMatrix mixture() { return DensityMatrix::fock(oracle::dissociated_mixture_fock(), 4); }

std::vector<std::string> names(const SymmetryGroup& g) {
  std::vector<std::string> out;
  for (const auto& gen : g.generators()) out.push_back(gen.name);
  return out;
}

}  // namespace

TEST(SymmetryGroup, RejectsBadGenerators) {
  SymmetryGroup g(4, 4);
  EXPECT_THROW(g.add_discrete("scale", 2.0 * Matrix::Identity(4, 4), Matrix::Identity(4, 4)), std::invalid_argument);
  EXPECT_THROW(g.add_discrete("size", Matrix::Identity(2, 2), Matrix::Identity(4, 4)), std::invalid_argument);
  EXPECT_THROW(g.add_phase_family("half", RealVector::Constant(4, 0.5), RealVector::Zero(4)), std::invalid_argument);
}

TEST(SymmetryGroup, DimerGroupHasTwoDiscreteElements) {
  const SymmetryGroup g = dimer_symmetry_group();
  EXPECT_EQ(g.discrete_order(), 2u);
  EXPECT_EQ(g.generators().size(), 5u);
}

TEST(SymmetryGroup, StabilizerOfGibbsState) {
  const DensityMatrix rho = gibbs_state(DimerParams::from_distance(1.0), 0.1).to_fock();
  const SymmetryGroup g = dimer_symmetry_group();
  EXPECT_EQ(names(g.stabilizer(rho.matrix())), (std::vector<std::string>{"N", "2S_z", "spin flip"}));
  const DensityMatrix projected = ssr_project(rho, dimer_partition());
  EXPECT_EQ(g.stabilizer(projected.matrix()).generators().size(), 5u);
}

TEST(Twirl, SymmetricInputUnchanged) {
  const DensityMatrix m = mixture();
  EXPECT_LE((twirl(m, dimer_symmetry_group()).matrix() - m.matrix()).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_THROW(twirl(m, SymmetryGroup(2, 2)), std::invalid_argument);
}

TEST(Twirl, Properties) {
  EXPECT_TRUE(props::twirl_idempotent_and_invariant(21).ok);
  EXPECT_TRUE(props::twirl_contracts_relative_entropy(22).ok);
}

TEST(Ppt, ProductsAreNonNegative) {
  Rng rng(5);
  for (int k = 0; k < 10; ++k) {
    const DensityMatrix prod = tensor_product(random_fock_state(2, rng), random_fock_state(2, rng));
    EXPECT_GE(ppt_min_eigenvalue(prod, dimer_partition()), -1e-12);
  }
}

TEST(Ppt, SingletIsNegative) { EXPECT_NEAR(ppt_min_eigenvalue(singlet(), dimer_partition()), -0.5, 1e-12); }

TEST(Ppt, GibbsSignChangeNearCriticalDistance) {
  const auto entangled = [](double r) {
    const DensityMatrix rho = ssr_project(gibbs_state(DimerParams::from_distance(r), 0.1).to_fock(), dimer_partition());
    return ppt_min_eigenvalue(rho, dimer_partition()) < -kPptTol;
  };
  EXPECT_TRUE(entangled(1.69));
  EXPECT_FALSE(entangled(1.70));
}

TEST(Separability, Examples) {
  EXPECT_TRUE(is_separable(mixture(), dimer_partition(), true));
  EXPECT_TRUE(is_separable(mixture(), dimer_partition(), false));
  EXPECT_FALSE(is_separable(singlet(), dimer_partition(), false));
  EXPECT_FALSE(is_separable(singlet(), dimer_partition(), true));
}

TEST(Separability, RefusesIncompleteCriterion) {
  Rng rng(7);
  EXPECT_THROW(is_separable(random_fock_state(4, rng), dimer_partition(), false), std::domain_error);
  // 1 + 1 modes: 2 x 2, PPT is exact
  EXPECT_NO_THROW(is_separable(random_fock_state(2, rng), ModePartition::bipartition(1, 1), false));
}

TEST(ModeEntanglement, SingletWithoutSsrIsEntanglementEntropy) {
  const ReeResult r = mode_entanglement(singlet(), dimer_partition(), false);
  EXPECT_NEAR(r.value.nats(), kLn2, 1e-3);
  EXPECT_TRUE(r.converged);
  const ReeResult projected = mode_entanglement(singlet(), dimer_partition(), true);
  EXPECT_NEAR(projected.value.nats(), kLn2, 1e-3);
}

TEST(ModeEntanglement, SeparableInputsGiveZero) {
  EXPECT_LE(mode_entanglement(mixture(), dimer_partition(), true).value.nats(), 1e-4);
  Rng rng(8);
  const DensityMatrix prod = tensor_product(random_fock_state(2, rng), random_fock_state(2, rng));
  EXPECT_LE(mode_entanglement(prod, dimer_partition(), false).value.nats(), 1e-4);
}

TEST(ModeEntanglement, SuddenDeathAtFiniteDistance) {
  EXPECT_GT(mode_entanglement(gibbs_state(DimerParams::from_distance(1.0), 0.1), dimer_partition(), true).value.nats(),
            1e-2);
  EXPECT_LE(mode_entanglement(gibbs_state(DimerParams::from_distance(2.0), 0.1), dimer_partition(), true).value.nats(),
            1e-4);
}

TEST(ModeEntanglement, MatchesWernerReference) {
  for (double T : {0.0, 0.05, 0.1, 0.3}) {
    for (double r : {0.2, 0.6, 1.0, 1.4, 1.6, 2.2}) {
      const DensityMatrix rho = thermal_state(DimerParams::from_distance(r), T);
      const double expect = oracle::werner_ree_after_projection(rho.to_fock().matrix());
      const ReeResult got = mode_entanglement(rho, dimer_partition(), true);
      EXPECT_NEAR(got.value.nats(), expect, 1e-6) << "T=" << T << " r=" << r;
      EXPECT_LE(got.value.nats(), got.upper_bound.nats() + 1e-4);
    }
  }
}

TEST(ModeEntanglement, SymmetryReductionMatchesUnrestrictedSearch) {
  SolverSettings free;
  free.use_symmetry = false;
  const std::vector<std::pair<double, double>> points = {{0.1, 0.3}, {0.1, 0.9}, {0.1, 1.3}, {0.1, 1.6}, {0.1, 2.0},
                                                         {0.05, 1.0}, {0.05, 2.0}, {0.3, 0.5}, {0.3, 1.2}, {0.0, 1.0}};
  for (const auto& [T, r] : points) {
    const DensityMatrix rho = thermal_state(DimerParams::from_distance(r), T);
    const double reduced = mode_entanglement(rho, dimer_partition(), true).value.nats();
    const double unrestricted = mode_entanglement(rho, dimer_partition(), true, free).value.nats();
    EXPECT_NEAR(reduced, unrestricted, 1e-3) << "T=" << T << " r=" << r;
  }
}

TEST(ModeEntanglement, ProjectionDoesNotIncreaseEntanglement) {
  for (double r : {0.5, 1.0, 1.5}) {
    const DensityMatrix rho = gibbs_state(DimerParams::from_distance(r), 0.1);
    const double with = mode_entanglement(rho, dimer_partition(), true).value.nats();
    const ReeResult without = mode_entanglement(rho, dimer_partition(), false);
    EXPECT_LE(with, without.value.nats() + 1e-4) << "r=" << r;
    EXPECT_LE(without.value.nats(), without.upper_bound.nats() + 1e-4);
  }
}

TEST(ModeEntanglement, DeterministicForFixedSeed) {
  const DensityMatrix rho = gibbs_state(DimerParams::from_distance(1.2), 0.1);
  SolverSettings s;
  s.seed = 99;
  const double a = mode_entanglement(rho, dimer_partition(), true, s).value.nats();
  const double b = mode_entanglement(rho, dimer_partition(), true, s).value.nats();
  EXPECT_EQ(a, b);
}

TEST(ModeEntanglement, ClosestStateIsSeparableAndSymmetric) {
  const DensityMatrix rho = gibbs_state(DimerParams::from_distance(1.0), 0.1);
  const ReeResult r = mode_entanglement(rho, dimer_partition(), true);
  const DensityMatrix sigma = detail_unchecked_state(r.closest_separable, fock_basis(4), 4);
  EXPECT_NEAR(sigma.matrix().trace().real(), 1.0, 1e-12);
  EXPECT_TRUE(is_separable(sigma, dimer_partition(), false));
}

TEST(ModeEntanglement, OtherPartitions) {
  Rng rng(12);
  const DensityMatrix rho = random_fock_state(3, rng, 2);
  const ModePartition p({{1}, {0, 2}}, 3);
  const ReeResult r = mode_entanglement(rho, p, false);
  EXPECT_GE(r.value.nats(), 0.0);
  EXPECT_LE(r.value.nats(), r.upper_bound.nats() + 1e-4);
  EXPECT_THROW(mode_entanglement(rho, ModePartition::contiguous(std::vector<int>{1, 1, 1}), false),
               std::invalid_argument);
}

TEST(ModeEntanglement, ZeroSetMatchesPptBoundary) {
  // near the boundary the value drops below the zero threshold slightly early
  const double ppt_boundary = rcrit_mode_exact(0.1, 1e-6);
  double lo = 1.5, hi = 1.9;
  while (hi - lo > 2e-3) {
    const double mid = 0.5 * (lo + hi);
    const double e = mode_entanglement(gibbs_state(DimerParams::from_distance(mid), 0.1), dimer_partition(), true)
                         .value.nats();
    (e > 1e-4 ? lo : hi) = mid;
  }
  EXPECT_NEAR(0.5 * (lo + hi), ppt_boundary, 0.02);
  EXPECT_LE(0.5 * (lo + hi), ppt_boundary);
}

TEST(ReeProperties, EntanglementBelowCorrelation) { EXPECT_TRUE(props::entanglement_below_correlation().ok); }
