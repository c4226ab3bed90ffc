// Copyright 2026 The fermicorr Authors
// SPDX-License-Identifier: Apache-2.0

#include <fermicorr/hubbard.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace fermicorr {

namespace {

int up(int center) { return 2 * center; }
int down(int center) { return 2 * center + 1; }

// Hopping t between all spins of centers i and j, without the -t prefactor.
Matrix hopping_operator(const std::vector<Matrix>& cdag, int i, int j) {
  Matrix h = Matrix::Zero(cdag.front().rows(), cdag.front().cols());
  for (int spin = 0; spin < 2; ++spin) {
    const Matrix& ci = cdag[2 * i + spin];
    const Matrix& cj = cdag[2 * j + spin];
    h += ci * cj.adjoint() + cj * ci.adjoint();
  }
  return h;
}

Matrix restrict_operator(const Matrix& op, const std::vector<Bits>& basis) {
  const auto n = static_cast<Eigen::Index>(basis.size());
  Matrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = op(basis[i], basis[j]);
  }
  return out;
}

}  // namespace

DimerParams DimerParams::from_distance(double r) {
  if (!std::isfinite(r)) throw std::invalid_argument("distance must be finite");
  return DimerParams(r, std::exp(-r));
}

DimerParams DimerParams::from_hopping(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw std::invalid_argument("hopping must be positive");
  return DimerParams(-std::log(t), t);
}

ChainParams ChainParams::uniform(int centers, double t, double U) {
  return ChainParams{std::vector<double>(std::max(centers - 1, 0), t), U};
}

ModeBasis chain_mode_basis(int centers) {
  static const char* kSites = "LRABCDEFGH";
  std::vector<std::string> labels;
  for (int c = 0; c < centers; ++c) {
    const std::string site = centers == 2 ? std::string(1, kSites[c]) : std::to_string(c + 1);
    labels.push_back(site + "↑");
    labels.push_back(site + "↓");
  }
  return ModeBasis(std::move(labels));
}

ModeBasis dimer_mode_basis() { return chain_mode_basis(2); }

ModePartition dimer_partition() { return ModePartition::bipartition(2, 2); }

std::vector<Bits> dimer_sector_basis() { return sector_basis(4, 2); }

HamiltonianParts chain_hamiltonian(const ChainParams& p) {
  const int nu = p.centers();
  if (nu < 2 || nu > kMaxChainCenters) {
    throw std::invalid_argument("chain needs 2.." + std::to_string(kMaxChainCenters) + " centers, got " +
                                std::to_string(nu));
  }
  for (double t : p.hoppings) {
    if (!(t >= 0.0)) throw std::invalid_argument("chain hoppings must be non-negative");
  }
  const ModeBasis basis = chain_mode_basis(nu);
  std::vector<Matrix> cdag;
  for (int m = 0; m < basis.size(); ++m) cdag.push_back(creation_op(basis, m));

  std::vector<int> sizes(nu, 2);
  HamiltonianParts parts{Matrix(), {}, {}, ModePartition::contiguous(sizes)};
  const Eigen::Index n = cdag.front().rows();
  parts.total = Matrix::Zero(n, n);
  for (int c = 0; c < nu; ++c) {
    const Matrix n_up = cdag[up(c)] * cdag[up(c)].adjoint();
    const Matrix n_down = cdag[down(c)] * cdag[down(c)].adjoint();
    parts.local.push_back(p.U * n_up * n_down);
    parts.total += parts.local.back();
  }
  for (int c = 0; c + 1 < nu; ++c) {
    Matrix term = -p.hoppings[c] * hopping_operator(cdag, c, c + 1);
    parts.total += term;
    parts.couplings.push_back({c, c + 1, std::move(term)});
  }
  return parts;
}

HamiltonianParts dimer_hamiltonian_parts(const DimerParams& p) {
  return chain_hamiltonian(ChainParams{{p.t()}, p.U()});
}

Matrix dimer_hamiltonian(const DimerParams& p, DimerSpace space) {
  Matrix h = dimer_hamiltonian_parts(p).total;
  if (space == DimerSpace::kFock) return h;
  return restrict_operator(h, dimer_sector_basis());
}

DimerSpectrum analytic_spectrum(double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("hopping must be non-negative");
  DimerSpectrum s{};
  s.W = std::sqrt(0.25 + 4.0 * t * t);
  // W - 1/2 without cancellation
  s.gap = 4.0 * t * t / (s.W + 0.5);
  s.energies = {-s.gap, 0.0, 0.0, 0.0, 1.0, 0.5 + s.W};
  s.a = std::sqrt((s.W + 0.5) / (2.0 * s.W));
  s.b = 2.0 * t / std::sqrt(2.0 * s.W * (s.W + 0.5));
  s.c = -s.b;
  s.d = s.a;

  // sector order: 3 = L↑L↓, 5 = L↑R↑, 6 = L↓R↑, 9 = L↑R↓, 10 = L↓R↓, 12 = R↑R↓
  const double h = 1.0 / std::sqrt(2.0);
  Vector one_plus = Vector::Zero(6), one_minus = Vector::Zero(6);
  Vector two_plus = Vector::Zero(6), two_minus = Vector::Zero(6);
  one_plus(3) = h;
  one_plus(2) = -h;
  one_minus(3) = h;
  one_minus(2) = h;
  two_plus(0) = h;
  two_plus(5) = h;
  two_minus(0) = h;
  two_minus(5) = -h;
  s.eigenvectors = Matrix::Zero(6, 6);
  s.eigenvectors.col(0) = s.a * one_plus + s.b * two_plus;
  s.eigenvectors(1, 1) = 1.0;
  s.eigenvectors.col(2) = one_minus;
  s.eigenvectors(4, 3) = 1.0;
  s.eigenvectors.col(4) = two_minus;
  s.eigenvectors.col(5) = s.c * one_plus + s.d * two_plus;
  return s;
}

DensityMatrix ground_state(const DimerParams& p) {
  const DimerSpectrum s = analytic_spectrum(p.t());
  return DensityMatrix::pure(s.eigenvectors.col(0), dimer_sector_basis(), 4);
}

DensityMatrix gibbs_from_hamiltonian(const Matrix& h, double T, std::vector<Bits> basis, int modes) {
  if (!(T > 0.0)) throw std::invalid_argument("temperature must be positive; use the ground state for T = 0");
  const HermitianEigen eig = hermitian_eigen(h);
  const double e0 = eig.values(0);
  RealVector w = (-(eig.values.array() - e0) / T).exp();
  w /= w.sum();
  Matrix rho = eig.vectors * w.asDiagonal() * eig.vectors.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(std::move(rho), std::move(basis), modes);
}

DensityMatrix gibbs_state(const DimerParams& p, double T) {
  return gibbs_from_hamiltonian(dimer_hamiltonian(p, DimerSpace::kTwoParticle), T, dimer_sector_basis(), 4);
}

DensityMatrix thermal_state(const DimerParams& p, double T) {
  if (T == 0.0) return ground_state(p);
  return gibbs_state(p, T);
}

double free_energy(const Matrix& h, const DensityMatrix& rho, double T) {
  if (h.rows() != rho.dim()) throw std::invalid_argument("Hamiltonian and state dimensions differ");
  const double energy = (h * rho.matrix()).trace().real();
  return energy - T * entropy_of_spectrum(hermitian_eigenvalues(rho.matrix()));
}

}  // namespace fermicorr
