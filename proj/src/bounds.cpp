// Copyright 2026 The fermicorr Authors
// SPDX-License-Identifier: Apache-2.0

#include <fermicorr/bounds.hpp>

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fermicorr {

namespace {

BoundReport report(const HamiltonianParts& parts, double T, double mu) {
  const DensityMatrix rho = grand_canonical_state(parts, T, mu);
  BoundReport out;
  out.I = generalized_mutual_info(rho, parts.centers).nats();
  const std::vector<double> norms = coupling_norms(parts);
  out.rhs = 2.0 / T * std::accumulate(norms.begin(), norms.end(), 0.0);
  out.ratio = out.rhs > 0.0 ? out.I / out.rhs : 0.0;
  out.satisfied = out.I <= out.rhs + kBoundTol;
  return out;
}

DynCorrRatio ratio_from(const BoundReport& b) {
  DynCorrRatio out;
  out.defined = b.rhs > kRatioFloor;
  if (!out.defined) return out;
  out.c_dyn = b.ratio;
  out.c_stat = 1.0 - b.ratio;
  return out;
}

}  // namespace

std::vector<double> coupling_norms(const HamiltonianParts& parts) {
  std::vector<double> out;
  for (const auto& c : parts.couplings) out.push_back(frobenius_norm(c.term));
  return out;
}

DensityMatrix grand_canonical_state(const HamiltonianParts& parts, double T, double mu) {
  const int modes = parts.centers.modes();
  const Matrix h = parts.total - mu * number_op(modes);
  return gibbs_from_hamiltonian(h, T, fock_basis(modes), modes);
}

DensityMatrix dimer_grand_canonical_state(const DimerParams& p, double T) {
  return grand_canonical_state(dimer_hamiltonian_parts(p), T, 0.5 * p.U());
}

BoundReport wolf_bound_check(double T, double r) {
  if (!(T > 0.0)) throw std::invalid_argument("bound needs T > 0");
  const DimerParams p = DimerParams::from_distance(r);
  return report(dimer_hamiltonian_parts(p), T, 0.5 * p.U());
}

BoundReport general_bound_check(const ChainParams& chain, double T) {
  if (!(T > 0.0)) throw std::invalid_argument("bound needs T > 0");
  return report(chain_hamiltonian(chain), T, 0.5 * chain.U);
}

FreeEnergyChain free_energy_chain(double T, double r) {
  const DimerParams p = DimerParams::from_distance(r);
  const HamiltonianParts parts = dimer_hamiltonian_parts(p);
  const Matrix shift = 0.5 * p.U() * number_op(4);
  const Matrix h = parts.total - shift;
  const DensityMatrix rho = grand_canonical_state(parts, T, 0.5 * p.U());
  const auto marginals = block_marginals(rho, parts.centers);
  const DensityMatrix product = tensor_product(marginals[0], marginals[1]);

  FreeEnergyChain out{};
  out.free_energy_state = free_energy(h, rho, T);
  out.free_energy_product = free_energy(h, product, T);
  const Matrix diff = rho.matrix() - product.matrix();
  out.energy_gap = (h * diff).trace().real();
  out.entropy_gap = T * (vn_entropy(rho).nats() - vn_entropy(product).nats());
  out.coupling_trace = std::abs((parts.couplings.front().term * diff).trace().real());
  out.coupling_ceiling = 2.0 * frobenius_norm(parts.couplings.front().term);
  // each local term, including its share of -μN, only sees one marginal
  const Matrix n_left = number_op(4) - tensor_operator(Matrix::Identity(4, 4), number_op(2));
  const Matrix n_right = number_op(4) - n_left;
  out.local_residual = std::max(std::abs(((parts.local[0] - 0.5 * n_left) * diff).trace().real()),
                                std::abs(((parts.local[1] - 0.5 * n_right) * diff).trace().real()));
  return out;
}

DynCorrRatio dyn_corr_ratio(double T, double r) { return ratio_from(wolf_bound_check(T, r)); }

DynCorrRatio dyn_corr_ratio(const ChainParams& chain, double T) { return ratio_from(general_bound_check(chain, T)); }

}  // namespace fermicorr
