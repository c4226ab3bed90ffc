// Copyright 2026 The fermicorr Authors
// SPDX-License-Identifier: Apache-2.0

#include <fermicorr/measures.hpp>

#include <stdexcept>

namespace fermicorr {

namespace {

void require_bipartition(const ModePartition& partition) {
  if (partition.block_count() != 2) throw std::invalid_argument("expected a bipartition");
}

}  // namespace

EntropyValue vn_entropy(const DensityMatrix& rho) { return EntropyValue(vn_entropy(rho.matrix())); }

double vn_entropy(const Matrix& hermitian) { return entropy_of_spectrum(hermitian_eigenvalues(hermitian)); }

EntropyValue rel_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim() || rho.modes() != sigma.modes() || rho.basis() != sigma.basis()) {
    throw std::invalid_argument("relative entropy needs states over the same basis");
  }
  const RealVector lambda = hermitian_eigenvalues(rho.matrix());
  const HermitianEigen s = hermitian_eigen(sigma.matrix());
  double cross = 0.0;
  for (Eigen::Index j = 0; j < s.values.size(); ++j) {
    const double weight = s.vectors.col(j).dot(rho.matrix() * s.vectors.col(j)).real();
    if (s.values(j) <= kSupportTol) {
      if (weight > kSupportTol) return EntropyValue::infinite();
      continue;
    }
    cross += weight * std::log(s.values(j));
  }
  return EntropyValue(-entropy_of_spectrum(lambda) - cross);
}

std::vector<DensityMatrix> block_marginals(const DensityMatrix& rho, const ModePartition& partition) {
  const ContiguousView view = make_contiguous(rho, partition);
  std::vector<DensityMatrix> out;
  for (int k = 0; k < view.partition.block_count(); ++k) {
    out.push_back(partial_trace(view.state, view.partition, k));
  }
  return out;
}

EntropyValue mutual_info(const DensityMatrix& rho, const ModePartition& partition) {
  require_bipartition(partition);
  return generalized_mutual_info(rho, partition);
}

EntropyValue mode_correlation(const DensityMatrix& rho, const ModePartition& partition, bool ssr) {
  if (!ssr) return mutual_info(rho, partition);
  return mutual_info(ssr_project(rho, partition), partition);
}

EntropyValue generalized_mutual_info(const DensityMatrix& rho, const ModePartition& partition) {
  if (partition.block_count() < 2) throw std::invalid_argument("need at least two blocks");
  double total = -vn_entropy(rho).nats();
  for (const DensityMatrix& marginal : block_marginals(rho, partition)) total += vn_entropy(marginal).nats();
  return EntropyValue(total);
}

double corr_function(const DensityMatrix& rho, const ObservablePair& pair, const ModePartition& partition) {
  require_bipartition(partition);
  const ContiguousView view = make_contiguous(rho, partition);
  const Eigen::Index da = Eigen::Index{1} << view.partition.block_size(0);
  const Eigen::Index db = Eigen::Index{1} << view.partition.block_size(1);
  if (pair.a.rows() != da || pair.a.cols() != da || pair.b.rows() != db || pair.b.cols() != db) {
    throw std::invalid_argument("observables do not match the local Fock dimensions");
  }
  const DensityMatrix full = view.state.to_fock();
  const DensityMatrix rho_a = partial_trace(view.state, view.partition, 0);
  const DensityMatrix rho_b = partial_trace(view.state, view.partition, 1);
  const double joint = (tensor_operator(pair.a, pair.b) * full.matrix()).trace().real();
  const double ea = (pair.a * rho_a.matrix()).trace().real();
  const double eb = (pair.b * rho_b.matrix()).trace().real();
  return joint - ea * eb;
}

double correlation_function_ceiling(EntropyValue mutual_information) {
  return std::sqrt(2.0 * std::log(2.0)) * std::sqrt(mutual_information.nats());
}

}  // namespace fermicorr
