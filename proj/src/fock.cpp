// Copyright 2026 The fermicorr Authors
// SPDX-License-Identifier: Apache-2.0

#include <fermicorr/fock.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace fermicorr {

namespace {

void check_modes(int modes) {
  if (modes < 1 || modes > kMaxModes) {
    throw std::invalid_argument("mode count must be in [1, " + std::to_string(kMaxModes) +
                                "], got " + std::to_string(modes));
  }
}

Bits full_mask(int modes) { return (Bits{1} << modes) - 1; }

// (new bits, sign) for a relabelling where new mode i is old mode perm[i].
std::pair<Bits, double> permute_configuration(Bits old_bits, std::span<const int> perm) {
  Bits new_bits = 0;
  int inversions = 0;
  const int d = static_cast<int>(perm.size());
  for (int i = 0; i < d; ++i) {
    if (!((old_bits >> perm[i]) & 1u)) continue;
    new_bits |= Bits{1} << i;
    for (int k = i + 1; k < d; ++k) {
      if (((old_bits >> perm[k]) & 1u) && perm[k] < perm[i]) ++inversions;
    }
  }
  return {new_bits, (inversions % 2 == 0) ? 1.0 : -1.0};
}

void check_permutation(std::span<const int> perm, int modes) {
  if (static_cast<int>(perm.size()) != modes) {
    throw std::invalid_argument("permutation length does not match mode count");
  }
  std::vector<bool> seen(modes, false);
  for (int p : perm) {
    if (p < 0 || p >= modes || seen[p]) throw std::invalid_argument("mode order is not a bijection");
    seen[p] = true;
  }
}

}  // namespace

int popcount(Bits bits) { return std::popcount(bits); }

// ---------------------------------------------------------------------------
// ModeBasis

ModeBasis::ModeBasis(std::vector<std::string> labels) : labels_(std::move(labels)) {
  check_modes(size());
  std::set<std::string> unique(labels_.begin(), labels_.end());
  if (unique.size() != labels_.size()) throw std::invalid_argument("mode labels must be unique");
}

ModeBasis ModeBasis::anonymous(int modes) {
  check_modes(modes);
  std::vector<std::string> labels;
  for (int i = 0; i < modes; ++i) labels.push_back(std::to_string(i));
  return ModeBasis(std::move(labels));
}

int ModeBasis::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::invalid_argument("unknown mode label " + label);
  return static_cast<int>(it - labels_.begin());
}

int OccupationState::particle_number() const { return popcount(bits); }

std::vector<Bits> sector_basis(int modes, int particles) {
  check_modes(modes);
  std::vector<Bits> out;
  for (Bits b = 0; b <= full_mask(modes); ++b) {
    if (popcount(b) == particles) out.push_back(b);
  }
  return out;
}

std::vector<Bits> fock_basis(int modes) {
  check_modes(modes);
  std::vector<Bits> out(std::size_t{1} << modes);
  std::iota(out.begin(), out.end(), Bits{0});
  return out;
}

// ---------------------------------------------------------------------------
// ModePartition

ModePartition::ModePartition(std::vector<std::vector<int>> blocks, int modes)
    : blocks_(std::move(blocks)), modes_(modes) {
  check_modes(modes);
  if (blocks_.empty()) throw std::invalid_argument("partition needs at least one block");
  Bits seen = 0;
  for (const auto& blk : blocks_) {
    if (blk.empty()) throw std::invalid_argument("partition blocks must be nonempty");
    Bits m = 0;
    for (int mode : blk) {
      if (mode < 0 || mode >= modes) throw std::invalid_argument("partition mode out of range");
      const Bits bit = Bits{1} << mode;
      if ((seen | m) & bit) throw std::invalid_argument("partition blocks overlap");
      m |= bit;
    }
    seen |= m;
    masks_.push_back(m);
  }
  if (seen != full_mask(modes)) throw std::invalid_argument("partition does not cover all modes");
}

ModePartition ModePartition::contiguous(std::span<const int> sizes) {
  std::vector<std::vector<int>> blocks;
  int next = 0;
  for (int s : sizes) {
    std::vector<int> blk(std::max(s, 0));
    std::iota(blk.begin(), blk.end(), next);
    next += std::max(s, 0);
    blocks.push_back(std::move(blk));
  }
  return ModePartition(std::move(blocks), next);
}

ModePartition ModePartition::bipartition(int modes_a, int modes_b) {
  const int sizes[] = {modes_a, modes_b};
  return contiguous(sizes);
}

bool ModePartition::is_contiguous() const {
  int next = 0;
  for (const auto& blk : blocks_) {
    for (int mode : blk) {
      if (mode != next++) return false;
    }
  }
  return true;
}

std::vector<int> ModePartition::contiguous_order() const {
  std::vector<int> perm;
  for (auto blk : blocks_) {
    std::sort(blk.begin(), blk.end());
    perm.insert(perm.end(), blk.begin(), blk.end());
  }
  return perm;
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(Unchecked, Matrix entries, std::vector<Bits> basis, int modes)
    : entries_(std::move(entries)), basis_(std::move(basis)), modes_(modes) {}

DensityMatrix::DensityMatrix(Matrix entries, std::vector<Bits> basis, int modes)
    : entries_(std::move(entries)), basis_(std::move(basis)), modes_(modes) {
  check_modes(modes);
  if (entries_.rows() != entries_.cols()) throw std::invalid_argument("density matrix must be square");
  if (static_cast<Eigen::Index>(basis_.size()) != entries_.rows()) {
    throw std::invalid_argument("basis size does not match matrix dimension");
  }
  std::set<Bits> unique;
  for (Bits b : basis_) {
    if (b > full_mask(modes)) throw std::invalid_argument("basis state outside the Fock space");
    if (!unique.insert(b).second) throw std::invalid_argument("duplicate basis state");
  }
  if (hermiticity_error(entries_) > kHermitianTol) throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(entries_.trace() - Complex(1.0)) > kTraceTol) {
    throw std::invalid_argument("density matrix trace is not 1");
  }
  if (hermitian_eigenvalues(entries_).minCoeff() < -kEigenvalueTol) {
    throw std::invalid_argument("density matrix is not positive semidefinite");
  }
}

DensityMatrix detail_unchecked_state(Matrix entries, std::vector<Bits> basis, int modes) {
  return DensityMatrix(DensityMatrix::Unchecked{}, std::move(entries), std::move(basis), modes);
}

DensityMatrix DensityMatrix::fock(Matrix entries, int modes) {
  return DensityMatrix(std::move(entries), fock_basis(modes), modes);
}

DensityMatrix DensityMatrix::pure(const Vector& amplitudes, std::vector<Bits> basis, int modes) {
  const double norm = amplitudes.norm();
  if (norm == 0.0) throw std::invalid_argument("zero state vector");
  const Vector psi = amplitudes / norm;
  return DensityMatrix(psi * psi.adjoint(), std::move(basis), modes);
}

bool DensityMatrix::is_full_fock() const {
  if (basis_.size() != (std::size_t{1} << modes_)) return false;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i] != i) return false;
  }
  return true;
}

DensityMatrix DensityMatrix::to_fock() const {
  if (is_full_fock()) return *this;
  const Eigen::Index n = Eigen::Index{1} << modes_;
  Matrix full = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = 0; j < basis_.size(); ++j) full(basis_[i], basis_[j]) = entries_(i, j);
  }
  return DensityMatrix(Unchecked{}, std::move(full), fock_basis(modes_), modes_);
}

DensityMatrix DensityMatrix::restrict_to(const std::vector<Bits>& basis, double tol) const {
  std::unordered_map<Bits, Eigen::Index> where;
  for (std::size_t i = 0; i < basis_.size(); ++i) where[basis_[i]] = static_cast<Eigen::Index>(i);
  std::vector<Eigen::Index> idx;
  for (Bits b : basis) {
    auto it = where.find(b);
    idx.push_back(it == where.end() ? -1 : it->second);
  }
  Matrix sub = Matrix::Zero(static_cast<Eigen::Index>(basis.size()), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (idx[i] >= 0 && idx[j] >= 0) sub(i, j) = entries_(idx[i], idx[j]);
    }
  }
  const double outside = 1.0 - sub.trace().real();
  if (std::abs(outside) > tol) {
    throw std::invalid_argument("state has weight " + std::to_string(outside) + " outside the requested basis");
  }
  sub /= sub.trace().real();
  return DensityMatrix(Unchecked{}, std::move(sub), basis, modes_);
}

// ---------------------------------------------------------------------------
// SectorProjector

SectorProjector::SectorProjector(int modes, std::vector<Bits> masks, std::vector<int> particles)
    : modes_(modes), masks_(std::move(masks)), particles_(std::move(particles)) {}

SectorProjector SectorProjector::total(int modes, int particles) {
  check_modes(modes);
  return SectorProjector(modes, {full_mask(modes)}, {particles});
}

SectorProjector SectorProjector::local(const ModePartition& partition, std::vector<int> particles) {
  if (static_cast<int>(particles.size()) != partition.block_count()) {
    throw std::invalid_argument("one particle number per block is required");
  }
  std::vector<Bits> masks;
  for (int k = 0; k < partition.block_count(); ++k) masks.push_back(partition.mask(k));
  return SectorProjector(partition.modes(), std::move(masks), std::move(particles));
}

bool SectorProjector::contains(Bits bits) const {
  for (std::size_t k = 0; k < masks_.size(); ++k) {
    if (popcount(bits & masks_[k]) != particles_[k]) return false;
  }
  return true;
}

Matrix SectorProjector::matrix() const {
  const Eigen::Index n = Eigen::Index{1} << modes_;
  Matrix p = Matrix::Zero(n, n);
  for (Eigen::Index b = 0; b < n; ++b) {
    if (contains(static_cast<Bits>(b))) p(b, b) = 1.0;
  }
  return p;
}

// ---------------------------------------------------------------------------
// Operators

Matrix creation_op(const ModeBasis& basis, int mode) {
  const int d = basis.size();
  if (mode < 0 || mode >= d) throw std::out_of_range("mode index out of range");
  const Eigen::Index n = Eigen::Index{1} << d;
  Matrix op = Matrix::Zero(n, n);
  const Bits bit = Bits{1} << mode;
  for (Bits b = 0; b < static_cast<Bits>(n); ++b) {
    if (b & bit) continue;
    const double sign = (popcount(b & (bit - 1)) % 2 == 0) ? 1.0 : -1.0;
    op(b | bit, b) = sign;
  }
  return op;
}

Matrix annihilation_op(const ModeBasis& basis, int mode) { return creation_op(basis, mode).adjoint(); }

Matrix number_op(int modes) {
  check_modes(modes);
  const Eigen::Index n = Eigen::Index{1} << modes;
  Matrix op = Matrix::Zero(n, n);
  for (Eigen::Index b = 0; b < n; ++b) op(b, b) = popcount(static_cast<Bits>(b));
  return op;
}

DensityMatrix reorder_modes(const DensityMatrix& state, std::span<const int> perm) {
  check_permutation(perm, state.modes());
  std::vector<Bits> basis;
  std::vector<double> signs;
  for (Bits b : state.basis()) {
    auto [nb, s] = permute_configuration(b, perm);
    basis.push_back(nb);
    signs.push_back(s);
  }
  Matrix m = state.matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) *= signs[i] * signs[j];
  }
  if (state.is_full_fock()) {
    // keep the canonical ordering basis[i] == i
    Matrix sorted(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) sorted(basis[i], basis[j]) = m(i, j);
    }
    return detail_unchecked_state(std::move(sorted), fock_basis(state.modes()), state.modes());
  }
  return detail_unchecked_state(std::move(m), std::move(basis), state.modes());
}

Matrix reorder_modes(const Matrix& op, int modes, std::span<const int> perm) {
  check_permutation(perm, modes);
  const Eigen::Index n = Eigen::Index{1} << modes;
  if (op.rows() != n || op.cols() != n) throw std::invalid_argument("operator is not on the full Fock space");
  std::vector<Bits> target(n);
  std::vector<double> signs(n);
  for (Eigen::Index b = 0; b < n; ++b) {
    auto [nb, s] = permute_configuration(static_cast<Bits>(b), perm);
    target[b] = nb;
    signs[b] = s;
  }
  Matrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) out(target[i], target[j]) = signs[i] * signs[j] * op(i, j);
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& state, const ModePartition& partition, int keep) {
  if (partition.modes() != state.modes()) throw std::invalid_argument("partition and state mode counts differ");
  if (!partition.is_contiguous()) {
    throw std::invalid_argument("partial_trace needs contiguous blocks; call reorder_modes first");
  }
  if (keep < 0 || keep >= partition.block_count()) throw std::out_of_range("block index out of range");
  const DensityMatrix full = state.to_fock();
  const Matrix& rho = full.matrix();
  const int offset = partition.block(keep).front();
  const int size = partition.block_size(keep);
  const Bits kept_mask = partition.mask(keep);
  const Bits rest_mask = ~kept_mask & full_mask(state.modes());
  const Eigen::Index local_dim = Eigen::Index{1} << size;
  Matrix reduced = Matrix::Zero(local_dim, local_dim);
  // enumerate the traced-out configurations as submasks of rest_mask
  Bits rest = 0;
  do {
    for (Eigen::Index x = 0; x < local_dim; ++x) {
      const Bits row = rest | (static_cast<Bits>(x) << offset);
      for (Eigen::Index y = 0; y < local_dim; ++y) {
        reduced(x, y) += rho(row, rest | (static_cast<Bits>(y) << offset));
      }
    }
    rest = (rest - rest_mask) & rest_mask;
  } while (rest != 0);
  return detail_unchecked_state(std::move(reduced), fock_basis(size), size);
}

DensityMatrix ssr_project(const DensityMatrix& state, const ModePartition& partition) {
  if (partition.modes() != state.modes()) throw std::invalid_argument("partition and state mode counts differ");
  const auto& basis = state.basis();
  Matrix m = state.matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      for (int k = 0; k < partition.block_count(); ++k) {
        if (partition.local_particles(basis[i], k) != partition.local_particles(basis[j], k)) {
          m(i, j) = 0.0;
          break;
        }
      }
    }
  }
  return detail_unchecked_state(std::move(m), basis, state.modes());
}

DensityMatrix tensor_product(std::span<const DensityMatrix> factors) {
  if (factors.empty()) throw std::invalid_argument("tensor product of nothing");
  int modes = 0;
  for (const auto& f : factors) modes += f.modes();
  check_modes(modes);
  Matrix acc = factors.front().to_fock().matrix();
  int acc_modes = factors.front().modes();
  for (std::size_t k = 1; k < factors.size(); ++k) {
    acc = tensor_operator(acc, factors[k].to_fock().matrix());
    acc_modes += factors[k].modes();
  }
  return detail_unchecked_state(std::move(acc), fock_basis(acc_modes), acc_modes);
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  const DensityMatrix factors[] = {a, b};
  return tensor_product(factors);
}

Matrix tensor_operator(const Matrix& a, const Matrix& b) {
  const Eigen::Index da = a.rows();
  const Eigen::Index db = b.rows();
  Matrix out(da * db, da * db);
  for (Eigen::Index y = 0; y < db; ++y) {
    for (Eigen::Index y2 = 0; y2 < db; ++y2) {
      out.block(y * da, y2 * da, da, da) = b(y, y2) * a;
    }
  }
  return out;
}

ContiguousView make_contiguous(const DensityMatrix& state, const ModePartition& partition) {
  if (partition.modes() != state.modes()) throw std::invalid_argument("partition and state mode counts differ");
  std::vector<int> sizes;
  for (int k = 0; k < partition.block_count(); ++k) sizes.push_back(partition.block_size(k));
  if (partition.is_contiguous()) return {state, ModePartition::contiguous(sizes)};
  const std::vector<int> perm = partition.contiguous_order();
  return {reorder_modes(state, perm), ModePartition::contiguous(sizes)};
}

}  // namespace fermicorr
