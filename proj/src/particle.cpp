// Copyright 2026 The fermicorr Authors
// SPDX-License-Identifier: Apache-2.0

#include <fermicorr/particle.hpp>

#include <algorithm>
#include <array>
#include <stdexcept>

namespace fermicorr {

namespace {

int levi_civita(int a, int b, int c, int d) {
  std::array<int, 4> p{a, b, c, d};
  int sign = 1;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (p[i] == p[j]) return 0;
      if (p[i] > p[j]) sign = -sign;
    }
  }
  return sign;
}

// Index pairs (a < b) of the bits in a two-particle configuration.
std::pair<int, int> occupied_pair(Bits bits) {
  int first = -1;
  for (int m = 0; m < 32; ++m) {
    if ((bits >> m) & 1u) {
      if (first < 0) {
        first = m;
      } else {
        return {first, m};
      }
    }
  }
  throw std::logic_error("not a two-particle configuration");
}

}  // namespace

OneRDM one_rdm(const DensityMatrix& rho) {
  const DensityMatrix full = rho.to_fock();
  const ModeBasis modes = ModeBasis::anonymous(full.modes());
  const int d = full.modes();
  std::vector<Matrix> cdag;
  for (int m = 0; m < d; ++m) cdag.push_back(creation_op(modes, m));
  OneRDM out{Matrix(d, d)};
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      out.entries(i, j) = (full.matrix() * cdag[j] * cdag[i].adjoint()).trace();
    }
  }
  out.entries = 0.5 * (out.entries + out.entries.adjoint()).eval();
  return out;
}

EntropyValue nonfreeness(const DensityMatrix& rho) {
  const RealVector n = one_rdm(rho).occupations();
  const RealVector holes = (1.0 - n.array()).matrix();
  return EntropyValue(entropy_of_spectrum(n) + entropy_of_spectrum(holes) - vn_entropy(rho).nats());
}

KMatrix schliemann_k(const DensityMatrix& rho) {
  if (rho.modes() != 4) throw std::invalid_argument("quantum nonfreeness needs 4 modes");
  const std::vector<Bits> pairs = sector_basis(4, 2);
  const DensityMatrix sector = rho.restrict_to(pairs);
  const HermitianEigen eig = hermitian_eigen(sector.matrix());

  std::vector<Matrix> w;
  for (Eigen::Index k = eig.values.size() - 1; k >= 0; --k) {
    if (eig.values(k) <= kPruneTol) continue;
    const Vector psi = std::sqrt(eig.values(k)) * eig.vectors.col(k);
    Matrix wk = Matrix::Zero(4, 4);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto [a, b] = occupied_pair(pairs[p]);
      wk(a, b) = 0.5 * psi(static_cast<Eigen::Index>(p));
      wk(b, a) = -wk(a, b);
    }
    w.push_back(std::move(wk));
  }

  const auto n = static_cast<Eigen::Index>(w.size());
  KMatrix out{Matrix::Zero(n, n), RealVector()};
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      Complex acc = 0.0;
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
          for (int c = 0; c < 4; ++c) {
            for (int d = 0; d < 4; ++d) {
              const int e = levi_civita(a, b, c, d);
              if (e != 0) acc += static_cast<double>(e) * w[i](a, b) * w[j](c, d);
            }
          }
        }
      }
      out.entries(i, j) = acc;
    }
  }
  out.kappa = n > 0 ? RealVector(Eigen::JacobiSVD<Matrix>(out.entries).singularValues()) : RealVector();
  return out;
}

double quantum_nonfreeness(const DensityMatrix& rho) {
  const KMatrix k = schliemann_k(rho);
  if (k.kappa.size() == 0) return 0.0;
  return std::max(0.0, 2.0 * k.kappa.maxCoeff() - k.trace_norm());
}

Matrix pair_rotation(const Matrix& u) {
  if (u.rows() != u.cols()) throw std::invalid_argument("one-particle rotation must be square");
  const std::vector<Bits> pairs = sector_basis(static_cast<int>(u.rows()), 2);
  const auto n = static_cast<Eigen::Index>(pairs.size());
  Matrix out(n, n);
  for (Eigen::Index p = 0; p < n; ++p) {
    const auto [a, b] = occupied_pair(pairs[p]);
    for (Eigen::Index q = 0; q < n; ++q) {
      const auto [c, d] = occupied_pair(pairs[q]);
      out(p, q) = u(a, c) * u(b, d) - u(b, c) * u(a, d);
    }
  }
  return out;
}

Matrix fock_rotation(const Matrix& u) {
  if (u.rows() != u.cols() || u.rows() > kMaxModes) throw std::invalid_argument("bad one-particle rotation");
  const int d = static_cast<int>(u.rows());
  const ModeBasis modes = ModeBasis::anonymous(d);
  std::vector<Matrix> cdag;
  for (int m = 0; m < d; ++m) cdag.push_back(creation_op(modes, m));
  const Eigen::Index dim = Eigen::Index{1} << d;
  Matrix out = Matrix::Zero(dim, dim);
  // column n: Π_m (Σ_k u_km f†_k)^{n_m} |0⟩ in ascending mode order
  for (Eigen::Index col = 0; col < dim; ++col) {
    Vector v = Vector::Zero(dim);
    v(0) = 1.0;
    for (int m = d - 1; m >= 0; --m) {
      if (!((col >> m) & 1)) continue;
      Matrix g = Matrix::Zero(dim, dim);
      for (int k = 0; k < d; ++k) g += u(k, m) * cdag[k];
      v = g * v;
    }
    out.col(col) = v;
  }
  return out;
}

}  // namespace fermicorr
