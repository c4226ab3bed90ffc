// Copyright 2026 The fermicorr Authors
// SPDX-License-Identifier: Apache-2.0

#include <fermicorr/ree.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <ceres/gradient_problem.h>
#include <ceres/gradient_problem_solver.h>
#include <ceres/iteration_callback.h>

namespace fermicorr {

namespace {

constexpr double kEigenFloor = 1e-14;
constexpr std::size_t kMaxGroupOrder = 1024;

bool is_unitary(const Matrix& u) {
  if (u.rows() != u.cols()) return false;
  return ((u.adjoint() * u) - Matrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() <= 1e-12;
}

bool same_matrix(const Matrix& a, const Matrix& b, double tol) { return (a - b).cwiseAbs().maxCoeff() <= tol; }

// Local unitary exchanging the ↑ and ↓ modes of a two-mode block, with the
// fermionic sign on the doubly occupied state.
Matrix local_spin_flip() {
  Matrix u = Matrix::Zero(4, 4);
  u(0, 0) = 1.0;
  u(2, 1) = 1.0;
  u(1, 2) = 1.0;
  u(3, 3) = -1.0;
  return u;
}

RealVector local_number(int modes) {
  RealVector n(Eigen::Index{1} << modes);
  for (Eigen::Index x = 0; x < n.size(); ++x) n(x) = popcount(static_cast<Bits>(x));
  return n;
}

// a ⊗ b with the A index fastest.
Vector product_vector(const Vector& a, const Vector& b) {
  Vector psi(a.size() * b.size());
  for (Eigen::Index y = 0; y < b.size(); ++y) psi.segment(y * a.size(), a.size()) = b(y) * a;
  return psi;
}

struct Blocks {
  Matrix rho;  // on F_A ⊗ F_B
  ModePartition partition;
  Eigen::Index dim_a;
  Eigen::Index dim_b;
};

Blocks to_blocks(const DensityMatrix& rho, const ModePartition& partition) {
  if (partition.block_count() != 2) throw std::invalid_argument("expected a bipartition");
  ContiguousView view = make_contiguous(rho, partition);
  const Eigen::Index da = Eigen::Index{1} << view.partition.block_size(0);
  const Eigen::Index db = Eigen::Index{1} << view.partition.block_size(1);
  return {view.state.to_fock().matrix(), view.partition, da, db};
}

Matrix partial_transpose_b(const Matrix& m, Eigen::Index da, Eigen::Index db) {
  Matrix out(m.rows(), m.cols());
  for (Eigen::Index y = 0; y < db; ++y) {
    for (Eigen::Index yp = 0; yp < db; ++yp) {
      out.block(y * da, yp * da, da, da) = m.block(yp * da, y * da, da, da);
    }
  }
  return out;
}

Matrix ssr_matrix(const Matrix& m, Eigen::Index da) {
  Matrix out = m;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const auto xi = static_cast<Bits>(i % da), xj = static_cast<Bits>(j % da);
      const auto yi = static_cast<Bits>(i / da), yj = static_cast<Bits>(j / da);
      if (popcount(xi) != popcount(xj) || popcount(yi) != popcount(yj)) out(i, j) = 0.0;
    }
  }
  return out;
}

// Twirled mixture of product pure states. Parameters per component:
// one logit, then Re/Im of the A vector, then Re/Im of the B vector.
class SeparableModel {
 public:
  SeparableModel(Eigen::Index da, Eigen::Index db, int components)
      : da_(da), db_(db), k_(components), stride_(1 + 2 * da + 2 * db) {}

  int parameter_count() const { return static_cast<int>(k_ * stride_); }
  int components() const { return k_; }

  struct Unpacked {
    RealVector weights;
    std::vector<Vector> a;  // unit vectors
    std::vector<Vector> b;
    std::vector<double> norm_a;  // squared norms before normalization
    std::vector<double> norm_b;
  };

  Unpacked unpack(const double* x) const {
    Unpacked u;
    u.weights.resize(k_);
    double top = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < k_; ++k) top = std::max(top, x[k * stride_]);
    for (int k = 0; k < k_; ++k) u.weights(k) = std::exp(x[k * stride_] - top);
    u.weights /= u.weights.sum();
    for (int k = 0; k < k_; ++k) {
      const double* p = x + k * stride_ + 1;
      Vector a(da_), b(db_);
      for (Eigen::Index i = 0; i < da_; ++i) a(i) = Complex(p[2 * i], p[2 * i + 1]);
      p += 2 * da_;
      for (Eigen::Index i = 0; i < db_; ++i) b(i) = Complex(p[2 * i], p[2 * i + 1]);
      u.norm_a.push_back(a.squaredNorm());
      u.norm_b.push_back(b.squaredNorm());
      u.a.push_back(a / std::sqrt(std::max(u.norm_a.back(), 1e-300)));
      u.b.push_back(b / std::sqrt(std::max(u.norm_b.back(), 1e-300)));
    }
    return u;
  }

  Matrix raw_state(const Unpacked& u) const {
    Matrix s = Matrix::Zero(da_ * db_, da_ * db_);
    for (int k = 0; k < k_; ++k) {
      const Vector psi = product_vector(u.a[k], u.b[k]);
      s.noalias() += u.weights(k) * psi * psi.adjoint();
    }
    return s;
  }

  // Chain rule from G = ∂f/∂σ_raw to the parameters.
  void pull_back(const Unpacked& u, const Matrix& g, double* grad) const {
    std::vector<double> gk(k_);
    double mean = 0.0;
    for (int k = 0; k < k_; ++k) {
      const Vector psi = product_vector(u.a[k], u.b[k]);
      gk[k] = psi.dot(g * psi).real();
      mean += u.weights(k) * gk[k];
    }
    for (int k = 0; k < k_; ++k) {
      double* out = grad + k * stride_;
      const double p = u.weights(k);
      out[0] = p * (gk[k] - mean);
      Matrix ma = Matrix::Zero(da_, da_), mb = Matrix::Zero(db_, db_);
      for (Eigen::Index y = 0; y < db_; ++y) {
        for (Eigen::Index yp = 0; yp < db_; ++yp) {
          const auto blk = g.block(y * da_, yp * da_, da_, da_);
          ma += std::conj(u.b[k](y)) * u.b[k](yp) * blk;
          mb(y, yp) = u.a[k].dot(blk * u.a[k]);
        }
      }
      const Vector ra = (ma * u.a[k] - gk[k] * u.a[k]) * (2.0 * p / std::sqrt(std::max(u.norm_a[k], 1e-300)));
      const Vector rb = (mb * u.b[k] - gk[k] * u.b[k]) * (2.0 * p / std::sqrt(std::max(u.norm_b[k], 1e-300)));
      for (Eigen::Index i = 0; i < da_; ++i) {
        out[1 + 2 * i] = ra(i).real();
        out[2 + 2 * i] = ra(i).imag();
      }
      for (Eigen::Index i = 0; i < db_; ++i) {
        out[1 + 2 * da_ + 2 * i] = rb(i).real();
        out[2 + 2 * da_ + 2 * i] = rb(i).imag();
      }
    }
  }

  Eigen::Index dim_a() const { return da_; }
  Eigen::Index dim_b() const { return db_; }
  Eigen::Index stride() const { return stride_; }

 private:
  Eigen::Index da_;
  Eigen::Index db_;
  int k_;
  Eigen::Index stride_;
};

// f(σ) = S(ρ||T(σ_raw)) with the spectrum of σ floored at kEigenFloor.
class ReeObjective final : public ceres::FirstOrderFunction {
 public:
  ReeObjective(const Matrix& rho, double neg_entropy, const SymmetryGroup& group, const SeparableModel& model,
               int* evaluations)
      : rho_(rho), neg_entropy_(neg_entropy), group_(group), model_(model), evaluations_(evaluations) {}

  int NumParameters() const override { return model_.parameter_count(); }

  bool Evaluate(const double* x, double* cost, double* gradient) const override {
    ++*evaluations_;
    const auto u = model_.unpack(x);
    const Matrix sigma = group_.average(model_.raw_state(u));
    const HermitianEigen eig = hermitian_eigen(sigma);
    const Eigen::Index n = eig.values.size();
    RealVector lam = eig.values.cwiseMax(kEigenFloor);
    RealVector log_lam = lam.array().log();
    const Matrix x_mat = eig.vectors.adjoint() * rho_ * eig.vectors;
    double cross = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) cross += x_mat(j, j).real() * log_lam(j);
    *cost = neg_entropy_ - cross;
    if (!std::isfinite(*cost)) return false;
    if (gradient != nullptr) {
      Matrix divided(n, n);
      for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
          const double d = lam(i) - lam(j);
          divided(i, j) = std::abs(d) > 1e-12 * std::max(lam(i), lam(j)) ? (log_lam(i) - log_lam(j)) / d
                                                                          : 2.0 / (lam(i) + lam(j));
        }
      }
      const Matrix g_sigma = -(eig.vectors * x_mat.cwiseProduct(divided) * eig.vectors.adjoint());
      model_.pull_back(u, group_.average(g_sigma), gradient);
    }
    return true;
  }

 private:
  const Matrix& rho_;
  double neg_entropy_;
  const SymmetryGroup& group_;
  const SeparableModel& model_;
  int* evaluations_;
};

class WindowStop final : public ceres::IterationCallback {
 public:
  WindowStop(double tolerance, int window, double zero_value)
      : tolerance_(tolerance), window_(window), zero_value_(zero_value) {}

  ceres::CallbackReturnType operator()(const ceres::IterationSummary& summary) override {
    history_.push_back(summary.cost);
    if (summary.cost < zero_value_) return ceres::SOLVER_TERMINATE_SUCCESSFULLY;
    const auto n = static_cast<int>(history_.size());
    if (n > window_) {
      const double old = history_[n - 1 - window_];
      if (old - summary.cost <= tolerance_ * std::max(std::abs(old), 1e-300)) {
        return ceres::SOLVER_TERMINATE_SUCCESSFULLY;
      }
    }
    return ceres::SOLVER_CONTINUE;
  }

 private:
  double tolerance_;
  int window_;
  double zero_value_;
  std::vector<double> history_;
};

// Start at ρ_A ⊗ ρ_B written in the local eigenbases.
std::vector<double> marginal_start(const Matrix& rho, const SeparableModel& model, std::mt19937_64& rng) {
  const Eigen::Index da = model.dim_a(), db = model.dim_b();
  Matrix ra = Matrix::Zero(da, da), rb = Matrix::Zero(db, db);
  for (Eigen::Index y = 0; y < db; ++y) ra += rho.block(y * da, y * da, da, da);
  for (Eigen::Index y = 0; y < db; ++y) {
    for (Eigen::Index yp = 0; yp < db; ++yp) rb(y, yp) = rho.block(y * da, yp * da, da, da).trace();
  }
  const HermitianEigen ea = hermitian_eigen(ra), eb = hermitian_eigen(rb);
  struct Term {
    double w;
    Eigen::Index i, j;
  };
  std::vector<Term> terms;
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < db; ++j) terms.push_back({std::max(ea.values(i), 0.0) * std::max(eb.values(j), 0.0), i, j});
  }
  std::sort(terms.begin(), terms.end(), [](const Term& l, const Term& r) { return l.w > r.w; });

  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> x(model.parameter_count());
  for (int k = 0; k < model.components(); ++k) {
    double* p = x.data() + k * model.stride();
    if (k < static_cast<int>(terms.size())) {
      const Term& t = terms[k];
      p[0] = std::log(t.w + 1e-12);
      for (Eigen::Index i = 0; i < da; ++i) {
        p[1 + 2 * i] = ea.vectors(i, t.i).real() + 1e-3 * normal(rng);
        p[2 + 2 * i] = ea.vectors(i, t.i).imag() + 1e-3 * normal(rng);
      }
      for (Eigen::Index i = 0; i < db; ++i) {
        p[1 + 2 * da + 2 * i] = eb.vectors(i, t.j).real() + 1e-3 * normal(rng);
        p[2 + 2 * da + 2 * i] = eb.vectors(i, t.j).imag() + 1e-3 * normal(rng);
      }
    } else {
      p[0] = std::log(1e-12);
      for (Eigen::Index i = 1; i < model.stride(); ++i) p[i] = normal(rng);
    }
  }
  return x;
}

std::vector<double> random_start(const SeparableModel& model, bool mirror, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> x(model.parameter_count());
  for (double& v : x) v = normal(rng);
  const int k = model.components();
  for (int c = 0; c < k; ++c) x[c * model.stride()] = 0.0;
  if (mirror) {
    // second half swaps the roles of A and B
    const Eigen::Index da = model.dim_a();
    for (int c = k / 2; c < k; ++c) {
      const double* src = x.data() + (c - k / 2) * model.stride();
      double* dst = x.data() + c * model.stride();
      std::copy(src + 1 + 2 * da, src + 1 + 4 * da, dst + 1);
      std::copy(src + 1, src + 1 + 2 * da, dst + 1 + 2 * da);
    }
  }
  return x;
}

struct Attempt {
  double value = std::numeric_limits<double>::infinity();
  std::vector<double> x;
  bool converged = false;
};

Attempt run_attempt(const Matrix& rho, double neg_entropy, const SymmetryGroup& group, const SeparableModel& model,
                    std::vector<double> x, const SolverSettings& settings, int* evaluations) {
  ceres::GradientProblem problem(new ReeObjective(rho, neg_entropy, group, model, evaluations));
  ceres::GradientProblemSolver::Options options;
  options.line_search_direction_type = ceres::LBFGS;
  options.max_num_iterations = settings.max_iterations;
  options.function_tolerance = 1e-15;
  options.gradient_tolerance = 1e-13;
  options.parameter_tolerance = 1e-15;
  options.logging_type = ceres::SILENT;
  options.minimizer_progress_to_stdout = false;
  WindowStop stop(settings.tolerance, settings.window, settings.zero_value);
  options.callbacks.push_back(&stop);
  options.update_state_every_iteration = true;
  ceres::GradientProblemSolver::Summary summary;
  ceres::Solve(options, problem, x.data(), &summary);
  Attempt out;
  out.x = std::move(x);
  out.value = summary.final_cost;
  out.converged = summary.termination_type == ceres::CONVERGENCE || summary.termination_type == ceres::USER_SUCCESS;
  return out;
}

SymmetryGroup default_group(const ModePartition& partition) {
  if (partition.block_size(0) == 2 && partition.block_size(1) == 2) return dimer_symmetry_group();
  return local_charge_group(partition.block_size(0), partition.block_size(1));
}

}  // namespace

SymmetryGroup::SymmetryGroup(Eigen::Index dim_a, Eigen::Index dim_b) : dim_a_(dim_a), dim_b_(dim_b) {
  if (dim_a < 1 || dim_b < 1) throw std::invalid_argument("group dimensions must be positive");
  rebuild();
}

void SymmetryGroup::add_discrete(std::string name, const Matrix& u_a, const Matrix& u_b) {
  if (u_a.rows() != dim_a_ || u_b.rows() != dim_b_ || !is_unitary(u_a) || !is_unitary(u_b)) {
    throw std::invalid_argument("generator '" + name + "' is not a local unitary of the right size");
  }
  generators_.push_back({Generator::Kind::kDiscrete, std::move(name), u_a, u_b});
  rebuild();
}

void SymmetryGroup::add_phase_family(std::string name, const RealVector& charge_a, const RealVector& charge_b) {
  if (charge_a.size() != dim_a_ || charge_b.size() != dim_b_) {
    throw std::invalid_argument("charges of '" + name + "' do not match the local dimensions");
  }
  auto integral = [](const RealVector& q) {
    return (q.array() - q.array().round()).abs().maxCoeff() <= 1e-12;
  };
  if (!integral(charge_a) || !integral(charge_b)) throw std::invalid_argument("charges must be integers");
  generators_.push_back({Generator::Kind::kPhaseFamily, std::move(name), Matrix(charge_a.cast<Complex>().asDiagonal()),
                         Matrix(charge_b.cast<Complex>().asDiagonal())});
  rebuild();
}

Matrix SymmetryGroup::full_matrix(const Generator& g) const {
  if (g.kind == Generator::Kind::kDiscrete) return tensor_operator(g.local_a, g.local_b);
  return tensor_operator(g.local_a, Matrix::Identity(dim_b_, dim_b_)) +
         tensor_operator(Matrix::Identity(dim_a_, dim_a_), g.local_b);
}

void SymmetryGroup::rebuild() {
  const Eigen::Index n = dim();
  charges_.assign(n, {});
  elements_.assign(1, Matrix::Identity(n, n));
  std::vector<Matrix> gens;
  for (const Generator& g : generators_) {
    if (g.kind == Generator::Kind::kPhaseFamily) {
      const Matrix q = full_matrix(g);
      for (Eigen::Index i = 0; i < n; ++i) charges_[i].push_back(std::lround(q(i, i).real()));
    } else {
      gens.push_back(full_matrix(g));
    }
  }
  // closure by breadth-first multiplication
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (const Matrix& g : gens) {
      Matrix candidate = g * elements_[head];
      const bool known = std::any_of(elements_.begin(), elements_.end(),
                                     [&](const Matrix& e) { return same_matrix(e, candidate, 1e-9); });
      if (known) continue;
      if (elements_.size() >= kMaxGroupOrder) throw std::invalid_argument("discrete symmetry group is too large");
      elements_.push_back(std::move(candidate));
    }
  }
}

Matrix SymmetryGroup::average(const Matrix& m) const {
  if (m.rows() != dim() || m.cols() != dim()) throw std::invalid_argument("matrix does not match the group dimensions");
  Matrix dephased = m;
  bool any_family = !charges_.empty() && !charges_.front().empty();
  if (any_family) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        if (charges_[i] != charges_[j]) dephased(i, j) = 0.0;
      }
    }
  }
  if (elements_.size() == 1) return dephased;
  Matrix acc = Matrix::Zero(m.rows(), m.cols());
  for (const Matrix& u : elements_) acc.noalias() += u * dephased * u.adjoint();
  return acc / static_cast<double>(elements_.size());
}

SymmetryGroup SymmetryGroup::stabilizer(const Matrix& rho, double tol) const {
  if (rho.rows() != dim()) throw std::invalid_argument("state does not match the group dimensions");
  SymmetryGroup out(dim_a_, dim_b_);
  for (const Generator& g : generators_) {
    const Matrix full = full_matrix(g);
    if (g.kind == Generator::Kind::kDiscrete) {
      if (same_matrix(full * rho * full.adjoint(), rho, tol)) out.add_discrete(g.name, g.local_a, g.local_b);
    } else if (same_matrix(full * rho, rho * full, tol)) {
      out.add_phase_family(g.name, g.local_a.diagonal().real(), g.local_b.diagonal().real());
    }
  }
  return out;
}

SymmetryGroup local_charge_group(int modes_a, int modes_b) {
  const RealVector na = local_number(modes_a), nb = local_number(modes_b);
  SymmetryGroup g(na.size(), nb.size());
  g.add_phase_family("N_A", na, RealVector::Zero(nb.size()));
  g.add_phase_family("N_B", RealVector::Zero(na.size()), nb);
  g.add_phase_family("N", na, nb);
  return g;
}

SymmetryGroup dimer_symmetry_group() {
  SymmetryGroup g = local_charge_group(2, 2);
  RealVector two_sz(4);
  two_sz << 0.0, 1.0, -1.0, 0.0;
  g.add_phase_family("2S_z", two_sz, two_sz);
  const Matrix flip = local_spin_flip();
  g.add_discrete("spin flip", flip, flip);
  return g;
}

DensityMatrix twirl(const DensityMatrix& rho, const SymmetryGroup& group) {
  const DensityMatrix full = rho.to_fock();
  if (full.dim() != group.dim()) throw std::invalid_argument("state does not match the group dimensions");
  return detail_unchecked_state(group.average(full.matrix()), full.basis(), full.modes());
}

double ppt_min_eigenvalue(const DensityMatrix& rho, const ModePartition& partition) {
  const Blocks b = to_blocks(rho, partition);
  return hermitian_eigenvalues(partial_transpose_b(b.rho, b.dim_a, b.dim_b)).minCoeff();
}

bool is_separable(const DensityMatrix& rho, const ModePartition& partition, bool ssr) {
  const Blocks b = to_blocks(rho, partition);
  const Matrix target = ssr ? ssr_matrix(b.rho, b.dim_a) : b.rho;
  const bool block_diagonal = same_matrix(target, ssr_matrix(target, b.dim_a), 1e-12);
  if (!block_diagonal) {
    if (b.dim_a * b.dim_b > 6) {
      throw std::domain_error("PPT is not a complete separability test for this state");
    }
    return hermitian_eigenvalues(partial_transpose_b(target, b.dim_a, b.dim_b)).minCoeff() >= -kPptTol;
  }
  const int ma = b.partition.block_size(0), mb = b.partition.block_size(1);
  for (int na = 0; na <= ma; ++na) {
    for (int nb = 0; nb <= mb; ++nb) {
      std::vector<Eigen::Index> xs, ys;
      for (Eigen::Index x = 0; x < b.dim_a; ++x) {
        if (popcount(static_cast<Bits>(x)) == na) xs.push_back(x);
      }
      for (Eigen::Index y = 0; y < b.dim_b; ++y) {
        if (popcount(static_cast<Bits>(y)) == nb) ys.push_back(y);
      }
      const auto sa = static_cast<Eigen::Index>(xs.size()), sb = static_cast<Eigen::Index>(ys.size());
      Matrix blk(sa * sb, sa * sb);
      for (Eigen::Index i = 0; i < sa * sb; ++i) {
        for (Eigen::Index j = 0; j < sa * sb; ++j) {
          blk(i, j) = target(xs[i % sa] + b.dim_a * ys[i / sa], xs[j % sa] + b.dim_a * ys[j / sa]);
        }
      }
      if (blk.cwiseAbs().maxCoeff() <= 1e-14) continue;
      if (std::min(sa, sb) > 2 || sa * sb > 6) {
        throw std::domain_error("PPT is not a complete separability test for this state");
      }
      if (hermitian_eigenvalues(partial_transpose_b(blk, sa, sb)).minCoeff() < -kPptTol) return false;
    }
  }
  return true;
}

ReeResult mode_entanglement(const DensityMatrix& rho, const ModePartition& partition, bool ssr,
                            const SolverSettings& settings) {
  if (settings.components < 1 || settings.restarts < 1) throw std::invalid_argument("solver needs components and restarts");
  const Blocks b = to_blocks(rho, partition);
  const Matrix target = ssr ? ssr_matrix(b.rho, b.dim_a) : b.rho;
  const int modes = b.partition.modes();
  const DensityMatrix target_state = detail_unchecked_state(target, fock_basis(modes), modes);

  ReeResult result;
  result.upper_bound = mutual_info(target_state, b.partition);

  SymmetryGroup group(b.dim_a, b.dim_b);
  if (settings.use_symmetry) {
    const SymmetryGroup candidates = settings.symmetry ? *settings.symmetry : default_group(b.partition);
    if (candidates.dim_a() != b.dim_a || candidates.dim_b() != b.dim_b) {
      throw std::invalid_argument("symmetry group does not match the partition");
    }
    group = candidates.stabilizer(target);
  }
  result.symmetry_generators = group.generators().size();

  if (result.upper_bound.nats() < 1e-12) {
    // ρ_A ⊗ ρ_B is separable and already optimal
    const auto marginals = block_marginals(target_state, b.partition);
    result.closest_separable = tensor_operator(marginals[0].to_fock().matrix(), marginals[1].to_fock().matrix());
    result.value = EntropyValue(0.0);
    result.converged = true;
    result.components = 1;
    return result;
  }

  const double neg_entropy = -vn_entropy(target);
  bool separable = false;
  try {
    separable = is_separable(target_state, b.partition, false);
  } catch (const std::domain_error&) {
  }
  const bool mirror = settings.use_symmetry && b.dim_a == b.dim_b;

  Attempt best;
  int components = settings.components;
  for (;;) {
    const SeparableModel model(b.dim_a, b.dim_b, components);
    for (int r = 0; r < settings.restarts; ++r) {
      std::seed_seq seq{settings.seed, static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(components)};
      std::mt19937_64 rng(seq);
      std::vector<double> x0 = r == 0 ? marginal_start(target, model, rng) : random_start(model, mirror, rng);
      Attempt a = run_attempt(target, neg_entropy, group, model, std::move(x0), settings, &result.evaluations);
      // two independent starts reaching the same minimum end the search
      const bool agrees = std::abs(a.value - best.value) <= settings.agreement * std::max(best.value, 1e-3);
      if (a.value < best.value) {
        best = std::move(a);
        result.components = components;
      }
      if (best.value < settings.zero_value) break;
      if (agrees && settings.agreement > 0.0) break;
    }
    const bool above_ceiling = best.value > result.upper_bound.nats() + 1e-4;
    const bool missed_zero = separable && best.value > 1e-4;
    if (!(above_ceiling || missed_zero) || components * 2 > settings.max_components) break;
    components *= 2;
  }

  if (!std::isfinite(best.value)) {
    throw SolverError("relative entropy minimization produced no finite value", result);
  }
  const SeparableModel model(b.dim_a, b.dim_b, result.components);
  const auto u = model.unpack(best.x.data());
  result.closest_separable = group.average(model.raw_state(u));
  int unused = 0;
  ReeObjective objective(target, neg_entropy, group, model, &unused);
  std::vector<double> grad(model.parameter_count());
  double cost = 0.0;
  objective.Evaluate(best.x.data(), &cost, grad.data());
  result.gradient_norm = Eigen::Map<RealVector>(grad.data(), static_cast<Eigen::Index>(grad.size())).norm();

  const EntropyValue exact = rel_entropy(target_state, detail_unchecked_state(result.closest_separable, fock_basis(modes), modes));
  result.value = exact.is_infinite() ? EntropyValue(best.value) : exact;
  result.converged = best.converged || best.value < settings.zero_value;
  return result;
}

}  // namespace fermicorr
