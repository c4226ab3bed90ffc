// Copyright 2026 The fermicorr Authors
// SPDX-License-Identifier: Apache-2.0

#include <fermicorr/critical.hpp>

#include <cmath>
#include <functional>

#include <fermicorr/hubbard.hpp>
#include <fermicorr/particle.hpp>
#include <fermicorr/ree.hpp>

namespace fermicorr {

namespace {

constexpr double kScanStart = 0.1;
constexpr double kScanStep = 0.1;
constexpr double kLowTMax = 0.3;

void require_temperature(double T) {
  if (!(T > 0.0) || !std::isfinite(T)) throw std::invalid_argument("temperature must be positive");
}

// Scan upward for the first r where `entangled` turns false, then bisect.
double find_boundary(const std::function<bool(double)>& entangled, double T, double tolerance) {
  const double hi_end = -0.5 * std::log(T) + 3.0;
  double lo = kScanStart;
  if (!entangled(lo)) throw BracketError("state is not entangled at the start of the scan", kScanStart, hi_end);
  double hi = lo;
  for (;;) {
    hi = lo + kScanStep;
    if (hi > hi_end) throw BracketError("no sign change in the scanned interval", kScanStart, hi_end);
    if (!entangled(hi)) break;
    lo = hi;
  }
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (entangled(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double boltzmann_excited(double r, double T) {
  const DimerSpectrum s = analytic_spectrum(std::exp(-r));
  return std::exp(-s.gap / T);
}

}  // namespace

std::string to_string(Picture p) { return p == Picture::kMode ? "mode" : "particle"; }

std::string to_string(CriticalMethod m) {
  switch (m) {
    case CriticalMethod::kExact:
      return "exact";
    case CriticalMethod::kLowT:
      return "lowT";
    case CriticalMethod::kAsymptotic:
      return "asymptotic";
  }
  return "unknown";
}

AsymptoticConstants asymptotic_constants(Picture p) {
  const double log3 = std::log(3.0);
  const double c0 = std::log(2.0) - 0.5 * std::log(log3);
  if (p == Picture::kMode) return {c0, -0.5 * (1.0 + log3)};
  return {c0, -0.5 * (2.0 + log3)};
}

double asymptote(Picture p, double T) {
  require_temperature(T);
  const AsymptoticConstants k = asymptotic_constants(p);
  return -0.5 * std::log(T) + k.c0 + k.c1 * T;
}

bool gibbs_entangled(Picture p, double T, double r) {
  const DensityMatrix rho = gibbs_state(DimerParams::from_distance(r), T);
  if (p == Picture::kMode) return !is_separable(rho, dimer_partition(), true);
  return quantum_nonfreeness(rho) > kQnfTol;
}

double rcrit_mode_exact(double T, double tolerance) {
  require_temperature(T);
  return find_boundary([T](double r) { return gibbs_entangled(Picture::kMode, T, r); }, T, tolerance);
}

double rcrit_particle_exact(double T, double tolerance) {
  require_temperature(T);
  return find_boundary([T](double r) { return gibbs_entangled(Picture::kParticle, T, r); }, T, tolerance);
}

double rcrit_mode_lowT(double T, double tolerance) {
  require_temperature(T);
  if (T > kLowTMax) throw std::invalid_argument("two-level roots need T <= 0.3");
  // entangled while a² > 3 e^{-ΔE/T}
  return find_boundary(
      [T](double r) {
        const double a = analytic_spectrum(std::exp(-r)).a;
        return a * a > 3.0 * boltzmann_excited(r, T);
      },
      T, tolerance);
}

double rcrit_particle_lowT(double T, double tolerance) {
  require_temperature(T);
  if (T > kLowTMax) throw std::invalid_argument("two-level roots need T <= 0.3");
  // |a² - b²| p² > 3 q², with p² ∝ 1 and q² ∝ e^{-ΔE/T}
  return find_boundary(
      [T](double r) {
        const DimerSpectrum s = analytic_spectrum(std::exp(-r));
        return std::abs(s.a * s.a - s.b * s.b) > 3.0 * boltzmann_excited(r, T);
      },
      T, tolerance);
}

double rcrit(Picture p, CriticalMethod m, double T) {
  switch (m) {
    case CriticalMethod::kExact:
      return p == Picture::kMode ? rcrit_mode_exact(T) : rcrit_particle_exact(T);
    case CriticalMethod::kLowT:
      return p == Picture::kMode ? rcrit_mode_lowT(T) : rcrit_particle_lowT(T);
    case CriticalMethod::kAsymptotic:
      return asymptote(p, T);
  }
  throw std::invalid_argument("unknown method");
}

AsymptoticConstants fit_asymptotic_constants(const std::vector<double>& temperatures, const std::vector<double>& roots) {
  if (temperatures.size() != roots.size() || temperatures.size() < 2) {
    throw std::invalid_argument("fit needs at least two (T, r) pairs");
  }
  const auto n = static_cast<Eigen::Index>(temperatures.size());
  Eigen::MatrixXd design(n, 2);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    design(i, 0) = 1.0;
    design(i, 1) = temperatures[i];
    y(i) = roots[i] + 0.5 * std::log(temperatures[i]);
  }
  const Eigen::Vector2d c = design.colPivHouseholderQr().solve(y);
  return {c(0), c(1)};
}

}  // namespace fermicorr
