// Copyright 2026 The fermicorr Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file critical.hpp
 * @brief Critical dimer distances beyond which thermal entanglement vanishes.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fermicorr {

enum class Picture { kMode, kParticle };
enum class CriticalMethod { kExact, kLowT, kAsymptotic };

std::string to_string(Picture p);
std::string to_string(CriticalMethod m);

/// No sign change of the entanglement indicator inside the scanned interval.
class BracketError : public std::runtime_error {
 public:
  BracketError(const std::string& what, double lo, double hi) : std::runtime_error(what), lo_(lo), hi_(hi) {}
  double lo() const { return lo_; }
  double hi() const { return hi_; }

 private:
  double lo_;
  double hi_;
};

/// Coefficients of r_crit(T) = -½ log T + c0 + c1 T + O(T²).
struct AsymptoticConstants {
  double c0;
  double c1;
};

AsymptoticConstants asymptotic_constants(Picture p);

/// -½ log T + c0 + c1 T; T > 0.
double asymptote(Picture p, double T);

/// Largest r at which the SSR-projected Gibbs state is still PPT-entangled.
double rcrit_mode_exact(double T, double tolerance = 1e-3);
/// Largest r at which the Gibbs state still has quantum nonfreeness.
double rcrit_particle_exact(double T, double tolerance = 1e-3);

/// Two-level roots; T ≤ 0.3.
double rcrit_mode_lowT(double T, double tolerance = 1e-6);
double rcrit_particle_lowT(double T, double tolerance = 1e-6);

double rcrit(Picture p, CriticalMethod m, double T);

/// Is the Gibbs state at (T, r) entangled in the given picture (exact criteria)?
bool gibbs_entangled(Picture p, double T, double r);

struct CriticalSample {
  double T;
  double r;
  CriticalMethod method;
};

struct CriticalCurve {
  Picture picture;
  std::vector<CriticalSample> samples;
};

/// Least-squares fit of r(T) + ½ log T = c0 + c1 T over the given temperatures.
AsymptoticConstants fit_asymptotic_constants(const std::vector<double>& temperatures, const std::vector<double>& roots);

}  // namespace fermicorr
