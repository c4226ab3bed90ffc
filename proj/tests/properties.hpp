// Copyright 2026 The fermicorr Authors
// SPDX-License-Identifier: Apache-2.0

// Randomized property checks shared by the unit tests and the acceptance runner.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace props {

struct CheckResult {
  std::string name;
  bool ok;
  std::string detail;  // worst deviation or counterexample
};

inline constexpr std::uint64_t kDefaultSeed = 7;

CheckResult anticommutators();
CheckResult creation_matches_pauli_strings();
CheckResult complementary_spectra(std::uint64_t seed);
CheckResult partial_trace_round_trip(std::uint64_t seed);
CheckResult partial_trace_matches_reference(std::uint64_t seed);
CheckResult partial_trace_commutes_with_ssr(std::uint64_t seed);
CheckResult ssr_idempotent(std::uint64_t seed);
CheckResult reorder_involution(std::uint64_t seed);
CheckResult relative_entropy_identities(std::uint64_t seed);
CheckResult product_decomposition_identity(std::uint64_t seed, int samples);
CheckResult twirl_idempotent_and_invariant(std::uint64_t seed);
CheckResult twirl_contracts_relative_entropy(std::uint64_t seed);
CheckResult entanglement_below_correlation();
CheckResult correlation_function_ceiling(std::uint64_t seed);
CheckResult free_energy_chain();
CheckResult gibbs_minimizes_free_energy(std::uint64_t seed);
CheckResult nonfreeness_rotation_invariance(std::uint64_t seed);

/// Every check above with the given seed.
std::vector<CheckResult> run_all(std::uint64_t seed = kDefaultSeed);

}  // namespace props
