#pragma once

#include "succession/generators.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace succession {

struct TrialOutcome {
  std::size_t trial = 0;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  std::uint64_t seed = 0;
  std::vector<TrialOutcome> trials;

  std::size_t passed() const;
  bool all_passed() const { return passed() == trials.size(); }
};

/// Representations for the round-trip and nonmalevolence suites: agent counts
/// cycle through 1..4, all drawn from one generator seeded with `seed`.
std::vector<AffineRepresentation> random_representation_batch(std::uint64_t seed, std::size_t count);

/// Random dominant nonnegative A on {0..levels-1}^n: passes when theorem1_certify certifies.
SuiteReport theorem1_suite(std::uint64_t seed, std::size_t trials, std::size_t agents = 3, std::size_t levels = 3);

/// synthesize -> fit_additive -> canonical_common_factors reproduces p exactly,
/// and the explicit form is an identity on the grid {0,1,2}^n.
SuiteReport roundtrip_suite(const std::vector<AffineRepresentation>& batch, std::uint64_t seed);

/// Nonnegative coefficients agree with the grid check of nonmalevolence on {0,1,2}^n.
SuiteReport nonmalevolence_suite(const std::vector<AffineRepresentation>& batch, std::uint64_t seed);

}  // namespace succession
