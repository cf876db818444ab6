#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "condensed/json_io.hpp"
#include "condensed/tower.hpp"

namespace condensed {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteConfig {
  std::uint64_t seed = 0;
  std::size_t budget = kDefaultBudget;
  std::size_t random_cases = 100;
  bool include_broken = false;  // adds a deliberately failing corpus entry
};

/// A deterministic pseudorandom tower: `depth+1` levels with sizes growing
/// up to max_top, surjective random transitions.
Tower random_tower(std::uint64_t& state, std::size_t depth, std::size_t max_top);

/// Deterministic xorshift step, the suite's only source of randomness (so
/// output is identical across standard libraries).
std::uint64_t next_rand(std::uint64_t& state);

/// The full invariant suite: lattice laws, limit cones, adjunction laws,
/// oracle agreement, colimit cross-check, Kan comparison, module
/// consistency. Deterministic for a fixed config.
std::vector<SuiteResult> run_verify_suite(const SuiteConfig& cfg);

json suite_to_json(const SuiteConfig& cfg, const std::vector<SuiteResult>& results);

}  // namespace condensed
