#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ciflie/generators.hpp"

namespace ciflie {

struct TrialFailure {
  std::uint64_t seed;   // replays the trial: make_config(algebra, seed, chain_length)
  std::string digest;   // FNV-1a of the generated inputs
  std::string witness;  // failing clause and vector
};

struct TheoremReport {
  std::string theorem_id;
  std::size_t trials = 0;
  std::vector<TrialFailure> failures;  // sorted by seed
  bool specified = true;               // false for claims whose predicate is not defined
  std::vector<std::string> notes;

  bool passed() const noexcept { return failures.empty(); }
};

/// The catalog ids, in a stable order (excludes neg-controls and anti-ideal).
const std::vector<std::string>& theorem_ids();

inline constexpr std::string_view kNegControlsId = "neg-controls";
inline constexpr std::string_view kAntiIdealId = "anti-ideal";

bool is_known_theorem(std::string_view id);

/// Runs `trials` instances of a catalog claim. Trial i uses the seed
/// mix_seed(cfg.seed, i) and a fresh degree pool drawn from it. Throws
/// UnknownTheorem for ids outside the catalog.
TheoremReport check_theorem(std::string_view id, const GenConfig& cfg, std::size_t trials);

/// Deliberately false variants of catalog laws. The report fails when some
/// variant survives every trial, meaning the harness could not detect it.
TheoremReport negative_controls(const GenConfig& cfg, std::size_t trials = 200);

/// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

}  // namespace ciflie
