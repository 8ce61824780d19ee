#pragma once

// Lexicographic maximum-contrast search over integer-scaled tones. Shared by
// the unrestricted solver and the {0,1}-restricted oracles.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "contrast/graph.hpp"
#include "contrast/rational.hpp"

namespace contrast::detail {

struct ScaledValues {
  std::int64_t scale = 1;
  std::vector<std::int64_t> values;  // ascending, each value * scale
};

// Puts the values over their least common denominator. Throws
// Error(kInvalidArgument) unless the set is ascending, inside [0,1], contains
// 0 and 1, and the common denominator fits in 62 bits.
ScaledValues scale_values(std::span<const Rational> values);

struct Problem {
  const Graph* graph = nullptr;
  ScaledValues domain;
  // Per-vertex fixed tone (scaled), or nullopt for a free vertex. Empty means
  // every vertex is free.
  std::vector<std::optional<std::int64_t>> fixed;
  // Branches creating an edge tone below this are cut. 0 disables the cut.
  std::int64_t min_tone = 0;
  // The first free vertex in search order may be restricted to tones <= 1/2.
  // Only sound when the domain is closed under y -> 1 - y and nothing is fixed.
  bool mirror = false;
};

struct Outcome {
  bool found = false;
  std::vector<std::int64_t> tones;   // per vertex, scaled
  std::vector<std::int64_t> vector;  // ascending edge tones, scaled
  std::int64_t nodes = 0;
};

// Thrown when the node budget runs out; carries the best complete assignment
// seen so far, if any.
struct BudgetExhausted {
  Outcome partial;
};

// Visits every assignment of the free vertices in index order, tones ascending,
// and keeps the first one attaining the maximum. Leaves whose image lacks 0 or
// 1 are skipped. No branch is cut.
Outcome exhaustive_max(const Problem& p, std::optional<std::int64_t> budget, int jobs);

// Branch and bound for the maximum vector followed by a search for the
// lexicographically smallest tone sequence attaining it. `seed` is a complete
// assignment used as the starting incumbent. Result is identical to
// exhaustive_max whenever the cuts enabled in `p` are sound.
Outcome branch_and_bound(const Problem& p, const std::optional<std::vector<std::int64_t>>& seed,
                         std::optional<std::int64_t> budget, int jobs);

// Ascending edge tones of a complete assignment.
std::vector<std::int64_t> scaled_vector(const Graph& g, std::span<const std::int64_t> tones);

}  // namespace contrast::detail
