#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "contrast/error.hpp"
#include "contrast/graph.hpp"
#include "contrast/greyscale.hpp"
#include "contrast/rational.hpp"

namespace contrast {

struct MacgResult {
  ContrastVector vector;
  Greyscale witness;
  std::vector<Rational> value_set;  // ascending
  std::int64_t nodes = 0;
};

struct SearchConfig {
  // nullopt selects F_k with k = chi - 1.
  std::optional<std::vector<Rational>> values;
  // Enables the cuts that rely on the lightest-tone result: edge tones below
  // 1/k (only when every i/k is a candidate value) and the mirror symmetry
  // f <-> 1 - f (only when the value set is symmetric). The lexicographic
  // bound is always active.
  bool pruning = true;
  std::optional<std::int64_t> budget;
  int jobs = 1;
};

// Raised when a node budget runs out. Carries the best greyscale found so
// far, if any.
class BudgetExceededError : public Error {
 public:
  BudgetExceededError(const std::string& message, std::optional<MacgResult> best)
      : Error(ErrorCode::kBudgetExceeded, message), best_(std::move(best)) {}
  const std::optional<MacgResult>& best() const noexcept { return best_; }

 private:
  std::optional<MacgResult> best_;
};

// Enumerates every map V -> values with 0 and 1 in its image, vertex 0 most
// significant and tones ascending, and returns the maximum vector with the
// first greyscale attaining it. `values` must contain 0 and 1.
MacgResult oracle_macg(const Graph& g, std::span<const Rational> values,
                       std::optional<std::int64_t> budget = std::nullopt, int jobs = 1);

// Branch and bound over the configured value set. Returns the same vector and
// witness as oracle_macg over that set. Bipartite graphs return the canonical
// 2-colouring without search.
MacgResult solve_macg(const Graph& g, const SearchConfig& config = {});

}  // namespace contrast
