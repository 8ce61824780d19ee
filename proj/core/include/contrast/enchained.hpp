#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "contrast/rational.hpp"

namespace contrast {

// Arithmetic progression y_0 < y_1 < ... < y_r in [0,1], r >= 2.
struct StepChain {
  std::vector<Rational> points;
  Rational step;

  const Rational& first() const { return points.front(); }
  const Rational& last() const { return points.back(); }
  int length() const { return static_cast<int>(points.size()) - 1; }
};

// The chain of length r with extremes y1 < y2. Throws Error(kInvalidArgument)
// if r < 2, y1 >= y2, or the extremes leave [0,1].
StepChain make_chain(const Rational& y1, const Rational& y2, int r);

// Minimum admissible chain step per value of a finite set H, for minimum step
// 1/k. A value y gets a step p when y is interior to a p-step chain inside H
// with p >= 1/k whose extremes already carry steps strictly below p (the
// extremes 0 and 1 carry step 0). Values that never qualify report 0.
// `values` must be ascending and duplicate-free.
std::vector<Rational> s_map(std::span<const Rational> values, int k);

// Single-value form of s_map. Throws Error(kInvalidArgument) if y is not in H.
Rational s_value(std::span<const Rational> values, int k, const Rational& y);

struct EnchainedCheck {
  bool ok = false;
  std::vector<std::string> diagnostics;
};

// Tests both defining assertions of a 1/k-minimum-step-enchained set: the
// grid {i/k} is present and no finer grid from 0 to 1 is; every value other
// than 0 and 1 is interior to an admissible chain.
EnchainedCheck is_enchained_set(std::span<const Rational> values, int k);

struct MesOptions {
  bool strata = false;
  // Worker threads for chain generation. Output does not depend on it.
  int jobs = 1;
};

// F_k together with its per-value steps and, on request, its strata A_0, A_1, ...
struct EnchainedSet {
  int k = 0;
  std::vector<Rational> values;    // ascending
  std::vector<Rational> s_values;  // aligned with values
  std::optional<std::vector<std::vector<Rational>>> strata;
  // min step over each stratum; entry 0 is 0.
  std::vector<Rational> stratum_min_step;

  int passes = 0;
  // True if a pass added no value but lowered some step, and a later pass then
  // added values. A loop guarded only on new values would have stopped early.
  bool literal_guard_diverged = false;

  int cardinality() const { return static_cast<int>(values.size()); }
  bool contains(const Rational& y) const;
};

// Saturates from {0, 1} to the maximal set F_k. Throws Error(kInvalidArgument)
// for k < 2.
EnchainedSet mes(int k, const MesOptions& options = {});

}  // namespace contrast
