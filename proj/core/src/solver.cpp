#include "contrast/solver.hpp"

#include <algorithm>

#include "contrast/enchained.hpp"
#include "lex_search.hpp"

namespace contrast {

namespace {

void require_edges(const Graph& g) {
  if (g.edge_count() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "graph needs at least one edge");
  }
}

MacgResult to_result(const Graph& g, const detail::ScaledValues& dom,
                     std::span<const Rational> values, const detail::Outcome& out) {
  std::vector<Rational> tones;
  tones.reserve(out.tones.size());
  for (std::int64_t t : out.tones) tones.push_back(Rational::of(t, dom.scale));
  Greyscale witness(std::move(tones));
  MacgResult r{contrast_vector(g, witness), std::move(witness), {values.begin(), values.end()},
               out.nodes};
  return r;
}

[[noreturn]] void rethrow_budget(const Graph& g, const detail::ScaledValues& dom,
                                 std::span<const Rational> values,
                                 const detail::BudgetExhausted& ex) {
  std::optional<MacgResult> best;
  if (ex.partial.found) best = to_result(g, dom, values, ex.partial);
  throw BudgetExceededError("node budget exhausted", std::move(best));
}

bool symmetric(const detail::ScaledValues& dom) {
  const auto& v = dom.values;
  for (std::size_t i = 0, j = v.size() - 1; i < j; ++i, --j) {
    if (v[i] + v[j] != dom.scale) return false;
  }
  return true;
}

}  // namespace

MacgResult oracle_macg(const Graph& g, std::span<const Rational> values,
                       std::optional<std::int64_t> budget, int jobs) {
  require_edges(g);
  detail::Problem p;
  p.graph = &g;
  p.domain = detail::scale_values(values);
  try {
    auto out = detail::exhaustive_max(p, budget, jobs);
    return to_result(g, p.domain, values, out);
  } catch (const detail::BudgetExhausted& ex) {
    rethrow_budget(g, p.domain, values, ex);
  }
}

MacgResult solve_macg(const Graph& g, const SearchConfig& config) {
  require_edges(g);
  const int chi = chromatic_number(g);
  const int k = chi - 1;

  std::vector<Rational> values;
  if (config.values) {
    values = *config.values;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
  } else if (k == 1) {
    values = {Rational(0), Rational(1)};
  } else {
    values = mes(k).values;
  }
  detail::Problem p;
  p.graph = &g;
  p.domain = detail::scale_values(values);

  if (k == 1) {
    const auto phi = two_colourings(g)->first;
    std::vector<Rational> tones;
    for (int c : phi.class_of) tones.push_back(Rational(c));
    Greyscale witness(std::move(tones));
    return MacgResult{contrast_vector(g, witness), std::move(witness), std::move(values), 0};
  }

  // Every i/k present means the optimum over this set has lightest tone 1/k.
  bool grid = true;
  for (int i = 0; i <= k && grid; ++i) {
    grid = std::binary_search(values.begin(), values.end(), Rational::of(i, k));
  }
  std::optional<std::vector<std::int64_t>> seed;
  if (grid) {
    const auto colours = optimal_colouring(g);
    seed.emplace();
    for (int c : colours) seed->push_back(c * (p.domain.scale / k));
  }
  if (config.pruning) {
    if (grid) p.min_tone = p.domain.scale / k;
    p.mirror = symmetric(p.domain);
  }

  try {
    auto out = detail::branch_and_bound(p, seed, config.budget, config.jobs);
    return to_result(g, p.domain, values, out);
  } catch (const detail::BudgetExhausted& ex) {
    rethrow_budget(g, p.domain, values, ex);
  }
}

}  // namespace contrast
