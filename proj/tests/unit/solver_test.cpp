#include <gtest/gtest.h>

#include "contrast/enchained.hpp"
#include "contrast/error.hpp"
#include "contrast/solver.hpp"
#include "corpus.hpp"

using namespace contrast;
using contrast::testing::brute_max;

namespace {

std::vector<Rational> R(std::initializer_list<const char*> items) {
  std::vector<Rational> out;
  for (const char* s : items) out.push_back(Rational::parse(s));
  return out;
}

std::vector<Rational> values_for(const Graph& g) {
  const int chi = chromatic_number(g);
  return chi == 2 ? R({"0", "1"}) : mes(chi - 1).values;
}

}  // namespace

TEST(Oracle, K4OverF3) {
  const auto f3 = mes(3).values;
  const MacgResult r = oracle_macg(complete_graph(4), f3);
  EXPECT_EQ(r.vector.tones, R({"1/3", "1/3", "1/3", "2/3", "2/3", "1"}));
  EXPECT_EQ(r.value_set, f3);
  const auto brute = brute_max(complete_graph(4), f3);
  EXPECT_EQ(r.vector.tones, brute.vector);
  EXPECT_EQ(r.witness.tones(), brute.witness);
}

TEST(Oracle, SingleEdge) {
  const MacgResult r = oracle_macg(path_graph(2), R({"0", "1"}));
  EXPECT_EQ(r.vector.tones, R({"1"}));
  EXPECT_EQ(r.witness.tones(), R({"0", "1"}));
}

TEST(Oracle, WheelOverF3) {
  const Graph wheel = wheel_graph(6);
  const auto f3 = mes(3).values;
  const MacgResult r = oracle_macg(wheel, f3);
  // Frozen from the brute-force enumeration in the test support library.
  const auto brute = brute_max(wheel, f3);
  EXPECT_EQ(r.vector.tones, brute.vector);
  EXPECT_EQ(r.witness.tones(), brute.witness);
  EXPECT_EQ(r.vector.tones, R({"1/3", "1/3", "1/3", "1/2", "1/2", "1/2", "2/3", "2/3", "1", "1"}));
  Rational sum(0);
  for (const Rational& t : r.vector.tones) sum += t;
  EXPECT_EQ(sum, Rational::of(35, 6));
}

TEST(Oracle, RequiresExtremes) {
  try {
    oracle_macg(path_graph(2), R({"0", "1/2"}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(Oracle, BudgetCarriesPartialBest) {
  try {
    oracle_macg(wheel_graph(6), mes(3).values, 50);
    ADD_FAILURE();
  } catch (const BudgetExceededError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
    if (e.best()) EXPECT_EQ(contrast_vector(wheel_graph(6), e.best()->witness), e.best()->vector);
  }
}

TEST(Solve, K4) {
  const MacgResult r = solve_macg(complete_graph(4));
  EXPECT_EQ(r.vector.tones, R({"1/3", "1/3", "1/3", "2/3", "2/3", "1"}));
  EXPECT_EQ(r.witness.tones(), R({"0", "1/3", "2/3", "1"}));
  EXPECT_EQ(r.value_set, mes(3).values);
}

TEST(Solve, BipartiteShortCircuits) {
  for (const Graph& g : {path_graph(5), cycle_graph(6), complete_bipartite_graph(2, 3)}) {
    const MacgResult r = solve_macg(g);
    EXPECT_EQ(r.vector.tones, std::vector<Rational>(g.edge_count(), Rational(1)));
    const auto phi = two_colourings(g);
    ASSERT_TRUE(phi);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      EXPECT_EQ(r.witness[v], Rational(phi->first[v]));
    EXPECT_EQ(r.value_set, R({"0", "1"}));
  }
}

TEST(Solve, WheelMatchesQuotedGreyscale) {
  const Graph wheel = wheel_graph(6);
  const MacgResult r = solve_macg(wheel);
  EXPECT_EQ(r.vector, contrast_vector(wheel, Greyscale(R({"1", "0", "1/2", "0", "2/3", "1/3"}))));
  EXPECT_EQ(r.witness.tones(), R({"0", "1/3", "2/3", "1", "1/2", "1"}));
}

TEST(Solve, EdgelessRejected) {
  try {
    solve_macg(Graph::from_edges(1, std::initializer_list<std::pair<int, int>>{}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(Solve, ExplicitValueSet) {
  // Restricted to {0, 1/2, 1}, K_4 cannot avoid a zero edge tone.
  SearchConfig cfg;
  cfg.values = R({"0", "1/2", "1"});
  const MacgResult r = solve_macg(complete_graph(4), cfg);
  const auto brute = brute_max(complete_graph(4), *cfg.values);
  EXPECT_EQ(r.vector.tones, brute.vector);
  EXPECT_EQ(r.witness.tones(), brute.witness);
  EXPECT_EQ(r.vector.tones.front(), Rational(0));
}

TEST(Solve, NonGridValueSetMatchesBruteForce) {
  SearchConfig cfg;
  cfg.values = R({"0", "1/5", "2/7", "1/2", "3/4", "1"});
  for (const Graph& g : {complete_graph(4), wheel_graph(6), cycle_graph(5)}) {
    const auto brute = brute_max(g, *cfg.values);
    for (bool pruning : {true, false}) {
      cfg.pruning = pruning;
      const MacgResult r = solve_macg(g, cfg);
      EXPECT_EQ(r.vector.tones, brute.vector);
      EXPECT_EQ(r.witness.tones(), brute.witness);
    }
  }
}

TEST(Solve, BudgetExceeded) {
  SearchConfig cfg;
  cfg.budget = 3;
  try {
    solve_macg(complete_graph(6), cfg);
    ADD_FAILURE();
  } catch (const BudgetExceededError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
}

TEST(Solve, JobsDoNotChangeResult) {
  for (const Graph& g : {complete_graph(5), wheel_graph(6), wheel_graph(7), complete_graph(6)}) {
    SearchConfig one, four;
    four.jobs = 4;
    const MacgResult a = solve_macg(g, one);
    const MacgResult b = solve_macg(g, four);
    EXPECT_EQ(a.vector, b.vector);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.nodes, b.nodes);
    const auto values = values_for(g);
    const MacgResult o1 = oracle_macg(g, values, std::nullopt, 1);
    const MacgResult o4 = oracle_macg(g, values, std::nullopt, 4);
    EXPECT_EQ(o1.witness, o4.witness);
    EXPECT_EQ(o1.nodes, o4.nodes);
  }
}

TEST(Solve, MatchesBruteForceOnSmallGraphs) {
  // Independent enumeration over F_{chi-1} for every connected graph on at
  // most five vertices.
  for (const Graph& g : contrast::testing::connected_graphs(5)) {
    const auto values = values_for(g);
    const auto brute = brute_max(g, values);
    const MacgResult r = solve_macg(g);
    ASSERT_EQ(r.vector.tones, brute.vector);
    ASSERT_EQ(r.witness.tones(), brute.witness);
  }
}
