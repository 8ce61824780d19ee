#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "contrast/error.hpp"
#include "contrast/rmacg.hpp"
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

template <typename F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kBudgetExceeded;
}

// Hub 0, legs 0-1-4, 0-2-5, 0-3-6.
Graph spider() { return Graph::from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}}); }

void expect_compatible(const RmacgResult& r, const IncompleteGreyscale& inc) {
  for (Vertex v : inc.fixed_vertices()) EXPECT_EQ(r.witness[v], Rational(inc.tone(v))) << v;
}

int halves(const Greyscale& f) {
  return static_cast<int>(std::count(f.tones().begin(), f.tones().end(), Rational::of(1, 2)));
}

}  // namespace

TEST(IncompleteGreyscale, Validation) {
  const Graph p = path_graph(4);
  EXPECT_EQ(error_of([&] { IncompleteGreyscale(p, std::vector<std::pair<Vertex, int>>{}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(error_of([&] { IncompleteGreyscale(p, {{0, 0}, {1, 1}, {2, 0}, {3, 1}}); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(error_of([&] { IncompleteGreyscale(p, {{0, 2}}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(error_of([&] { IncompleteGreyscale(p, {{0, 0}, {0, 1}}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(error_of([&] { IncompleteGreyscale(p, {{4, 0}}); }), ErrorCode::kOutOfRange);
  EXPECT_EQ(error_of([&] { IncompleteGreyscale(p, {{0, 0}, {1, 0}}); }),
            ErrorCode::kAdjacencyViolation);
  const IncompleteGreyscale inc(p, {{3, 0}, {0, 0}});
  EXPECT_EQ(inc.fixed_vertices(), (std::vector<Vertex>{0, 3}));
  EXPECT_TRUE(inc.is_fixed(3));
  EXPECT_FALSE(inc.is_fixed(1));
}

TEST(PartitionVc, Path) {
  const Graph p = path_graph(4);
  const VcPartition part = partition_vc(p, IncompleteGreyscale(p, {{0, 0}, {3, 0}}));
  EXPECT_EQ(part.match_phi0, (std::vector<Vertex>{0}));
  EXPECT_EQ(part.match_phi1, (std::vector<Vertex>{3}));
}

TEST(PartitionVc, AllMatchingPhi0) {
  const Graph p = path_graph(4);
  const VcPartition part = partition_vc(p, IncompleteGreyscale(p, {{0, 0}, {1, 1}, {3, 1}}));
  EXPECT_EQ(part.match_phi0, (std::vector<Vertex>{0, 1, 3}));
  EXPECT_TRUE(part.match_phi1.empty());
}

TEST(PartitionVc, Errors) {
  const Graph p = path_graph(4);
  EXPECT_EQ(error_of([&] { IncompleteGreyscale(p, {{0, 0}, {1, 0}}); }),
            ErrorCode::kAdjacencyViolation);
  const Graph c5 = cycle_graph(5);
  EXPECT_EQ(error_of([&] { partition_vc(c5, IncompleteGreyscale(c5, {{0, 0}})); }),
            ErrorCode::kNotBipartite);
  EXPECT_EQ(error_of([&] { partition_vc(path_graph(5), IncompleteGreyscale(p, {{0, 0}})); }),
            ErrorCode::kInvalidArgument);
}

TEST(Constructive, Path) {
  const Graph p = path_graph(5);
  const IncompleteGreyscale inc(p, {{0, 0}, {3, 0}});
  const Greyscale f = constructive_f_phi(p, inc);
  EXPECT_EQ(f.tones(), R({"0", "1", "2/3", "0", "2/3"}));
  EXPECT_EQ(contrast_vector(p, f).tones, R({"1/3", "2/3", "2/3", "1"}));
}

TEST(Constructive, MatchingColouring) {
  const Graph p = path_graph(5);
  const IncompleteGreyscale inc(p, {{0, 0}, {3, 1}});
  EXPECT_EQ(constructive_f_phi(p, inc).tones(), R({"0", "1", "0", "1", "0"}));
}

TEST(Constructive, CompleteBipartiteMixedSide) {
  const Graph g = complete_bipartite_graph(2, 3);
  const IncompleteGreyscale inc(g, {{0, 0}, {1, 1}});
  const Greyscale f = constructive_f_phi(g, inc);
  expect_compatible(RmacgResult{contrast_vector(g, f), f, "", {}, 0}, inc);
  for (Vertex v = 2; v < 5; ++v)
    EXPECT_TRUE(f[v] == Rational::of(1, 3) || f[v] == Rational::of(2, 3)) << f[v];
  for (const Rational& t : contrast_vector(g, f).tones)
    EXPECT_TRUE(t == Rational::of(1, 3) || t == Rational::of(2, 3) || t == Rational(1));
}

TEST(Constructive, EdgeTonesOnRandomCases) {
  for (const auto& c : contrast::testing::random_bipartite_cases(150, 17u)) {
    const Greyscale f = constructive_f_phi(c.graph, c.inc);
    for (Vertex v : c.inc.fixed_vertices()) EXPECT_EQ(f[v], Rational(c.inc.tone(v)));
    for (const Rational& t : contrast_vector(c.graph, f).tones)
      EXPECT_TRUE(t == Rational::of(1, 3) || t == Rational::of(2, 3) || t == Rational(1)) << t;
  }
}

TEST(OracleRmacg, PathFiveDiffersFromSingletonBound) {
  const Graph p = path_graph(5);
  const IncompleteGreyscale inc(p, {{0, 0}, {3, 0}});
  const RmacgResult r = oracle_rmacg(p, inc);
  const auto brute = brute_max(p, restricted_tones(), &inc);
  EXPECT_EQ(r.vector.tones, brute.vector);
  EXPECT_EQ(r.witness.tones(), brute.witness);
  // Vertex e is free beyond d, so edge {d, e} reaches 1.
  EXPECT_EQ(r.vector.tones, R({"1/2", "1/2", "1", "1"}));
  EXPECT_EQ(r.witness.tones(), R({"0", "1/2", "1", "0", "1"}));
  EXPECT_EQ(r.method, kMethodOracle);
}

TEST(OracleRmacg, AllMatchingPhi0GivesOnes) {
  const Graph p = path_graph(5);
  const RmacgResult r = oracle_rmacg(p, IncompleteGreyscale(p, {{0, 0}, {3, 1}}));
  EXPECT_EQ(r.vector.tones, std::vector<Rational>(4, Rational(1)));
}

TEST(OracleRmacg, CompleteBipartiteMixedPart) {
  const Graph g = complete_bipartite_graph(2, 3);
  const RmacgResult r = oracle_rmacg(g, IncompleteGreyscale(g, {{0, 0}, {1, 1}}));
  EXPECT_EQ(r.vector.tones, std::vector<Rational>(6, Rational::of(1, 2)));
}

TEST(OracleRmacg, BranchAndBoundAgreesWithEnumeration) {
  RmacgOracleOptions bb;
  bb.exhaustive = false;
  for (const auto& c : contrast::testing::random_bipartite_cases(80, 23u)) {
    const RmacgResult a = oracle_rmacg(c.graph, c.inc);
    const RmacgResult b = oracle_rmacg(c.graph, c.inc, bb);
    EXPECT_EQ(a.vector, b.vector);
    EXPECT_EQ(a.witness, b.witness);
  }
}

TEST(OracleRmacg, MatchesBruteForce) {
  for (const auto& c : contrast::testing::random_bipartite_cases(80, 29u)) {
    const auto brute = brute_max(c.graph, restricted_tones(), &c.inc);
    const RmacgResult r = oracle_rmacg(c.graph, c.inc);
    ASSERT_EQ(r.vector.tones, brute.vector);
    ASSERT_EQ(r.witness.tones(), brute.witness);
  }
}

TEST(OracleRmacg, Budget) {
  RmacgOracleOptions opts;
  opts.budget = 5;
  const Graph p = path_graph(7);
  EXPECT_EQ(error_of([&] { oracle_rmacg(p, IncompleteGreyscale(p, {{0, 0}, {3, 0}}), opts); }),
            ErrorCode::kBudgetExceeded);
}

TEST(OracleRmacg, RejectsNonBipartite) {
  const Graph c5 = cycle_graph(5);
  EXPECT_EQ(error_of([&] { oracle_rmacg(c5, IncompleteGreyscale(c5, {{0, 0}})); }),
            ErrorCode::kNotBipartite);
}

TEST(CompleteBipartite, ConsistentWithPhi0) {
  const Graph g = complete_bipartite_graph(2, 3);
  const IncompleteGreyscale inc(g, {{0, 0}, {2, 1}});
  const RmacgResult r = solve_complete_bipartite(2, 3, inc);
  EXPECT_EQ(r.vector.tones, std::vector<Rational>(6, Rational(1)));
  EXPECT_EQ(r.witness.tones(), R({"0", "0", "1", "1", "1"}));
  EXPECT_EQ(r.method, kMethodCompleteBipartite);
}

TEST(CompleteBipartite, MixedPartGivesHalves) {
  const Graph g = complete_bipartite_graph(2, 3);
  const IncompleteGreyscale inc(g, {{0, 0}, {1, 1}});
  const RmacgResult r = solve_complete_bipartite(g, inc);
  EXPECT_EQ(r.vector.tones, std::vector<Rational>(6, Rational::of(1, 2)));
  EXPECT_EQ(r.witness.tones(), R({"0", "1", "1/2", "1/2", "1/2"}));
  const RmacgResult o = oracle_rmacg(g, inc);
  EXPECT_EQ(o.witness, r.witness);
}

TEST(CompleteBipartite, SingleEdge) {
  const Graph g = complete_bipartite_graph(1, 1);
  const RmacgResult r = solve_complete_bipartite(1, 1, IncompleteGreyscale(g, {{0, 0}}));
  EXPECT_EQ(r.vector.tones, R({"1"}));
}

TEST(CompleteBipartite, WitnessMatchesOracleOnAllPatterns) {
  for (int r = 1; r <= 3; ++r) {
    for (int s = 1; s <= 3; ++s) {
      const Graph g = complete_bipartite_graph(r, s);
      int total = 1;
      for (int i = 0; i < r + s; ++i) total *= 3;
      for (int code = 0; code < total; ++code) {
        std::vector<std::pair<Vertex, int>> fixed;
        for (int i = 0, c = code; i < r + s; ++i, c /= 3)
          if (c % 3) fixed.emplace_back(i, c % 3 - 1);
        std::optional<IncompleteGreyscale> inc;
        try {
          inc.emplace(g, fixed);
        } catch (const Error&) {
          continue;
        }
        const RmacgResult closed = solve_complete_bipartite(g, *inc);
        const RmacgResult oracle = oracle_rmacg(g, *inc);
        EXPECT_EQ(closed.vector, oracle.vector);
        EXPECT_EQ(closed.witness, oracle.witness);
      }
    }
  }
}

TEST(CompleteBipartite, RejectsOtherGraphs) {
  const Graph p = path_graph(4);
  EXPECT_EQ(error_of([&] { solve_complete_bipartite(p, IncompleteGreyscale(p, {{0, 0}})); }),
            ErrorCode::kPreconditionFailed);
  EXPECT_EQ(error_of([&] { solve_complete_bipartite(2, 3, IncompleteGreyscale(p, {{0, 0}})); }),
            ErrorCode::kInvalidArgument);
}

TEST(SingleOpposite, Path) {
  const Graph p = path_graph(4);
  const RmacgResult r = solve_single_opposite(p, IncompleteGreyscale(p, {{0, 0}, {3, 0}}));
  EXPECT_EQ(r.vector.tones, R({"1/2", "1/2", "1"}));
  EXPECT_EQ(r.witness.tones(), R({"0", "1/2", "1", "0"}));
  const IncompleteGreyscale inc(p, {{0, 0}, {3, 0}});
  const auto three = brute_max(p, R({"0", "1/2", "1"}), &inc);
  EXPECT_EQ(r.vector.tones, three.vector);
  EXPECT_EQ(r.witness.tones(), three.witness);
  EXPECT_EQ(r.method, kMethodSingleOpposite);
}

TEST(SingleOpposite, StarCentreAndLeafSharingToneIsInvalid) {
  const Graph star = complete_bipartite_graph(1, 4);
  EXPECT_EQ(error_of([&] { IncompleteGreyscale(star, {{0, 0}, {1, 0}}); }),
            ErrorCode::kAdjacencyViolation);
}

TEST(SingleOpposite, StarWithOpposedLeaves) {
  const Graph star = complete_bipartite_graph(1, 4);
  const IncompleteGreyscale inc(star, {{1, 0}, {2, 1}});
  const RmacgResult r = solve_single_opposite(star, inc);
  const auto three = brute_max(star, R({"0", "1/2", "1"}), &inc);
  EXPECT_EQ(r.vector.tones, three.vector);
  EXPECT_EQ(r.vector.tones, std::vector<Rational>(4, Rational::of(1, 2)));
  EXPECT_EQ(r.witness.tones(), R({"1/2", "0", "1", "0", "0"}));
}

TEST(SingleOpposite, Precondition) {
  const Graph p = path_graph(6);
  EXPECT_EQ(error_of([&] { solve_single_opposite(p, IncompleteGreyscale(p, {{0, 0}, {2, 0}})); }),
            ErrorCode::kPreconditionFailed);
  EXPECT_EQ(error_of([&] {
              solve_single_opposite(p, IncompleteGreyscale(p, {{0, 0}, {2, 0}, {4, 1}, {5, 0}}));
            }),
            ErrorCode::kPreconditionFailed);
}

TEST(StarSubdivision, ClawMixedLeaves) {
  const Graph claw = complete_bipartite_graph(1, 3);
  const RmacgResult r = solve_star_subdivision(claw, IncompleteGreyscale(claw, {{1, 0}, {2, 0}, {3, 1}}));
  EXPECT_EQ(r.vector.tones, std::vector<Rational>(3, Rational::of(1, 2)));
  EXPECT_EQ(r.witness[0], Rational::of(1, 2));
  EXPECT_EQ(r.method, kMethodStarSubdivision);
}

TEST(StarSubdivision, ClawEqualLeaves) {
  const Graph claw = complete_bipartite_graph(1, 3);
  const RmacgResult r = solve_star_subdivision(claw, IncompleteGreyscale(claw, {{1, 0}, {2, 0}, {3, 0}}));
  EXPECT_EQ(r.vector.tones, std::vector<Rational>(3, Rational(1)));
  EXPECT_EQ(halves(r.witness), 0);
}

TEST(StarSubdivision, Spider) {
  const Graph t = spider();
  const IncompleteGreyscale inc(t, {{4, 0}, {5, 0}, {6, 1}});
  const RmacgResult r = solve_star_subdivision(t, inc);
  const auto three = brute_max(t, R({"0", "1/2", "1"}), &inc);
  EXPECT_EQ(r.vector.tones, three.vector);
  EXPECT_EQ(r.vector.tones, R({"1/2", "1/2", "1", "1", "1", "1"}));
  EXPECT_EQ(r.witness.tones(), R({"0", "1", "1", "1/2", "0", "0", "1"}));
}

TEST(StarSubdivision, RandomSpidersMatchOracle) {
  contrast::testing::Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const int legs = rng.between(3, 4);
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<Vertex, int>> fixed;
    int n = 1;
    for (int l = 0; l < legs; ++l) {
      int prev = 0;
      for (int len = rng.between(1, 3 - (legs == 4)); len > 0; --len) {
        edges.emplace_back(prev, n);
        prev = n++;
      }
      fixed.emplace_back(prev, rng.between(0, 1));
    }
    const Graph t = Graph::from_edges(n, edges);
    std::optional<IncompleteGreyscale> inc;
    try {
      inc.emplace(t, fixed);
    } catch (const Error&) {
      continue;
    }
    const RmacgResult r = solve_star_subdivision(t, *inc);
    const RmacgResult o = oracle_rmacg(t, *inc);
    EXPECT_EQ(r.vector, o.vector);
    expect_compatible(r, *inc);
    EXPECT_LE(halves(r.witness), legs / 2);
  }
}

TEST(StarSubdivision, Preconditions) {
  const Graph p = path_graph(4);
  EXPECT_EQ(error_of([&] { solve_star_subdivision(p, IncompleteGreyscale(p, {{0, 0}, {3, 0}})); }),
            ErrorCode::kPreconditionFailed);
  const Graph t = spider();
  EXPECT_EQ(error_of([&] { solve_star_subdivision(t, IncompleteGreyscale(t, {{4, 0}, {5, 0}})); }),
            ErrorCode::kPreconditionFailed);
}

TEST(TreeThree, Spider) {
  const Graph t = spider();
  const RmacgResult r = solve_tree_three(t, IncompleteGreyscale(t, {{4, 0}, {5, 0}, {6, 1}}));
  EXPECT_EQ(r.vector.tones, R({"1/2", "1/2", "1", "1", "1", "1"}));
  EXPECT_EQ(halves(r.witness), 1);
  EXPECT_EQ(r.witness[3], Rational::of(1, 2));
  EXPECT_EQ(r.method, kMethodTreeThree);
}

TEST(TreeThree, MatchingColouring) {
  const Graph t = spider();
  const RmacgResult r = solve_tree_three(t, IncompleteGreyscale(t, {{4, 0}, {5, 0}, {6, 0}}));
  EXPECT_EQ(r.witness.tones(), R({"0", "1", "1", "1", "0", "0", "0"}));
  EXPECT_EQ(halves(r.witness), 0);
}

TEST(TreeThree, CaterpillarUsesTwoHalves) {
  // The odd fixed vertex 1 hangs off the hub 0 of degree 5; cutting both
  // branches towards 3 and 5 costs 2 + 2 < 5.
  const Graph t = Graph::from_edges(8, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {0, 6}, {0, 7}});
  const IncompleteGreyscale inc(t, {{3, 0}, {5, 0}, {1, 0}});
  const RmacgResult r = solve_tree_three(t, inc);
  const RmacgResult o = oracle_rmacg(t, inc);
  EXPECT_EQ(r.vector, o.vector);
  EXPECT_EQ(r.vector.tones, R({"1/2", "1/2", "1/2", "1/2", "1", "1", "1"}));
  EXPECT_EQ(r.witness[2], Rational::of(1, 2));
  EXPECT_EQ(r.witness[4], Rational::of(1, 2));
  EXPECT_EQ(halves(r.witness), 2);
}

TEST(TreeThree, RandomTreesMatchOracle) {
  for (const auto& c : contrast::testing::random_tree_three_cases(60, 43u)) {
    const RmacgResult r = solve_tree_three(c.graph, c.inc);
    const RmacgResult o = oracle_rmacg(c.graph, c.inc);
    EXPECT_EQ(r.vector, o.vector);
    EXPECT_EQ(r.witness, o.witness);
    EXPECT_LE(halves(r.witness), 2);
  }
}

TEST(TreeThree, Preconditions) {
  const Graph c4 = cycle_graph(4);
  EXPECT_EQ(error_of([&] { solve_tree_three(c4, IncompleteGreyscale(c4, {{0, 0}, {1, 1}, {2, 0}})); }),
            ErrorCode::kPreconditionFailed);
  const Graph t = spider();
  EXPECT_EQ(error_of([&] { solve_tree_three(t, IncompleteGreyscale(t, {{4, 0}, {5, 0}})); }),
            ErrorCode::kPreconditionFailed);
}

TEST(SolveRmacg, Dispatch) {
  const Graph p4 = path_graph(4);
  EXPECT_EQ(solve_rmacg(p4, IncompleteGreyscale(p4, {{0, 0}, {3, 1}})).method, kMethodTwoColouring);
  EXPECT_EQ(solve_rmacg(p4, IncompleteGreyscale(p4, {{0, 0}, {3, 0}})).method,
            kMethodSingleOpposite);
  const Graph k23 = complete_bipartite_graph(2, 3);
  EXPECT_EQ(solve_rmacg(k23, IncompleteGreyscale(k23, {{0, 0}, {1, 1}})).method,
            kMethodCompleteBipartite);
  const Graph t = spider();
  EXPECT_EQ(solve_rmacg(t, IncompleteGreyscale(t, {{4, 0}, {5, 0}, {6, 1}})).method,
            kMethodStarSubdivision);
  EXPECT_EQ(solve_rmacg(t, IncompleteGreyscale(t, {{1, 1}, {5, 0}, {6, 1}})).method,
            kMethodTreeThree);
  const Graph p7 = path_graph(7);
  const IncompleteGreyscale hard(p7, {{0, 0}, {2, 0}, {4, 1}, {6, 1}});
  const RmacgResult r = solve_rmacg(p7, hard);
  EXPECT_EQ(r.method, kMethodOracle);
  EXPECT_EQ(solve_rmacg(p7, hard, RmacgMethod::kConstructive).method, kMethodConstructive);
  EXPECT_EQ(solve_rmacg(p7, hard, RmacgMethod::kOracle).vector, r.vector);
}

TEST(SolveRmacg, EveryPathIsCompatibleAndAtLeastAThird) {
  for (const auto& c : contrast::testing::random_bipartite_cases(120, 31u)) {
    const VcPartition part = partition_vc(c.graph, c.inc);
    const bool mixed = !part.match_phi0.empty() && !part.match_phi1.empty();
    for (RmacgMethod m : {RmacgMethod::kAuto, RmacgMethod::kOracle, RmacgMethod::kConstructive}) {
      const RmacgResult r = solve_rmacg(c.graph, c.inc, m);
      expect_compatible(r, c.inc);
      EXPECT_EQ(contrast_vector(c.graph, r.witness), r.vector);
      EXPECT_EQ(r.partition, part);
      if (mixed) EXPECT_GE(r.vector.tones.front(), Rational::of(1, 3));
    }
    EXPECT_EQ(solve_rmacg(c.graph, c.inc).vector, oracle_rmacg(c.graph, c.inc).vector);
  }
}

TEST(FixedTones, ParseAndWrite) {
  const Graph p = path_graph(5);
  std::istringstream in("# fixed\n0 0\n\n3 0\n");
  const IncompleteGreyscale inc = parse_fixed_tones(in, p);
  EXPECT_EQ(inc, IncompleteGreyscale(p, {{0, 0}, {3, 0}}));
  std::ostringstream out;
  write_fixed_tones(inc, out);
  EXPECT_EQ(out.str(), "0 0\n3 0\n");
  std::istringstream again(out.str());
  EXPECT_EQ(parse_fixed_tones(again, p), inc);
}

TEST(FixedTones, Errors) {
  const Graph p = path_graph(5);
  auto code = [&](const std::string& text) {
    std::istringstream in(text);
    return error_of([&] { parse_fixed_tones(in, p); });
  };
  EXPECT_EQ(code("0 2\n"), ErrorCode::kMalformedInput);
  EXPECT_EQ(code("0 0 1\n"), ErrorCode::kMalformedInput);
  EXPECT_EQ(code("x 0\n"), ErrorCode::kMalformedInput);
  EXPECT_EQ(code("9 0\n"), ErrorCode::kOutOfRange);
  EXPECT_EQ(code("0 0\n1 0\n"), ErrorCode::kAdjacencyViolation);
  EXPECT_EQ(code("# nothing\n"), ErrorCode::kInvalidArgument);
}
