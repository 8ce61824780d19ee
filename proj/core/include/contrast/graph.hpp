#pragma once

#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace contrast {

using Vertex = int;

// Undirected edge with first < second.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Finite, simple, undirected, connected graph on vertices 0..n-1. Edges are
// stored normalized (u < v) and sorted, so two graphs with the same edge set
// compare equal regardless of how they were built.
class Graph {
 public:
  // Validates and builds. Throws Error with kOutOfRange, kSelfLoop,
  // kDuplicateEdge, kDisconnected or kInvalidArgument (n < 1).
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

  int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbours(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex a, Vertex b) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_.size() == b.adj_.size() && a.edges_ == b.edges_;
  }

 private:
  Graph() = default;

  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

// Proper 2-colouring: adjacent vertices never share a class.
struct TwoColouring {
  std::vector<int> class_of;

  int operator[](Vertex v) const { return class_of[v]; }
  friend bool operator==(const TwoColouring&, const TwoColouring&) = default;
};

// For a bipartite graph, returns (phi0, phi1) where phi0 puts vertex 0 in
// class 0 and phi1 is its swap. Returns nullopt for non-bipartite graphs.
std::optional<std::pair<TwoColouring, TwoColouring>> two_colourings(const Graph& g);

bool is_tree(const Graph& g);

// Exact chromatic number; deterministic.
int chromatic_number(const Graph& g);

// A proper colouring with chromatic_number(g) colours, numbered 0..chi-1 in
// order of first use along descending degree.
std::vector<int> optimal_colouring(const Graph& g);

// Edge-list text format: optional '#' comment lines, a header "n m", then m
// lines "u v". Errors carry kMalformedInput plus the codes of from_edges.
Graph parse_graph(std::istream& in);
void write_graph(const Graph& g, std::ostream& out);

// Common families used by tests, benchmarks and the bundled data.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
// Hub 0 joined to the rim cycle 1..n-1.
Graph wheel_graph(int n);
// Part A = 0..r-1, part B = r..r+s-1.
Graph complete_bipartite_graph(int r, int s);

}  // namespace contrast
