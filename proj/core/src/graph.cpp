#include "contrast/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <string>

#include "contrast/error.hpp"

namespace contrast {

namespace {

bool connected(const std::vector<std::vector<Vertex>>& adj) {
  if (adj.empty()) return true;
  std::vector<char> seen(adj.size(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == adj.size();
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "graph needs at least one vertex");
  Graph g;
  g.adj_.assign(n, {});
  g.edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw Error(ErrorCode::kOutOfRange, "edge {" + std::to_string(a) + ", " +
                                              std::to_string(b) + "} has an endpoint outside [0, " +
                                              std::to_string(n - 1) + "]");
    }
    if (a == b) throw Error(ErrorCode::kSelfLoop, "self-loop at vertex " + std::to_string(a));
    g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end()); dup != g.edges_.end()) {
    throw Error(ErrorCode::kDuplicateEdge, "duplicate edge {" + std::to_string(dup->u) + ", " +
                                               std::to_string(dup->v) + "}");
  }
  for (const Edge& e : g.edges_) {
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  for (auto& row : g.adj_) std::sort(row.begin(), row.end());
  if (!connected(g.adj_)) throw Error(ErrorCode::kDisconnected, "graph is not connected");
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  const auto& row = adj_[a];
  return std::binary_search(row.begin(), row.end(), b);
}

std::optional<std::pair<TwoColouring, TwoColouring>> two_colourings(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> cls(n, -1);
  std::queue<Vertex> frontier;
  cls[0] = 0;
  frontier.push(0);
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbours(v)) {
      if (cls[w] < 0) {
        cls[w] = 1 - cls[v];
        frontier.push(w);
      } else if (cls[w] == cls[v]) {
        return std::nullopt;
      }
    }
  }
  TwoColouring phi0{cls};
  for (int& c : cls) c = 1 - c;
  return std::make_pair(std::move(phi0), TwoColouring{std::move(cls)});
}

bool is_tree(const Graph& g) { return g.edge_count() == g.vertex_count() - 1; }

Graph parse_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto malformed = [&](const std::string& why) {
    return Error(ErrorCode::kMalformedInput, "line " + std::to_string(line_no) + ": " + why);
  };
  // Reads the next line holding exactly two integers, skipping blanks and
  // comments. Returns false at end of input.
  auto next_pair = [&](long long& a, long long& b) {
    while (std::getline(in, line)) {
      ++line_no;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      std::istringstream fields(line);
      std::string extra;
      if (!(fields >> a >> b) || (fields >> extra)) throw malformed("expected two integers");
      return true;
    }
    return false;
  };

  long long n = 0, m = 0;
  if (!next_pair(n, m)) throw malformed("missing header \"n m\"");
  if (n < 1 || m < 0 || n > 1'000'000) throw malformed("invalid header");
  std::vector<std::pair<int, int>> edges;
  long long a = 0, b = 0;
  while (next_pair(a, b)) {
    if (static_cast<long long>(edges.size()) == m) throw malformed("more edge lines than declared");
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw Error(ErrorCode::kOutOfRange, "line " + std::to_string(line_no) + ": endpoint outside [0, " +
                                              std::to_string(n - 1) + "]");
    }
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  if (static_cast<long long>(edges.size()) != m) throw malformed("fewer edge lines than declared");
  return Graph::from_edges(static_cast<int>(n), edges);
}

void write_graph(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph wheel_graph(int n) {
  std::vector<std::pair<int, int>> e;
  const int rim = n - 1;
  for (int i = 1; i <= rim; ++i) {
    e.emplace_back(0, i);
    e.emplace_back(i, i % rim + 1);
  }
  return Graph::from_edges(n, e);
}

Graph complete_bipartite_graph(int r, int s) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < s; ++j) e.emplace_back(i, r + j);
  return Graph::from_edges(r + s, e);
}

}  // namespace contrast
