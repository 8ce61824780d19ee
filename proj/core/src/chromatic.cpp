#include <algorithm>
#include <numeric>
#include <vector>

#include "contrast/graph.hpp"

namespace contrast {

namespace {

// Vertices by descending degree, ties by index.
std::vector<Vertex> degree_order(const Graph& g) {
  std::vector<Vertex> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return order;
}

// Exact maximum clique by simple branch and bound over candidate sets.
class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  int run(const std::vector<Vertex>& order) {
    std::vector<Vertex> cand = order;
    grow(0, cand);
    return best_;
  }

 private:
  void grow(int size, std::vector<Vertex>& cand) {
    if (cand.empty()) {
      best_ = std::max(best_, size);
      return;
    }
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (size + static_cast<int>(cand.size() - i) <= best_) return;
      Vertex v = cand[i];
      std::vector<Vertex> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j)
        if (g_.adjacent(v, cand[j])) next.push_back(cand[j]);
      grow(size + 1, next);
    }
  }

  const Graph& g_;
  int best_ = 0;
};

// Backtracking k-colourability test in a fixed vertex order. A vertex may only
// open one new colour beyond those already in use, which removes colour
// permutation symmetry.
class Colourer {
 public:
  Colourer(const Graph& g, std::vector<Vertex> order)
      : g_(g), order_(std::move(order)), colour_(g.vertex_count(), -1) {}

  bool colourable(int k) {
    std::fill(colour_.begin(), colour_.end(), -1);
    return place(0, k, 0);
  }

  const std::vector<int>& colours() const { return colour_; }

 private:
  bool place(std::size_t idx, int k, int used) {
    if (idx == order_.size()) return true;
    Vertex v = order_[idx];
    const int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
      bool clash = false;
      for (Vertex w : g_.neighbours(v)) {
        if (colour_[w] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      colour_[v] = c;
      if (place(idx + 1, k, std::max(used, c + 1))) return true;
      colour_[v] = -1;
    }
    return false;
  }

  const Graph& g_;
  std::vector<Vertex> order_;
  std::vector<int> colour_;
};

std::vector<int> greedy_colouring(const Graph& g, const std::vector<Vertex>& order) {
  std::vector<int> colour(g.vertex_count(), -1);
  int used = 0;
  for (Vertex v : order) {
    std::vector<char> taken(used + 1, 0);
    for (Vertex w : g.neighbours(v))
      if (colour[w] >= 0) taken[colour[w]] = 1;
    int c = 0;
    while (taken[c]) ++c;
    colour[v] = c;
    used = std::max(used, c + 1);
  }
  return colour;
}

}  // namespace

std::vector<int> optimal_colouring(const Graph& g) {
  const auto order = degree_order(g);
  const int lower = CliqueSearch(g).run(order);
  auto greedy = greedy_colouring(g, order);
  const int upper = *std::max_element(greedy.begin(), greedy.end()) + 1;
  Colourer colourer(g, order);
  for (int k = lower; k < upper; ++k)
    if (colourer.colourable(k)) return colourer.colours();
  return greedy;
}

int chromatic_number(const Graph& g) {
  const auto colours = optimal_colouring(g);
  return *std::max_element(colours.begin(), colours.end()) + 1;
}

}  // namespace contrast
