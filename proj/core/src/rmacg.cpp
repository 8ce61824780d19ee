#include "contrast/rmacg.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "contrast/error.hpp"
#include "contrast/solver.hpp"
#include "lex_search.hpp"

namespace contrast {

namespace {

const Rational kHalf = Rational::of(1, 2);

using Colourings = std::pair<TwoColouring, TwoColouring>;

Colourings require_bipartite(const Graph& g) {
  auto phi = two_colourings(g);
  if (!phi) throw Error(ErrorCode::kNotBipartite, "graph is not bipartite");
  return std::move(*phi);
}

void require_same_size(const Graph& g, const IncompleteGreyscale& inc) {
  if (inc.vertex_count() != g.vertex_count()) {
    throw Error(ErrorCode::kInvalidArgument, "fixed tones were given for " +
                                                 std::to_string(inc.vertex_count()) +
                                                 " vertices, graph has " +
                                                 std::to_string(g.vertex_count()));
  }
}

std::vector<Rational> colouring_tones(const TwoColouring& phi) {
  std::vector<Rational> out;
  out.reserve(phi.class_of.size());
  for (int c : phi.class_of) out.push_back(Rational(c));
  return out;
}

bool has_extremes(const std::vector<Rational>& tones) {
  const bool zero = std::find(tones.begin(), tones.end(), Rational(0)) != tones.end();
  const bool one = std::find(tones.begin(), tones.end(), Rational(1)) != tones.end();
  return zero && one;
}

RmacgResult make_result(const Graph& g, std::vector<Rational> tones, const char* method,
                        VcPartition partition, std::int64_t nodes = 0) {
  Greyscale witness(std::move(tones));
  auto vec = contrast_vector(g, witness);
  return RmacgResult{std::move(vec), std::move(witness), method, std::move(partition), nodes};
}

detail::Problem restricted_problem(const Graph& g, const IncompleteGreyscale& inc,
                                   std::span<const Rational> values) {
  detail::Problem p;
  p.graph = &g;
  p.domain = detail::scale_values(values);
  p.fixed.resize(g.vertex_count());
  for (Vertex v : inc.fixed_vertices()) p.fixed[v] = inc.tone(v) * p.domain.scale;
  return p;
}

// Scaled copy of `tones`, or nullopt if some tone is outside the domain.
std::optional<std::vector<std::int64_t>> scaled_seed(const std::vector<Rational>& tones,
                                                     std::span<const Rational> values,
                                                     const detail::ScaledValues& dom) {
  std::vector<std::int64_t> out;
  for (const Rational& t : tones) {
    auto it = std::lower_bound(values.begin(), values.end(), t);
    if (it == values.end() || *it != t) return std::nullopt;
    out.push_back(dom.values[it - values.begin()]);
  }
  return out;
}

std::vector<Rational> unscale(const detail::Outcome& out, const detail::ScaledValues& dom) {
  std::vector<Rational> tones;
  for (std::int64_t t : out.tones) tones.push_back(Rational::of(t, dom.scale));
  return tones;
}

RmacgResult run_search(const Graph& g, const IncompleteGreyscale& inc,
                       std::span<const Rational> values, bool exhaustive,
                       const std::optional<std::vector<Rational>>& seed, Rational min_tone,
                       std::optional<std::int64_t> budget, int jobs, const char* method) {
  auto p = restricted_problem(g, inc, values);
  const auto scaled_min = min_tone * Rational(p.domain.scale);
  p.min_tone = scaled_min.small_numerator();
  try {
    detail::Outcome out;
    if (exhaustive) {
      out = detail::exhaustive_max(p, budget, jobs);
    } else {
      std::optional<std::vector<std::int64_t>> start;
      if (seed && has_extremes(*seed)) start = scaled_seed(*seed, values, p.domain);
      out = detail::branch_and_bound(p, start, budget, jobs);
    }
    if (!out.found) throw std::logic_error("no compatible greyscale in the value set");
    return make_result(g, unscale(out, p.domain), method, partition_vc(g, inc), out.nodes);
  } catch (const detail::BudgetExhausted& ex) {
    std::optional<MacgResult> best;
    if (ex.partial.found) {
      Greyscale w(unscale(ex.partial, p.domain));
      auto vec = contrast_vector(g, w);
      best = MacgResult{std::move(vec), std::move(w), {values.begin(), values.end()},
                        ex.partial.nodes};
    }
    throw BudgetExceededError("node budget exhausted", std::move(best));
  }
}

// Single tone source for lexicographic comparisons of candidate witnesses.
bool lex_less(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct StarShape {
  Vertex hub = -1;
  // One leg per hub neighbour in index order; leg[0] is adjacent to the hub,
  // leg.back() is the leaf.
  std::vector<std::vector<Vertex>> legs;
};

std::optional<StarShape> star_shape(const Graph& g) {
  if (!is_tree(g)) return std::nullopt;
  StarShape s;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) >= 3) {
      if (s.hub >= 0) return std::nullopt;
      s.hub = v;
    }
  }
  if (s.hub < 0) return std::nullopt;
  for (Vertex first : g.neighbours(s.hub)) {
    std::vector<Vertex> leg{first};
    Vertex prev = s.hub;
    while (g.degree(leg.back()) == 2) {
      const auto nb = g.neighbours(leg.back());
      const Vertex next = nb[0] == prev ? nb[1] : nb[0];
      prev = leg.back();
      leg.push_back(next);
    }
    s.legs.push_back(std::move(leg));
  }
  return s;
}

bool fixed_set_is_leaves(const Graph& g, const IncompleteGreyscale& inc) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if ((g.degree(v) == 1) != inc.is_fixed(v)) return false;
  }
  return true;
}

std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> bipartition_if_complete(
    const Graph& g, const TwoColouring& phi0) {
  std::vector<Vertex> a, b;
  for (Vertex v = 0; v < g.vertex_count(); ++v) (phi0[v] == 0 ? a : b).push_back(v);
  if (static_cast<std::int64_t>(a.size()) * static_cast<std::int64_t>(b.size()) !=
      g.edge_count()) {
    return std::nullopt;
  }
  return std::make_pair(std::move(a), std::move(b));
}

// Tree vertices on the path from `from` to the root of `parent`, inclusive.
std::vector<Vertex> path_to_root(Vertex from, const std::vector<Vertex>& parent) {
  std::vector<Vertex> out{from};
  while (parent[out.back()] >= 0) out.push_back(parent[out.back()]);
  return out;
}

}  // namespace

IncompleteGreyscale::IncompleteGreyscale(const Graph& g,
                                         std::span<const std::pair<Vertex, int>> fixed)
    : tone_(g.vertex_count(), -1) {
  const int n = g.vertex_count();
  for (const auto& [v, t] : fixed) {
    if (v < 0 || v >= n) {
      throw Error(ErrorCode::kOutOfRange, "fixed vertex " + std::to_string(v) + " out of range");
    }
    if (t != 0 && t != 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "fixed tone of vertex " + std::to_string(v) + " must be 0 or 1");
    }
    if (tone_[v] >= 0) {
      throw Error(ErrorCode::kInvalidArgument, "vertex " + std::to_string(v) + " fixed twice");
    }
    tone_[v] = t;
    fixed_.push_back(v);
  }
  std::sort(fixed_.begin(), fixed_.end());
  if (fixed_.empty()) throw Error(ErrorCode::kInvalidArgument, "no fixed vertices");
  if (static_cast<int>(fixed_.size()) == n) {
    throw Error(ErrorCode::kInvalidArgument, "every vertex is fixed");
  }
  for (const Edge& e : g.edges()) {
    if (tone_[e.u] >= 0 && tone_[e.u] == tone_[e.v]) {
      throw Error(ErrorCode::kAdjacencyViolation,
                  "adjacent vertices " + std::to_string(e.u) + " and " + std::to_string(e.v) +
                      " share fixed tone " + std::to_string(tone_[e.u]));
    }
  }
}

IncompleteGreyscale::IncompleteGreyscale(const Graph& g,
                                         std::initializer_list<std::pair<Vertex, int>> fixed)
    : IncompleteGreyscale(g, std::span<const std::pair<Vertex, int>>(fixed.begin(), fixed.size())) {}

std::vector<Rational> restricted_tones() {
  return {Rational(0), Rational::of(1, 3), kHalf, Rational::of(2, 3), Rational(1)};
}

VcPartition partition_vc(const Graph& g, const IncompleteGreyscale& inc) {
  require_same_size(g, inc);
  const auto phi = require_bipartite(g);
  VcPartition out;
  for (Vertex v : inc.fixed_vertices()) {
    (inc.tone(v) == phi.first[v] ? out.match_phi0 : out.match_phi1).push_back(v);
  }
  return out;
}

Greyscale constructive_f_phi(const Graph& g, const IncompleteGreyscale& inc) {
  const auto part = partition_vc(g, inc);
  const auto phis = require_bipartite(g);
  const TwoColouring& phi = part.match_phi0.empty() ? phis.second : phis.first;
  std::vector<Rational> tones(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (inc.is_fixed(v)) {
      tones[v] = Rational(inc.tone(v));
      continue;
    }
    bool near_zero = false, near_one = false;
    for (Vertex u : g.neighbours(v)) {
      if (!inc.is_fixed(u) || phi[u] == inc.tone(u)) continue;
      (inc.tone(u) == 0 ? near_zero : near_one) = true;
    }
    if (near_zero) {
      tones[v] = Rational::of(2, 3);
    } else if (near_one) {
      tones[v] = Rational::of(1, 3);
    } else {
      tones[v] = Rational(phi[v]);
    }
  }
  return Greyscale(std::move(tones));
}

RmacgResult oracle_rmacg(const Graph& g, const IncompleteGreyscale& inc,
                         const RmacgOracleOptions& options) {
  require_same_size(g, inc);
  require_bipartite(g);
  auto values = options.values.value_or(restricted_tones());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::optional<std::vector<Rational>> seed;
  if (!options.exhaustive) seed = constructive_f_phi(g, inc).tones();
  return run_search(g, inc, values, options.exhaustive, seed, Rational(0), options.budget,
                    options.jobs, kMethodOracle);
}

RmacgResult solve_complete_bipartite(const Graph& g, const IncompleteGreyscale& inc) {
  const auto part = partition_vc(g, inc);
  const auto phis = require_bipartite(g);
  const auto sides = bipartition_if_complete(g, phis.first);
  if (!sides) throw Error(ErrorCode::kPreconditionFailed, "graph is not complete bipartite");
  if (part.match_phi1.empty()) {
    return make_result(g, colouring_tones(phis.first), kMethodCompleteBipartite, part);
  }
  if (part.match_phi0.empty()) {
    return make_result(g, colouring_tones(phis.second), kMethodCompleteBipartite, part);
  }
  // Mixed tones force every fixed vertex into one side.
  const int fixed_side = phis.first[inc.fixed_vertices().front()];
  std::vector<Rational> tones(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (inc.is_fixed(v)) {
      tones[v] = Rational(inc.tone(v));
    } else if (phis.first[v] == fixed_side) {
      tones[v] = Rational(0);
    } else {
      tones[v] = kHalf;
    }
  }
  return make_result(g, std::move(tones), kMethodCompleteBipartite, part);
}

RmacgResult solve_complete_bipartite(int r, int s, const IncompleteGreyscale& inc) {
  return solve_complete_bipartite(complete_bipartite_graph(r, s), inc);
}

RmacgResult solve_single_opposite(const Graph& g, const IncompleteGreyscale& inc) {
  const auto part = partition_vc(g, inc);
  const auto phis = require_bipartite(g);
  if (part.match_phi0.empty() || part.match_phi1.empty() ||
      (part.match_phi0.size() != 1 && part.match_phi1.size() != 1)) {
    throw Error(ErrorCode::kPreconditionFailed,
                "needs both classes nonempty and one of them a singleton; use the oracle");
  }
  const bool single0 = part.match_phi0.size() == 1;
  const Vertex v0 = single0 ? part.match_phi0.front() : part.match_phi1.front();
  const TwoColouring& rest = single0 ? phis.second : phis.first;
  std::vector<Rational> f0(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    f0[v] = inc.is_fixed(v) ? Rational(inc.tone(v))
            : g.adjacent(v, v0) ? kHalf
                                : Rational(rest[v]);
  }
  const std::vector<Rational> values{Rational(0), kHalf, Rational(1)};
  return run_search(g, inc, values, /*exhaustive=*/false, f0, kHalf, std::nullopt, 1,
                    kMethodSingleOpposite);
}

RmacgResult solve_star_subdivision(const Graph& t, const IncompleteGreyscale& inc) {
  require_same_size(t, inc);
  const auto shape = star_shape(t);
  if (!shape) {
    throw Error(ErrorCode::kPreconditionFailed, "graph is not a subdivided star with n >= 3");
  }
  if (!fixed_set_is_leaves(t, inc)) {
    throw Error(ErrorCode::kPreconditionFailed, "fixed vertices must be exactly the leaves");
  }
  const auto part = partition_vc(t, inc);
  const int legs = static_cast<int>(shape->legs.size());

  struct Candidate {
    int halves;
    std::vector<Rational> tones;
  };
  std::optional<Candidate> best;
  auto consider = [&](Candidate c) {
    if (!has_extremes(c.tones)) return;
    if (!best || c.halves < best->halves ||
        (c.halves == best->halves && lex_less(c.tones, best->tones))) {
      best = std::move(c);
    }
  };

  // Leg tones alternating away from the leaf.
  auto from_leaf = [&](const std::vector<Vertex>& leg, std::vector<Rational>& tones, int upto) {
    const int L = static_cast<int>(leg.size());
    int tone = inc.tone(leg.back());
    for (int i = L - 1; i >= upto; --i, tone ^= 1) tones[leg[i]] = Rational(tone);
  };

  {
    Candidate c{legs, std::vector<Rational>(t.vertex_count())};
    c.tones[shape->hub] = kHalf;
    for (const auto& leg : shape->legs) from_leaf(leg, c.tones, 0);
    consider(std::move(c));
  }
  for (int hub_tone = 0; hub_tone <= 1; ++hub_tone) {
    Candidate c{0, std::vector<Rational>(t.vertex_count())};
    c.tones[shape->hub] = Rational(hub_tone);
    bool feasible = true;
    for (const auto& leg : shape->legs) {
      const int L = static_cast<int>(leg.size());
      // leg[i] sits at distance i + 1 from the hub.
      auto from_hub = [&](std::vector<Rational>& tones, int upto) {
        for (int i = 0; i < upto; ++i) tones[leg[i]] = Rational((hub_tone + i + 1) % 2);
      };
      if ((hub_tone + L) % 2 == inc.tone(leg.back())) {
        from_hub(c.tones, L);
        continue;
      }
      if (L < 2) {
        feasible = false;
        break;
      }
      c.halves += 2;
      // Pick the position of the 1/2 tone that makes this leg smallest.
      std::vector<Vertex> by_index(leg.begin(), leg.end());
      std::sort(by_index.begin(), by_index.end());
      std::optional<std::vector<Rational>> best_leg;
      std::vector<Rational> trial(t.vertex_count());
      for (int j = 0; j + 1 < L; ++j) {
        from_hub(trial, j);
        trial[leg[j]] = kHalf;
        from_leaf(leg, trial, j + 1);
        std::vector<Rational> seq;
        for (Vertex v : by_index) seq.push_back(trial[v]);
        if (!best_leg || lex_less(seq, *best_leg)) {
          best_leg = std::move(seq);
        }
      }
      for (std::size_t i = 0; i < by_index.size(); ++i) c.tones[by_index[i]] = (*best_leg)[i];
    }
    if (feasible) consider(std::move(c));
  }
  if (!best) throw std::logic_error("no admissible star greyscale");
  return make_result(t, std::move(best->tones), kMethodStarSubdivision, part);
}

RmacgResult solve_tree_three(const Graph& t, const IncompleteGreyscale& inc) {
  require_same_size(t, inc);
  if (!is_tree(t)) throw Error(ErrorCode::kPreconditionFailed, "graph is not a tree");
  if (inc.fixed_vertices().size() != 3) {
    throw Error(ErrorCode::kPreconditionFailed, "exactly three vertices must be fixed");
  }
  const auto part = partition_vc(t, inc);
  const auto phis = require_bipartite(t);
  if (part.match_phi1.empty()) {
    return make_result(t, colouring_tones(phis.first), kMethodTreeThree, part);
  }
  if (part.match_phi0.empty()) {
    return make_result(t, colouring_tones(phis.second), kMethodTreeThree, part);
  }
  const bool odd_in_0 = part.match_phi0.size() == 1;
  const Vertex v3 = odd_in_0 ? part.match_phi0.front() : part.match_phi1.front();
  const auto& pair = odd_in_0 ? part.match_phi1 : part.match_phi0;
  const Vertex v1 = pair[0], v2 = pair[1];

  // Root the tree at v3.
  const int n = t.vertex_count();
  std::vector<Vertex> parent(n, -2);
  parent[v3] = -1;
  std::queue<Vertex> bfs;
  bfs.push(v3);
  while (!bfs.empty()) {
    Vertex v = bfs.front();
    bfs.pop();
    for (Vertex w : t.neighbours(v)) {
      if (parent[w] == -2) {
        parent[w] = v;
        bfs.push(w);
      }
    }
  }
  const auto up1 = path_to_root(v1, parent);
  const auto up2 = path_to_root(v2, parent);
  std::vector<char> on2(n, 0);
  for (Vertex v : up2) on2[v] = 1;
  const Vertex median = *std::find_if(up1.begin(), up1.end(), [&](Vertex v) { return on2[v]; });

  std::vector<Vertex> shared, branch1, branch2;
  for (Vertex v : path_to_root(median, parent)) {
    if (!inc.is_fixed(v)) shared.push_back(v);
  }
  for (Vertex v : up1) {
    if (v == median) break;
    if (!inc.is_fixed(v)) branch1.push_back(v);
  }
  for (Vertex v : up2) {
    if (v == median) break;
    if (!inc.is_fixed(v)) branch2.push_back(v);
  }

  std::vector<std::vector<Vertex>> separators;
  for (Vertex w : shared) separators.push_back({w});
  for (Vertex a : branch1)
    for (Vertex b : branch2) separators.push_back({a, b});
  auto cost = [&](const std::vector<Vertex>& s) {
    int c = 0;
    for (Vertex v : s) c += t.degree(v);
    return c;
  };
  int least = -1;
  for (const auto& s : separators) least = least < 0 ? cost(s) : std::min(least, cost(s));

  // Each component left after removing the separator follows the colouring
  // matching its fixed vertex; a component without one starts its smallest
  // vertex at tone 0.
  auto witness_for = [&](const std::vector<Vertex>& sep) {
    std::vector<Rational> tones(n);
    std::vector<char> seen(n, 0);
    for (Vertex w : sep) {
      tones[w] = kHalf;
      seen[w] = 1;
    }
    for (Vertex start = 0; start < n; ++start) {
      if (seen[start]) continue;
      std::vector<Vertex> comp{start};
      seen[start] = 1;
      for (std::size_t i = 0; i < comp.size(); ++i) {
        for (Vertex w : t.neighbours(comp[i])) {
          if (!seen[w]) {
            seen[w] = 1;
            comp.push_back(w);
          }
        }
      }
      int flip = phis.first[start];  // tone 0 at `start`
      for (Vertex v : comp) {
        if (inc.is_fixed(v)) flip = inc.tone(v) == phis.first[v] ? 0 : 1;
      }
      for (Vertex v : comp) tones[v] = Rational(phis.first[v] ^ flip);
    }
    return tones;
  };

  std::optional<std::vector<Rational>> best;
  for (const auto& s : separators) {
    if (cost(s) != least) continue;
    auto tones = witness_for(s);
    if (!has_extremes(tones)) continue;
    if (!best || lex_less(tones, *best)) best = std::move(tones);
  }
  if (!best) throw std::logic_error("no admissible separator");
  return make_result(t, std::move(*best), kMethodTreeThree, part);
}

RmacgResult solve_rmacg(const Graph& g, const IncompleteGreyscale& inc, RmacgMethod method,
                        const RmacgOracleOptions& oracle_options) {
  const auto part = partition_vc(g, inc);
  if (method == RmacgMethod::kOracle) return oracle_rmacg(g, inc, oracle_options);
  if (method == RmacgMethod::kConstructive) {
    return make_result(g, constructive_f_phi(g, inc).tones(), kMethodConstructive, part);
  }
  const auto phis = require_bipartite(g);
  if (part.match_phi1.empty()) {
    return make_result(g, colouring_tones(phis.first), kMethodTwoColouring, part);
  }
  if (part.match_phi0.empty()) {
    return make_result(g, colouring_tones(phis.second), kMethodTwoColouring, part);
  }
  if (bipartition_if_complete(g, phis.first)) return solve_complete_bipartite(g, inc);
  if (star_shape(g) && fixed_set_is_leaves(g, inc)) return solve_star_subdivision(g, inc);
  if (is_tree(g) && inc.fixed_vertices().size() == 3) return solve_tree_three(g, inc);
  if (part.match_phi0.size() == 1 || part.match_phi1.size() == 1) {
    return solve_single_opposite(g, inc);
  }
  return oracle_rmacg(g, inc, oracle_options);
}

IncompleteGreyscale parse_fixed_tones(std::istream& in, const Graph& g) {
  std::vector<std::pair<Vertex, int>> fixed;
  std::vector<char> seen(g.vertex_count(), 0);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long long v = 0;
    std::string tone, extra;
    if (!(fields >> v >> tone) || (fields >> extra) || (tone != "0" && tone != "1")) {
      throw Error(ErrorCode::kMalformedInput,
                  "line " + std::to_string(line_no) + ": expected \"v 0\" or \"v 1\"");
    }
    if (v < 0 || v >= g.vertex_count()) {
      throw Error(ErrorCode::kOutOfRange,
                  "line " + std::to_string(line_no) + ": vertex " + std::to_string(v) + " out of range");
    }
    if (seen[v]) {
      throw Error(ErrorCode::kMalformedInput,
                  "line " + std::to_string(line_no) + ": vertex " + std::to_string(v) + " listed twice");
    }
    seen[v] = 1;
    fixed.emplace_back(static_cast<Vertex>(v), tone == "1" ? 1 : 0);
  }
  return IncompleteGreyscale(g, fixed);
}

void write_fixed_tones(const IncompleteGreyscale& inc, std::ostream& out) {
  for (Vertex v : inc.fixed_vertices()) out << v << ' ' << inc.tone(v) << '\n';
}

}  // namespace contrast
