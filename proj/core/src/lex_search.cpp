#include "lex_search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "contrast/error.hpp"

namespace contrast::detail {

namespace {

struct Budget {
  std::optional<std::int64_t> limit;
  std::atomic<std::int64_t> used{0};
  std::atomic<bool> stop{false};
};

enum class Mode {
  kMaximize,  // keep the first strictly better leaf, never cut
  kBound,     // cut branches whose optimistic vector cannot beat the target
  kMatch,     // stop at the first leaf equal to the target
};

class Searcher {
 public:
  Searcher(const Problem& p, const std::vector<Vertex>& order, Mode mode, Budget& budget)
      : p_(p), g_(*p.graph), order_(order), mode_(mode), budget_(budget),
        tone_(g_.vertex_count(), 0), pos_of_(g_.vertex_count(), -1) {
    const int n = g_.vertex_count();
    std::vector<char> fixed(n, 0);
    for (int v = 0; v < n; ++v) {
      if (!p_.fixed.empty() && p_.fixed[v]) {
        fixed[v] = 1;
        tone_[v] = *p_.fixed[v];
        count_extreme(tone_[v], +1);
      }
    }
    for (int i = 0; i < static_cast<int>(order_.size()); ++i) pos_of_[order_[i]] = i;
    back_.resize(order_.size());
    for (int i = 0; i < static_cast<int>(order_.size()); ++i) {
      for (Vertex w : g_.neighbours(order_[i])) {
        if (fixed[w] || (pos_of_[w] >= 0 && pos_of_[w] < i)) back_[i].push_back(w);
      }
    }
    for (const Edge& e : g_.edges()) {
      if (fixed[e.u] && fixed[e.v]) insert_tone(std::abs(tone_[e.u] - tone_[e.v]));
    }
    decided_.reserve(g_.edge_count());
  }

  void set_target(std::vector<std::int64_t> target) {
    target_ = std::move(target);
    have_target_ = true;
  }

  // Assigns order[pos] := x unless an edge tone falls below the minimum.
  bool push(int pos, std::int64_t x) {
    for (Vertex w : back_[pos]) {
      if (std::abs(x - tone_[w]) < p_.min_tone) return false;
    }
    const Vertex v = order_[pos];
    tone_[v] = x;
    for (Vertex w : back_[pos]) insert_tone(std::abs(x - tone_[w]));
    count_extreme(x, +1);
    return true;
  }

  void pop(int pos) {
    const Vertex v = order_[pos];
    for (Vertex w : back_[pos]) {
      auto it = std::lower_bound(decided_.begin(), decided_.end(), std::abs(tone_[v] - tone_[w]));
      decided_.erase(it);
    }
    count_extreme(tone_[v], -1);
  }

  // Whether the subtree below the current partial assignment is worth entering.
  bool admissible() const {
    if (!have_target_) return true;
    if (mode_ == Mode::kBound) return bound_compare() > 0;
    if (mode_ == Mode::kMatch) return bound_compare() >= 0;
    return true;
  }

  void dfs(int pos) {
    tick();
    if (pos == static_cast<int>(order_.size())) {
      leaf();
      return;
    }
    const std::int64_t cap = (pos == 0 && p_.mirror) ? p_.domain.scale / 2 : p_.domain.scale;
    if (pos + 1 == static_cast<int>(order_.size()) && have_target_) {
      last_level(pos, cap);
      return;
    }
    for (std::int64_t x : p_.domain.values) {
      if (x > cap) break;
      if (!push(pos, x)) continue;
      if (admissible()) dfs(pos + 1);
      pop(pos);
      if (done_) return;
    }
  }

  Outcome& outcome() { return out_; }
  const Outcome& outcome() const { return out_; }

 private:
  void tick() {
    ++out_.nodes;
    if (budget_.stop.load(std::memory_order_relaxed)) throw BudgetExhausted{};
    if (budget_.limit &&
        budget_.used.fetch_add(1, std::memory_order_relaxed) + 1 > *budget_.limit) {
      budget_.stop.store(true);
      throw BudgetExhausted{};
    }
  }

  // Leaves under the last free vertex, compared against the target by merging
  // the new tones into the decided ones without modifying state.
  void last_level(int pos, std::int64_t cap) {
    const auto& back = back_[pos];
    const Vertex v = order_[pos];
    extra_.resize(back.size());
    for (std::int64_t x : p_.domain.values) {
      if (x > cap) break;
      bool cut = false;
      for (std::size_t i = 0; i < back.size(); ++i) {
        extra_[i] = std::abs(x - tone_[back[i]]);
        cut = cut || extra_[i] < p_.min_tone;
      }
      if (cut) continue;
      tick();
      if (zeros_ + (x == 0) == 0 || ones_ + (x == p_.domain.scale) == 0) continue;
      std::sort(extra_.begin(), extra_.end());
      const int c = merged_compare();
      const bool take = mode_ == Mode::kMatch ? c == 0 : c > 0;
      if (!take) continue;
      push(pos, x);
      if (mode_ == Mode::kMatch) {
        record();
        done_ = true;
      } else {
        set_target(decided_);
        record();
      }
      pop(pos);
      tone_[v] = 0;
      if (done_) return;
    }
  }

  // Sign of merge(decided_, extra_) - target_.
  int merged_compare() const {
    std::size_t a = 0, b = 0;
    for (std::int64_t t : target_) {
      std::int64_t cur;
      if (b == extra_.size() || (a < decided_.size() && decided_[a] <= extra_[b])) {
        cur = decided_[a++];
      } else {
        cur = extra_[b++];
      }
      if (cur != t) return cur < t ? -1 : 1;
    }
    return 0;
  }

  void leaf() {
    if (zeros_ == 0 || ones_ == 0) return;
    switch (mode_) {
      case Mode::kMaximize:
      case Mode::kBound:
        if (!have_target_ || decided_ > target_) {
          set_target(decided_);
          record();
        }
        break;
      case Mode::kMatch:
        if (decided_ == target_) {
          record();
          done_ = true;
        }
        break;
    }
  }

  void record() {
    out_.found = true;
    out_.tones = tone_;
    out_.vector = decided_;
  }

  int bound_compare() const {
    const std::size_t m = target_.size();
    for (std::size_t i = 0; i < m; ++i) {
      const std::int64_t b = i < decided_.size() ? decided_[i] : p_.domain.scale;
      if (b != target_[i]) return b < target_[i] ? -1 : 1;
    }
    return 0;
  }

  void insert_tone(std::int64_t t) {
    decided_.insert(std::upper_bound(decided_.begin(), decided_.end(), t), t);
  }

  void count_extreme(std::int64_t x, int d) {
    if (x == 0) zeros_ += d;
    if (x == p_.domain.scale) ones_ += d;
  }

  const Problem& p_;
  const Graph& g_;
  const std::vector<Vertex>& order_;
  Mode mode_;
  Budget& budget_;
  std::vector<std::int64_t> tone_;
  std::vector<int> pos_of_;
  std::vector<std::vector<Vertex>> back_;
  std::vector<std::int64_t> decided_;
  int zeros_ = 0;
  int ones_ = 0;
  std::vector<std::int64_t> target_;
  std::vector<std::int64_t> extra_;
  bool have_target_ = false;
  bool done_ = false;
  Outcome out_;
};

template <class Body>
void run_tasks(int count, int jobs, Body&& body) {
  if (jobs <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::vector<std::thread> workers;
  for (int w = 0; w < std::min(jobs, count); ++w) {
    workers.emplace_back([&] {
      for (int i; (i = next.fetch_add(1)) < count;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<Vertex> free_vertices(const Problem& p) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < p.graph->vertex_count(); ++v) {
    if (p.fixed.empty() || !p.fixed[v]) out.push_back(v);
  }
  return out;
}

bool better(const Outcome& a, const Outcome& b) {
  return a.found && (!b.found || a.vector > b.vector);
}

// Runs one searcher per tone of the first vertex in `order`, each with its own
// incumbent, and reduces in tone order. Node counts and the result depend only
// on the problem, never on `jobs`.
Outcome split_search(const Problem& p, const std::vector<Vertex>& order, Mode mode,
                     const std::optional<std::vector<std::int64_t>>& start, Budget& budget,
                     int jobs) {
  if (order.empty()) {
    Searcher s(p, order, mode, budget);
    if (start) s.set_target(*start);
    s.dfs(0);
    return std::move(s.outcome());
  }
  const auto& values = p.domain.values;
  const int tasks = static_cast<int>(values.size());
  std::vector<Outcome> results(tasks);
  std::vector<char> interrupted(tasks, 0);
  run_tasks(tasks, jobs, [&](int i) {
    Searcher s(p, order, mode, budget);
    if (start) s.set_target(*start);
    try {
      if (p.mirror && values[i] * 2 > p.domain.scale) return;
      if (!s.push(0, values[i])) return;
      if (s.admissible()) s.dfs(1);
    } catch (const BudgetExhausted&) {
      interrupted[i] = 1;
    }
    results[i] = std::move(s.outcome());
  });

  Outcome total;
  total.nodes = 1;
  for (int i = 0; i < tasks; ++i) {
    total.nodes += results[i].nodes;
    if (better(results[i], total)) {
      total.found = true;
      total.tones = std::move(results[i].tones);
      total.vector = std::move(results[i].vector);
    }
  }
  if (std::find(interrupted.begin(), interrupted.end(), 1) != interrupted.end()) {
    throw BudgetExhausted{std::move(total)};
  }
  return total;
}

}  // namespace

ScaledValues scale_values(std::span<const Rational> values) {
  if (values.empty() || values.front() != Rational(0) || values.back() != Rational(1)) {
    throw Error(ErrorCode::kInvalidArgument, "value set must contain 0 and 1 and lie in [0, 1]");
  }
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i - 1] < values[i])) {
      throw Error(ErrorCode::kInvalidArgument, "value set must be strictly ascending");
    }
  }
  constexpr std::int64_t kLimit = std::int64_t{1} << 62;
  ScaledValues out;
  for (const Rational& y : values) {
    if (!y.is_small()) throw Error(ErrorCode::kInvalidArgument, "value denominator too large");
    const std::int64_t d = y.small_denominator();
    std::int64_t l = 0;
    if (__builtin_mul_overflow(out.scale / std::gcd(out.scale, d), d, &l) || l > kLimit) {
      throw Error(ErrorCode::kInvalidArgument, "common denominator too large");
    }
    out.scale = l;
  }
  for (const Rational& y : values) {
    out.values.push_back(y.small_numerator() * (out.scale / y.small_denominator()));
  }
  return out;
}

std::vector<std::int64_t> scaled_vector(const Graph& g, std::span<const std::int64_t> tones) {
  std::vector<std::int64_t> out;
  out.reserve(g.edge_count());
  for (const Edge& e : g.edges()) out.push_back(std::abs(tones[e.u] - tones[e.v]));
  std::sort(out.begin(), out.end());
  return out;
}

Outcome exhaustive_max(const Problem& p, std::optional<std::int64_t> budget, int jobs) {
  Budget b;
  b.limit = budget;
  Problem plain = p;
  plain.min_tone = 0;
  plain.mirror = false;
  return split_search(plain, free_vertices(p), Mode::kMaximize, std::nullopt, b, jobs);
}

Outcome branch_and_bound(const Problem& p, const std::optional<std::vector<std::int64_t>>& seed,
                         std::optional<std::int64_t> budget, int jobs) {
  Budget b;
  b.limit = budget;
  const Graph& g = *p.graph;

  std::optional<std::vector<std::int64_t>> start;
  Outcome seeded;
  if (seed) {
    seeded.found = true;
    seeded.tones = *seed;
    seeded.vector = scaled_vector(g, *seed);
    start = seeded.vector;
  }

  // Phase 1: the optimum value, searching high-degree vertices first.
  auto order = free_vertices(p);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex c) { return g.degree(a) > g.degree(c); });
  Outcome best;
  try {
    best = split_search(p, order, Mode::kBound, start, b, jobs);
  } catch (BudgetExhausted& ex) {
    if (better(seeded, ex.partial)) {
      seeded.nodes = ex.partial.nodes;
      ex.partial = std::move(seeded);
    }
    throw;
  }
  const std::int64_t phase1_nodes = best.nodes;
  if (!best.found) best = seeded;
  if (!best.found) return best;

  // Phase 2: the smallest tone sequence in vertex order attaining it.
  Problem exact = p;
  exact.mirror = false;
  const auto index_order = free_vertices(p);
  Searcher s(exact, index_order, Mode::kMatch, b);
  s.set_target(best.vector);
  try {
    s.dfs(0);
  } catch (BudgetExhausted&) {
    best.nodes = phase1_nodes + s.outcome().nodes;
    throw BudgetExhausted{std::move(best)};
  }
  Outcome out = std::move(s.outcome());
  if (!out.found) throw std::logic_error("optimum not reachable in witness search");
  out.nodes += phase1_nodes;
  return out;
}

}  // namespace contrast::detail
