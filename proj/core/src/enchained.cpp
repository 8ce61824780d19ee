#include "contrast/enchained.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "contrast/error.hpp"

namespace contrast {

namespace {

using Updates = std::unordered_map<Rational, Rational, RationalHash>;

// Working set H with its step map. A value whose step is undefined has not
// (yet) been shown interior to an admissible chain and cannot serve as an
// extreme.
struct Lattice {
  std::vector<Rational> values;
  std::vector<Rational> step;
  std::vector<char> defined;
  std::unordered_map<Rational, int, RationalHash> index;

  void reindex() {
    index.clear();
    index.reserve(values.size() * 2);
    for (int i = 0; i < static_cast<int>(values.size()); ++i) index.emplace(values[i], i);
  }

  int size() const { return static_cast<int>(values.size()); }
};

Lattice seed_lattice() {
  Lattice lat;
  lat.values = {Rational(0), Rational(1)};
  lat.step = {Rational(0), Rational(0)};
  lat.defined = {1, 1};
  lat.reindex();
  return lat;
}

class ChainScanner {
 public:
  ChainScanner(const Lattice& lat, int k, bool internal_only)
      : lat_(lat), min_step_(Rational::of(1, k)), min_gap_(Rational::of(2, k)),
        internal_only_(internal_only) {}

  // Emits every admissible chain with at least one extreme in `focus`.
  // `is_focus` marks the same indices so pairs with two focus extremes are
  // visited once.
  void scan(std::span<const int> focus, const std::vector<char>& is_focus, Updates& out) const {
    for (int i : focus) {
      if (!lat_.defined[i]) continue;
      const Rational& y = lat_.values[i];
      // i as the lower extreme.
      auto first_hi = std::lower_bound(lat_.values.begin(), lat_.values.end(), y + min_gap_);
      for (int j = static_cast<int>(first_hi - lat_.values.begin()); j < lat_.size(); ++j) {
        visit(i, j, out);
      }
      // i as the upper extreme; focus partners were covered above.
      if (y < min_gap_) continue;
      auto past_lo = std::upper_bound(lat_.values.begin(), lat_.values.end(), y - min_gap_);
      for (int j = 0; j < static_cast<int>(past_lo - lat_.values.begin()); ++j) {
        if (!is_focus[j]) visit(j, i, out);
      }
    }
  }

 private:
  void visit(int lo, int hi, Updates& out) const {
    if (!lat_.defined[lo] || !lat_.defined[hi]) return;
    const Rational& base = lat_.values[lo];
    const Rational gap = lat_.values[hi] - base;
    const Rational& floor_step = max(lat_.step[lo], lat_.step[hi]);
    interior_.clear();
    for (std::int64_t r = 2;; ++r) {
      const Rational p = gap / Rational(r);
      // p shrinks as r grows, so both bounds end the scan.
      if (p < min_step_ || !(p > floor_step)) break;
      interior_.clear();
      bool inside = true;
      for (std::int64_t t = 1; t < r; ++t) {
        interior_.push_back(base + p * Rational(t));
        if (internal_only_ && !lat_.index.contains(interior_.back())) {
          inside = false;
          break;
        }
      }
      if (!inside) continue;
      for (const Rational& y : interior_) offer(y, p, out);
    }
  }

  void offer(const Rational& y, const Rational& p, Updates& out) const {
    if (auto it = lat_.index.find(y); it != lat_.index.end()) {
      if (lat_.defined[it->second] && lat_.step[it->second] <= p) return;
    }
    auto [slot, inserted] = out.try_emplace(y, p);
    if (!inserted && p < slot->second) slot->second = p;
  }

  const Lattice& lat_;
  Rational min_step_;
  Rational min_gap_;
  bool internal_only_;
  mutable std::vector<Rational> interior_;
};

// One generation pass over the pairs touching `focus`, split across `jobs`
// workers. Each worker fills its own map; merging by minimum makes the result
// independent of the split.
Updates generate(const Lattice& lat, int k, std::span<const int> focus, bool internal_only,
                 int jobs) {
  std::vector<char> is_focus(lat.size(), 0);
  for (int i : focus) is_focus[i] = 1;
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(focus.size())));
  if (jobs == 1) {
    Updates out;
    ChainScanner(lat, k, internal_only).scan(focus, is_focus, out);
    return out;
  }
  std::vector<Updates> parts(jobs);
  std::vector<std::thread> workers;
  const std::size_t chunk = (focus.size() + jobs - 1) / jobs;
  for (int w = 0; w < jobs; ++w) {
    const std::size_t begin = std::min(focus.size(), w * chunk);
    const std::size_t end = std::min(focus.size(), begin + chunk);
    workers.emplace_back([&, w, begin, end] {
      // Each worker owns its scanner; the scratch buffer is not shareable.
      ChainScanner(lat, k, internal_only).scan(focus.subspan(begin, end - begin), is_focus, parts[w]);
    });
  }
  for (auto& t : workers) t.join();
  Updates merged = std::move(parts[0]);
  for (int w = 1; w < jobs; ++w) {
    for (auto& [y, p] : parts[w]) {
      auto [slot, inserted] = merged.try_emplace(y, p);
      if (!inserted && p < slot->second) slot->second = p;
    }
  }
  return merged;
}

struct ApplyResult {
  std::vector<Rational> added;  // ascending
  bool lowered = false;
  std::vector<int> touched;     // indices (after apply) of added or lowered values
};

ApplyResult apply_updates(Lattice& lat, const Updates& updates) {
  ApplyResult res;
  std::vector<std::pair<Rational, Rational>> fresh;
  std::vector<char> changed(lat.size(), 0);
  for (const auto& [y, p] : updates) {
    if (auto it = lat.index.find(y); it != lat.index.end()) {
      const int i = it->second;
      if (!lat.defined[i] || p < lat.step[i]) {
        lat.step[i] = p;
        lat.defined[i] = 1;
        changed[i] = 1;
        res.lowered = true;
      }
    } else {
      fresh.emplace_back(y, p);
    }
  }
  if (fresh.empty()) {
    for (int i = 0; i < lat.size(); ++i)
      if (changed[i]) res.touched.push_back(i);
    return res;
  }
  std::sort(fresh.begin(), fresh.end());
  Lattice next;
  const std::size_t total = lat.values.size() + fresh.size();
  next.values.reserve(total);
  next.step.reserve(total);
  next.defined.reserve(total);
  std::size_t a = 0, b = 0;
  while (a < lat.values.size() || b < fresh.size()) {
    const bool take_old = b == fresh.size() || (a < lat.values.size() && lat.values[a] < fresh[b].first);
    if (take_old) {
      if (changed[a]) res.touched.push_back(next.size());
      next.values.push_back(std::move(lat.values[a]));
      next.step.push_back(std::move(lat.step[a]));
      next.defined.push_back(lat.defined[a]);
      ++a;
    } else {
      res.touched.push_back(next.size());
      res.added.push_back(fresh[b].first);
      next.values.push_back(fresh[b].first);
      next.step.push_back(fresh[b].second);
      next.defined.push_back(1);
      ++b;
    }
  }
  next.reindex();
  lat = std::move(next);
  return res;
}

std::vector<int> all_indices(const Lattice& lat) {
  std::vector<int> out(lat.size());
  for (int i = 0; i < lat.size(); ++i) out[i] = i;
  return out;
}

// Lowers steps using only chains that lie entirely inside the current set,
// until nothing changes.
void saturate_within(Lattice& lat, int k, int jobs) {
  for (;;) {
    auto focus = all_indices(lat);
    auto res = apply_updates(lat, generate(lat, k, focus, /*internal_only=*/true, jobs));
    if (!res.lowered) return;
  }
}

void require_k(int k) {
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "k must be at least 2");
}

Lattice lattice_from(std::span<const Rational> values) {
  Lattice lat;
  lat.values.assign(values.begin(), values.end());
  if (!std::is_sorted(lat.values.begin(), lat.values.end()) ||
      std::adjacent_find(lat.values.begin(), lat.values.end()) != lat.values.end()) {
    throw Error(ErrorCode::kInvalidArgument, "value set must be ascending without duplicates");
  }
  lat.step.assign(lat.values.size(), Rational(0));
  lat.defined.assign(lat.values.size(), 0);
  for (std::size_t i = 0; i < lat.values.size(); ++i) {
    if (lat.values[i] == Rational(0) || lat.values[i] == Rational(1)) lat.defined[i] = 1;
  }
  lat.reindex();
  return lat;
}

std::vector<std::vector<Rational>> build_strata(int k, int jobs, std::vector<Rational>& mins) {
  Lattice lat = seed_lattice();
  std::vector<std::vector<Rational>> strata{lat.values};
  mins = {Rational(0)};
  for (;;) {
    saturate_within(lat, k, jobs);
    if (strata.size() > 1) {
      Rational lowest(1);
      for (const Rational& y : strata.back()) lowest = min(lowest, lat.step[lat.index.at(y)]);
      mins.push_back(lowest);
    }
    auto focus = all_indices(lat);
    auto res = apply_updates(lat, generate(lat, k, focus, /*internal_only=*/false, jobs));
    if (res.added.empty()) break;
    strata.push_back(std::move(res.added));
  }
  return strata;
}

}  // namespace

StepChain make_chain(const Rational& y1, const Rational& y2, int r) {
  if (r < 2) throw Error(ErrorCode::kInvalidArgument, "chain length must be at least 2");
  if (!(y1 < y2)) throw Error(ErrorCode::kInvalidArgument, "chain extremes must satisfy y1 < y2");
  if (y1 < Rational(0) || y2 > Rational(1)) {
    throw Error(ErrorCode::kInvalidArgument, "chain extremes must lie in [0, 1]");
  }
  StepChain c;
  c.step = (y2 - y1) / Rational(r);
  c.points.reserve(r + 1);
  for (int t = 0; t < r; ++t) c.points.push_back(y1 + c.step * Rational(t));
  c.points.push_back(y2);
  return c;
}

std::vector<Rational> s_map(std::span<const Rational> values, int k) {
  require_k(k);
  Lattice lat = lattice_from(values);
  saturate_within(lat, k, 1);
  std::vector<Rational> out(lat.size(), Rational(0));
  for (int i = 0; i < lat.size(); ++i)
    if (lat.defined[i]) out[i] = lat.step[i];
  return out;
}

Rational s_value(std::span<const Rational> values, int k, const Rational& y) {
  auto it = std::lower_bound(values.begin(), values.end(), y);
  if (it == values.end() || *it != y) {
    throw Error(ErrorCode::kInvalidArgument, y.to_string() + " is not in the value set");
  }
  return s_map(values, k)[it - values.begin()];
}

EnchainedCheck is_enchained_set(std::span<const Rational> values, int k) {
  require_k(k);
  EnchainedCheck check;
  std::vector<Rational> f(values.begin(), values.end());
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  auto has = [&](const Rational& y) { return std::binary_search(f.begin(), f.end(), y); };
  if (!f.empty() && (f.front() < Rational(0) || f.back() > Rational(1))) {
    check.diagnostics.push_back("values must lie in [0, 1]");
    return check;
  }

  for (int i = 0; i <= k; ++i) {
    if (!has(Rational::of(i, k))) {
      check.diagnostics.push_back("missing " + Rational::of(i, k).to_string() +
                                  " of the 1/" + std::to_string(k) + "-step chain from 0 to 1");
    }
  }
  for (int r = k + 1; r + 1 <= static_cast<int>(f.size()); ++r) {
    bool full = true;
    for (int i = 0; i <= r && full; ++i) full = has(Rational::of(i, r));
    if (full) {
      check.diagnostics.push_back("contains the finer 1/" + std::to_string(r) +
                                  "-step chain from 0 to 1");
    }
  }

  if (check.diagnostics.empty()) {
    const auto steps = s_map(f, k);
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] == Rational(0) || f[i] == Rational(1)) continue;
      if (steps[i].is_zero()) {
        check.diagnostics.push_back(f[i].to_string() + " is interior to no admissible chain");
      }
    }
  }
  check.ok = check.diagnostics.empty();
  return check;
}

bool EnchainedSet::contains(const Rational& y) const {
  return std::binary_search(values.begin(), values.end(), y);
}

EnchainedSet mes(int k, const MesOptions& options) {
  require_k(k);
  EnchainedSet out;
  out.k = k;

  Lattice lat = seed_lattice();
  std::vector<int> focus = all_indices(lat);
  bool quiet_pass_seen = false;
  for (;;) {
    auto res = apply_updates(lat, generate(lat, k, focus, /*internal_only=*/false, options.jobs));
    ++out.passes;
    if (res.added.empty() && !res.lowered) break;
    if (res.added.empty()) quiet_pass_seen = true;
    if (!res.added.empty() && quiet_pass_seen) out.literal_guard_diverged = true;
    focus = std::move(res.touched);
  }
  out.values = std::move(lat.values);
  out.s_values = std::move(lat.step);

  if (options.strata) {
    std::vector<Rational> mins;
    auto strata = build_strata(k, options.jobs, mins);
    std::vector<Rational> flat;
    for (const auto& s : strata) flat.insert(flat.end(), s.begin(), s.end());
    std::sort(flat.begin(), flat.end());
    if (flat != out.values) throw std::logic_error("strata do not partition F_k");
    out.strata = std::move(strata);
    out.stratum_min_step = std::move(mins);
  }
  return out;
}

}  // namespace contrast
