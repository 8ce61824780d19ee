#include "contrast/greyscale.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

namespace contrast {

namespace {

const Rational kZero{0};
const Rational kOne{1};

void require_cover(const Graph& g, const Greyscale& f) {
  if (f.size() != g.vertex_count()) {
    throw Error(ErrorCode::kInvalidGreyscale,
                "greyscale has " + std::to_string(f.size()) + " tones for a graph with " +
                    std::to_string(g.vertex_count()) + " vertices");
  }
}

std::vector<Rational> edge_tones(const Graph& g, const Greyscale& f) {
  require_cover(g, f);
  std::vector<Rational> out;
  out.reserve(g.edge_count());
  for (const Edge& e : g.edges()) out.push_back(edge_tone(f, e));
  return out;
}

std::string edge_text(const Edge& e) {
  return "{" + std::to_string(e.u) + ", " + std::to_string(e.v) + "}";
}

}  // namespace

Greyscale::Greyscale(std::vector<Rational> tones) : tones_(std::move(tones)) {
  bool has_zero = false, has_one = false;
  for (std::size_t v = 0; v < tones_.size(); ++v) {
    const Rational& t = tones_[v];
    if (t < kZero || t > kOne) {
      throw Error(ErrorCode::kInvalidGreyscale,
                  "tone " + t.to_string() + " of vertex " + std::to_string(v) + " is outside [0, 1]");
    }
    has_zero = has_zero || t == kZero;
    has_one = has_one || t == kOne;
  }
  if (!has_zero || !has_one) {
    throw Error(ErrorCode::kInvalidGreyscale, "greyscale image must contain both 0 and 1");
  }
}

std::vector<Rational> Greyscale::image() const {
  std::vector<Rational> out = tones_;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational edge_tone(const Greyscale& f, const Edge& e) { return (f[e.u] - f[e.v]).abs(); }

ContrastVector contrast_vector(const Graph& g, const Greyscale& f) {
  auto tones = edge_tones(g, f);
  std::sort(tones.begin(), tones.end());
  return ContrastVector{std::move(tones)};
}

GradationVector gradation_vector(const Graph& g, const Greyscale& f) {
  auto tones = edge_tones(g, f);
  std::sort(tones.begin(), tones.end(), std::greater<>());
  return GradationVector{std::move(tones)};
}

std::strong_ordering lex_compare(const ContrastVector& a, const ContrastVector& b) {
  if (a.tones.size() != b.tones.size()) {
    throw Error(ErrorCode::kLengthMismatch, "contrast vectors of lengths " +
                                                std::to_string(a.tones.size()) + " and " +
                                                std::to_string(b.tones.size()));
  }
  return std::lexicographical_compare_three_way(a.tones.begin(), a.tones.end(), b.tones.begin(),
                                                b.tones.end());
}

Greyscale complementary(const Greyscale& f) {
  std::vector<Rational> out;
  out.reserve(f.size());
  for (const Rational& t : f.tones()) out.push_back(kOne - t);
  return Greyscale(std::move(out));
}

Rational lightest_tone(const Graph& g) {
  if (g.edge_count() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "lightest tone is undefined on an edgeless graph");
  }
  return Rational::of(1, chromatic_number(g) - 1);
}

std::vector<int> colouring_from_greyscale(const Graph& g, const Greyscale& f, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  require_cover(g, f);
  const Rational kk{k};
  std::vector<int> cls(f.size());
  for (int v = 0; v < f.size(); ++v) {
    // floor(f(v) * k) is the bucket; tone 1 lands in bucket k.
    Rational scaled = f[v] * kk;
    std::int64_t bucket = 0;
    while (Rational(bucket + 1) <= scaled && bucket < k) ++bucket;
    cls[v] = static_cast<int>(bucket);
  }
  for (const Edge& e : g.edges()) {
    if (cls[e.u] == cls[e.v]) {
      throw ImproperColouringError(e, "vertices of edge " + edge_text(e) + " share class " +
                                          std::to_string(cls[e.u]));
    }
  }
  return cls;
}

std::vector<IncrementalPath> find_incremental_paths(const Graph& g, const Greyscale& f, Edge e) {
  require_cover(g, f);
  if (e.u > e.v) std::swap(e.u, e.v);
  if (e.u < 0 || e.v >= g.vertex_count() || !g.adjacent(e.u, e.v)) {
    throw Error(ErrorCode::kInvalidArgument, edge_text(e) + " is not an edge of the graph");
  }
  const Rational step = lightest_tone(g);
  if (edge_tone(f, e) != step) {
    throw Error(ErrorCode::kNotLightestEdge,
                "edge " + edge_text(e) + " has tone " + edge_tone(f, e).to_string() +
                    ", lightest tone is " + step.to_string());
  }
  const auto k = step.small_denominator();
  Vertex lo = e.u, hi = e.v;
  if (f[hi] < f[lo]) std::swap(lo, hi);
  const Rational lo_index = f[lo] * Rational(k);
  if (lo_index.small_denominator() != 1) return {};
  const auto j = lo_index.small_numerator();

  // All tone-monotone walks from `start` to the extreme tone in the given
  // direction, each step changing the tone by exactly `step`.
  auto walks = [&](Vertex start, std::int64_t from, int dir) {
    std::vector<std::vector<Vertex>> done;
    std::vector<Vertex> cur{start};
    std::function<void(Vertex, std::int64_t)> go = [&](Vertex v, std::int64_t idx) {
      if ((dir < 0 && idx == 0) || (dir > 0 && idx == k)) {
        done.push_back(cur);
        return;
      }
      const Rational want = Rational::of(idx + dir, k);
      for (Vertex w : g.neighbours(v)) {
        if (f[w] != want) continue;
        cur.push_back(w);
        go(w, idx + dir);
        cur.pop_back();
      }
    };
    go(start, from);
    return done;
  };

  std::vector<IncrementalPath> out;
  for (const auto& down : walks(lo, j, -1)) {
    for (const auto& up : walks(hi, j + 1, +1)) {
      IncrementalPath p{{down.rbegin(), down.rend()}, step};
      p.vertices.insert(p.vertices.end(), up.begin(), up.end());
      out.push_back(std::move(p));
    }
  }
  return out;
}

VerificationReport verify_max_conditions(const Graph& g, const Greyscale& f) {
  require_cover(g, f);
  VerificationReport report;
  auto flag = [&](const char* cond, std::optional<Vertex> v, std::optional<Edge> e,
                  std::string detail) {
    report.violations.push_back(Violation{cond, v, e, std::move(detail)});
  };

  for (const Edge& e : g.edges()) {
    if (edge_tone(f, e).is_zero()) flag(kCondZeroComponent, std::nullopt, e, "edge tone is 0");
  }

  const Rational lt = lightest_tone(g);
  const auto k = lt.small_denominator();
  const auto cv = contrast_vector(g, f);
  if (cv.tones.front() != lt) {
    auto it = std::find_if(g.edges().begin(), g.edges().end(),
                           [&](const Edge& e) { return edge_tone(f, e) == cv.tones.front(); });
    flag(kCondLightestTone, std::nullopt, *it,
         "first component " + cv.tones.front().to_string() + " differs from " + lt.to_string());
  }

  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (f[v] == kZero || f[v] == kOne) continue;
    Rational a = kOne;
    for (Vertex w : g.neighbours(v)) a = min(a, (f[v] - f[w]).abs());
    bool left = false, right = false;
    if (!a.is_zero()) {
      for (Vertex w : g.neighbours(v)) {
        left = left || f[w] == f[v] - a;
        right = right || f[w] == f[v] + a;
      }
    }
    if (!left || !right) {
      flag(kCondClosestPair, v, std::nullopt,
           "no neighbours at distance " + a.to_string() + " on both sides of tone " +
               f[v].to_string());
    }
  }

  std::int64_t lightest_edges = 0;
  for (const Edge& e : g.edges()) {
    if (edge_tone(f, e) != lt) continue;
    ++lightest_edges;
    if (find_incremental_paths(g, f, e).empty()) {
      flag(kCondIncrementalPath, std::nullopt, e, "lightest edge lies on no incremental path");
    }
  }

  const auto image = f.image();
  for (std::int64_t i = 0; i <= k; ++i) {
    Rational want = Rational::of(i, k);
    if (!std::binary_search(image.begin(), image.end(), want)) {
      flag(kCondGridSubset, std::nullopt, std::nullopt, "tone " + want.to_string() + " is unused");
    }
  }

  if (lightest_edges < k) {
    flag(kCondLightestCount, std::nullopt, std::nullopt,
         std::to_string(lightest_edges) + " components equal " + lt.to_string() + ", need " +
             std::to_string(k));
  }

  report.passed = report.violations.empty();
  return report;
}

std::string format_tuple(const std::vector<Rational>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += values[i].to_string();
  }
  return out + ")";
}

Greyscale parse_greyscale(std::istream& in, int vertex_count) {
  std::vector<std::optional<Rational>> tones(vertex_count);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long long v = 0;
    std::string tone, extra;
    if (!(fields >> v >> tone) || (fields >> extra)) {
      throw Error(ErrorCode::kMalformedInput,
                  "line " + std::to_string(line_no) + ": expected \"v p/q\"");
    }
    if (v < 0 || v >= vertex_count) {
      throw Error(ErrorCode::kOutOfRange,
                  "line " + std::to_string(line_no) + ": vertex " + std::to_string(v) + " out of range");
    }
    if (tones[v]) {
      throw Error(ErrorCode::kMalformedInput,
                  "line " + std::to_string(line_no) + ": vertex " + std::to_string(v) + " listed twice");
    }
    tones[v] = Rational::parse(tone);
  }
  std::vector<Rational> out;
  out.reserve(vertex_count);
  for (int v = 0; v < vertex_count; ++v) {
    if (!tones[v]) {
      throw Error(ErrorCode::kInvalidGreyscale, "vertex " + std::to_string(v) + " has no tone");
    }
    out.push_back(*tones[v]);
  }
  return Greyscale(std::move(out));
}

void write_greyscale(const Greyscale& f, std::ostream& out) {
  for (int v = 0; v < f.size(); ++v) out << v << ' ' << f[v] << '\n';
}

}  // namespace contrast
