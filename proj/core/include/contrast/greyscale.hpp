#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "contrast/error.hpp"
#include "contrast/graph.hpp"
#include "contrast/rational.hpp"

namespace contrast {

// Vertex-to-tone map with every tone in [0,1] and both 0 and 1 used.
class Greyscale {
 public:
  // Throws Error(kInvalidGreyscale) if a tone leaves [0,1] or if 0 or 1 is
  // missing from the image.
  explicit Greyscale(std::vector<Rational> tones);

  int size() const noexcept { return static_cast<int>(tones_.size()); }
  const Rational& operator[](Vertex v) const { return tones_[v]; }
  const std::vector<Rational>& tones() const noexcept { return tones_; }

  // Distinct tones, ascending.
  std::vector<Rational> image() const;

  friend bool operator==(const Greyscale&, const Greyscale&) = default;

 private:
  std::vector<Rational> tones_;
};

// Edge tones sorted ascending; larger is better under lexicographic order.
struct ContrastVector {
  std::vector<Rational> tones;
  friend bool operator==(const ContrastVector&, const ContrastVector&) = default;
};

// Edge tones sorted descending.
struct GradationVector {
  std::vector<Rational> tones;
  friend bool operator==(const GradationVector&, const GradationVector&) = default;
};

Rational edge_tone(const Greyscale& f, const Edge& e);

// Both throw Error(kInvalidGreyscale) when f does not cover exactly V(g).
ContrastVector contrast_vector(const Graph& g, const Greyscale& f);
GradationVector gradation_vector(const Graph& g, const Greyscale& f);

// Throws Error(kLengthMismatch) for vectors of different length.
std::strong_ordering lex_compare(const ContrastVector& a, const ContrastVector& b);

Greyscale complementary(const Greyscale& f);

// 1 / (chi(g) - 1). Throws Error(kInvalidArgument) on an edgeless graph.
Rational lightest_tone(const Graph& g);

class ImproperColouringError : public Error {
 public:
  ImproperColouringError(Edge edge, const std::string& message)
      : Error(ErrorCode::kImproperColouring, message), edge_(edge) {}
  const Edge& edge() const noexcept { return edge_; }

 private:
  Edge edge_;
};

// Buckets tones into classes 0..k: class i holds [i/k, (i+1)/k), class k holds
// tone 1. Throws ImproperColouringError naming the first edge whose endpoints
// land in the same class.
std::vector<int> colouring_from_greyscale(const Graph& g, const Greyscale& f, int k);

// Path u_0..u_k with tone(u_i) = i/k.
struct IncrementalPath {
  std::vector<Vertex> vertices;
  Rational step;
  friend bool operator==(const IncrementalPath&, const IncrementalPath&) = default;
};

// Every incremental path of length k through e, where 1/k = lightest_tone(g).
// Throws Error(kNotLightestEdge) unless the tone of e equals that value, and
// Error(kInvalidArgument) if e is not an edge of g.
std::vector<IncrementalPath> find_incremental_paths(const Graph& g, const Greyscale& f, Edge e);

struct Violation {
  std::string condition;
  std::optional<Vertex> vertex;
  std::optional<Edge> edge;
  std::string detail;
};

struct VerificationReport {
  // Only necessary conditions are checked; passing does not certify that f is
  // a maximum-contrast greyscale.
  static constexpr const char* kScope = "necessary conditions only";

  bool passed = true;
  std::vector<Violation> violations;
};

// Condition labels used in VerificationReport.
inline constexpr const char* kCondZeroComponent = "zero_component";
inline constexpr const char* kCondLightestTone = "lightest_tone";
inline constexpr const char* kCondClosestPair = "closest_pair";
inline constexpr const char* kCondIncrementalPath = "incremental_path";
inline constexpr const char* kCondGridSubset = "grid_subset";
inline constexpr const char* kCondLightestCount = "lightest_count";

VerificationReport verify_max_conditions(const Graph& g, const Greyscale& f);

// "(a, b, c)" with every entry as p/q.
std::string format_tuple(const std::vector<Rational>& values);

// Greyscale text format: one "v p/q" line per vertex, each vertex exactly once.
// '#' comment lines and blank lines are ignored.
Greyscale parse_greyscale(std::istream& in, int vertex_count);
void write_greyscale(const Greyscale& f, std::ostream& out);

}  // namespace contrast
