#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "contrast/graph.hpp"
#include "contrast/greyscale.hpp"
#include "contrast/rational.hpp"

namespace contrast {

// Fixed tones 0 or 1 on a nonempty proper subset V_c of the vertices.
class IncompleteGreyscale {
 public:
  // `fixed` pairs (vertex, tone) with tone 0 or 1. Throws Error with
  // kOutOfRange, kInvalidArgument (empty V_c, V_c = V, vertex listed twice,
  // tone not 0 or 1) or kAdjacencyViolation (adjacent vertices share a tone).
  IncompleteGreyscale(const Graph& g, std::span<const std::pair<Vertex, int>> fixed);
  IncompleteGreyscale(const Graph& g, std::initializer_list<std::pair<Vertex, int>> fixed);

  int vertex_count() const noexcept { return static_cast<int>(tone_.size()); }
  bool is_fixed(Vertex v) const { return tone_[v] >= 0; }
  // 0 or 1; only meaningful for fixed vertices.
  int tone(Vertex v) const { return tone_[v]; }
  // Fixed vertices, ascending.
  const std::vector<Vertex>& fixed_vertices() const noexcept { return fixed_; }

  friend bool operator==(const IncompleteGreyscale&, const IncompleteGreyscale&) = default;

 private:
  std::vector<int> tone_;  // -1 for free vertices
  std::vector<Vertex> fixed_;
};

struct VcPartition {
  std::vector<Vertex> match_phi0;  // ascending
  std::vector<Vertex> match_phi1;  // ascending
  friend bool operator==(const VcPartition&, const VcPartition&) = default;
};

struct RmacgResult {
  ContrastVector vector;
  Greyscale witness;
  std::string method;
  VcPartition partition;
  std::int64_t nodes = 0;
};

// Method labels reported in RmacgResult::method.
inline constexpr const char* kMethodTwoColouring = "two_colouring";
inline constexpr const char* kMethodCompleteBipartite = "complete_bipartite";
inline constexpr const char* kMethodSingleOpposite = "single_opposite";
inline constexpr const char* kMethodStarSubdivision = "star_subdivision";
inline constexpr const char* kMethodTreeThree = "tree_three";
inline constexpr const char* kMethodOracle = "oracle";
inline constexpr const char* kMethodConstructive = "constructive";

// The five tones {0, 1/3, 1/2, 2/3, 1}.
std::vector<Rational> restricted_tones();

// Classifies V_c against the canonical phi0 of two_colourings. Throws
// Error(kNotBipartite) or Error(kInvalidArgument) if inc was built for another
// vertex count.
VcPartition partition_vc(const Graph& g, const IncompleteGreyscale& inc);

// Compatible greyscale whose edge tones all lie in {1/3, 2/3, 1}. Uses phi0
// when some fixed vertex agrees with it, phi1 otherwise. Not optimal in
// general.
Greyscale constructive_f_phi(const Graph& g, const IncompleteGreyscale& inc);

struct RmacgOracleOptions {
  // Candidate tones for free vertices; must contain 0 and 1. Defaults to
  // restricted_tones().
  std::optional<std::vector<Rational>> values;
  // true: visit every assignment. false: exact branch and bound with the
  // lexicographic bound only.
  bool exhaustive = true;
  std::optional<std::int64_t> budget;
  int jobs = 1;
};

// Lexicographic maximum over all compatible assignments of the free vertices,
// with the lexicographically smallest witness. Throws BudgetExceededError.
RmacgResult oracle_rmacg(const Graph& g, const IncompleteGreyscale& inc,
                         const RmacgOracleOptions& options = {});

// Closed form on K_{r,s}: the matching 2-colouring when V_c agrees with one,
// otherwise tone 1/2 on the part without fixed vertices and 0 on free
// vertices of the other part.
RmacgResult solve_complete_bipartite(int r, int s, const IncompleteGreyscale& inc);
// Same, recognising K_{r,s} from g. Throws Error(kPreconditionFailed) if g is
// not complete bipartite.
RmacgResult solve_complete_bipartite(const Graph& g, const IncompleteGreyscale& inc);

// Requires both classes of partition_vc nonempty and at least one of them a
// singleton; throws Error(kPreconditionFailed) otherwise. Maximizes over
// {0, 1/2, 1} starting from the neighbourhood construction around the
// singleton.
RmacgResult solve_single_opposite(const Graph& g, const IncompleteGreyscale& inc);

// t must be a subdivision of K_{1,n}, n >= 3, with exactly its leaves fixed;
// throws Error(kPreconditionFailed) otherwise.
RmacgResult solve_star_subdivision(const Graph& t, const IncompleteGreyscale& inc);

// t must be a tree with exactly three fixed vertices; throws
// Error(kPreconditionFailed) otherwise. Places tone 1/2 on a minimum-degree
// separator between the odd fixed vertex and the other two.
RmacgResult solve_tree_three(const Graph& t, const IncompleteGreyscale& inc);

enum class RmacgMethod { kAuto, kOracle, kConstructive };

// kAuto picks the first applicable closed form (matching 2-colouring,
// complete bipartite, star subdivision, tree with three fixed vertices,
// singleton class) and falls back to oracle_rmacg.
RmacgResult solve_rmacg(const Graph& g, const IncompleteGreyscale& inc,
                        RmacgMethod method = RmacgMethod::kAuto,
                        const RmacgOracleOptions& oracle_options = {});

// Fixed-tone file: one "v 0" or "v 1" line per fixed vertex; '#' comments and
// blank lines ignored.
IncompleteGreyscale parse_fixed_tones(std::istream& in, const Graph& g);
void write_fixed_tones(const IncompleteGreyscale& inc, std::ostream& out);

}  // namespace contrast
