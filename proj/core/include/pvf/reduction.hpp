#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pvf/graph.hpp"
#include "pvf/oracle_state.hpp"

namespace pvf {

// Sets S_0..S_{|F|-1} over the universe [0, universe), plus query pairs.
struct SetDisjointnessInstance {
  std::int32_t universe = 0;
  std::vector<std::vector<std::int32_t>> sets;  // each ascending, distinct
  std::vector<std::pair<std::int32_t, std::int32_t>> queries;

  std::int32_t family_size() const noexcept { return static_cast<std::int32_t>(sets.size()); }
  friend bool operator==(const SetDisjointnessInstance&, const SetDisjointnessInstance&) = default;
};

// Throws InvalidRequest on out-of-range elements or set indices, or on
// repeated elements within a set.
void validate_setdisjointness(const SetDisjointnessInstance& inst);

// Bipartite graph: set vertex a_i = i, element vertex b_u = |F| + u, with
// a_i ~ b_u iff u in S_i. The instance predicts every set vertex to fail.
struct ReductionGraph {
  Instance instance;
  std::int32_t family_size = 0;

  Vertex set_vertex(std::int32_t i) const noexcept { return i; }
  Vertex element_vertex(std::int32_t u) const noexcept { return family_size + u; }
  bool is_set_vertex(Vertex v) const noexcept { return v < family_size; }
};

ReductionGraph build_reduction_graph(const SetDisjointnessInstance& inst);

// One bit per query: true when the two sets intersect.
std::vector<bool> naive_disjointness(const SetDisjointnessInstance& inst);

struct SetDisjointnessRun {
  std::vector<bool> answers;
  std::vector<std::int64_t> etas;  // symmetric difference per query update
};

// Per query (i, j), i != j: restore a_i and a_j, then ask whether they are
// connected. A query with i == j asks whether S_i is nonempty and is
// answered from the graph degree without an update.
SetDisjointnessRun solve_setdisjointness(const OracleState& oracle, const ReductionGraph& reduction,
                                         const SetDisjointnessInstance& inst);

// Text: "|U| |F| q", |F| lines "k e1..ek", q lines "i j" (0-based).
SetDisjointnessInstance parse_setdisjointness(std::string_view text);
std::string serialize_setdisjointness(const SetDisjointnessInstance& inst);

// Family of exactly `family` sets over `universe` elements, each of size
// uniform in [0, max_set], with q uniform query pairs.
SetDisjointnessInstance random_setdisjointness(std::int32_t universe, std::int32_t family, std::int32_t max_set,
                                               std::int32_t queries, std::uint64_t seed);

// Shape |F| = n, |U| ~ n^(2-2 gamma), set size ~ n^(1-gamma), q ~ n^(1+gamma).
SetDisjointnessInstance generate_setdisjointness(std::int32_t n, double gamma, std::uint64_t seed);

}  // namespace pvf
