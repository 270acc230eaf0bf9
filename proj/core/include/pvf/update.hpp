#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pvf/graph.hpp"
#include "pvf/oracle_state.hpp"

namespace pvf {

// Operation counts collected during one update.
struct UpdateCounters {
  std::int64_t q2d_base = 0;      // queries on the base-numbering 2D structure
  std::int64_t q2d_ti = 0;        // queries on T_i structures
  std::int64_t q2d_tu = 0;        // queries on T_u structures
  std::int64_t bin_searches = 0;  // sorted-list searches of any kind
  std::int64_t la_probes = 0;     // level-ancestor queries
  std::int64_t ancestor_tests = 0;
  std::int64_t update_micros = 0;
};

// Failed tree vertices (removed set, hub included) linked to their deepest
// failed proper ancestor.
struct FailedForest {
  std::vector<Pos> failed;            // ascending positions
  std::vector<std::int32_t> parent;   // index into failed, -1 for roots
  std::vector<std::vector<std::int32_t>> children;

  std::int32_t size() const noexcept { return static_cast<std::int32_t>(failed.size()); }
  // Index of position p in failed, or -1.
  std::int32_t index_of(Pos p) const;
  bool contains(Pos p) const { return index_of(p) >= 0; }
  // Position of parent_F(failed[i]), or kNoPos.
  Pos parent_pos(std::int32_t i) const { return parent[i] < 0 ? kNoPos : failed[parent[i]]; }
};

// Pairwise ancestor tests over the sorted removed positions; O(eta^2).
FailedForest build_failed_forest(const DfsTree& t, std::span<const Pos> removed, UpdateCounters& counters);

// Root of the component of T \ failed that contains the non-failed v: the
// child, toward v, of v's deepest failed ancestor, or the tree root when v
// has no failed ancestor.
Pos locate_component_root(const DfsTree& t, const LevelAncestorIndex& la, const FailedForest& forest, Pos v,
                          UpdateCounters& counters);

enum class ComponentKind { kInternal, kHanging };

struct Segment {
  Pos lo = 0;
  Pos hi = -1;  // inclusive; empty when hi < lo
};

struct ComponentInfo {
  Pos root = kNoPos;
  ComponentKind kind = ComponentKind::kHanging;
  std::vector<Pos> boundary;      // ascending
  std::vector<Segment> segments;  // non-empty, ascending, cover the component
};

// Determines whether the component rooted at `root` is internal and, if so,
// its boundary vertices and segment decomposition.
ComponentInfo classify_component(const DfsTree& t, const FailedForest& forest, Pos root,
                                 UpdateCounters& counters);

// One step of the walk from a failed vertex toward the root, restricted to
// boundary vertices: the component whose boundary vertex is `boundary`.
struct ChainLink {
  std::int32_t component = -1;  // index into Decomposition::internal
  Pos boundary = kNoPos;
};

// Per-update decomposition of T \ (removed) together with restored vertices.
struct Decomposition {
  FailedForest forest;
  std::vector<ComponentInfo> internal;
  std::unordered_map<Pos, std::int32_t> internal_index;  // root -> index
  std::vector<std::int32_t> boundary_of;                 // per failed: component index, -1 if none
  std::vector<std::vector<ChainLink>> chains;            // per failed, nearest first
  std::vector<std::vector<Pos>> blocked_children;        // per failed: failed or internal-root children
  std::vector<std::int32_t> restored;                    // pred indices, ascending
  std::int32_t removed_count = 0;                        // eta contribution, hub excluded
  std::int64_t eta = 0;

  std::int32_t num_restored() const noexcept { return static_cast<std::int32_t>(restored.size()); }
  // Connectivity-graph vertex ids: restored first, then internal components.
  std::int32_t m_vertex_of_restored(std::int32_t i) const { return i; }
  std::int32_t m_vertex_of_component(std::int32_t c) const { return num_restored() + c; }
  std::int32_t num_m_vertices() const { return num_restored() + static_cast<std::int32_t>(internal.size()); }
  // Number of low columns worth scanning: one past the failed count.
  std::int32_t low_scan_limit(std::int32_t columns) const {
    return std::min<std::int32_t>(removed_count + 1, columns);
  }
};

// Requires a request validated against the same instance (hub present).
Decomposition decompose(const OracleState& state, const ValidatedUpdate& update, UpdateCounters& counters);

struct MEdge {
  std::int32_t a = 0;
  std::int32_t b = 0;
  std::int32_t type = 0;  // 1..6

  friend bool operator==(const MEdge&, const MEdge&) = default;
};

// Auxiliary graph over restored vertices and internal-component roots.
class ConnectivityGraph {
 public:
  explicit ConnectivityGraph(std::int32_t vertices = 0);

  std::int32_t num_vertices() const noexcept { return static_cast<std::int32_t>(parent_.size()); }
  // Adds the edge unless an edge with the same endpoints and type exists.
  void add_edge(std::int32_t a, std::int32_t b, std::int32_t type);
  bool has_edge(std::int32_t a, std::int32_t b, std::int32_t type) const;
  const std::vector<MEdge>& edges() const noexcept { return edges_; }
  std::vector<MEdge> edges_of_type(std::int32_t type) const;

  std::int32_t find(std::int32_t a) const;
  bool connected(std::int32_t a, std::int32_t b) const { return find(a) == find(b); }

 private:
  static std::uint64_t key(std::int32_t a, std::int32_t b, std::int32_t type);

  std::vector<MEdge> edges_;
  std::unordered_map<std::uint64_t, std::int32_t> edge_keys_;
  // Union by size with path compression.
  mutable std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> size_;
};

// A maximal run of consecutive children of a failed vertex, under some
// numbering, all of which root hanging subtrees.
struct Slice {
  Pos first = kNoPos;  // L
  Pos last = kNoPos;   // R
  Pos lo = 0;          // number(L)
  Pos hi = -1;         // number(R) + ND(R) - 1
};

// Splits children ranks [begin, end) of f (under `order`) at failed and
// internal-root children.
std::vector<Slice> make_slices(const OracleState& state, const Decomposition& dec, const Reordering& order,
                               std::int32_t failed_index, std::int32_t begin, std::int32_t end);

// S_u(f): hanging-root runs inside the marked suffix of f's children in T_u.
std::vector<Slice> marked_slices(const OracleState& state, const Decomposition& dec, std::int32_t u,
                                 std::int32_t failed_index, UpdateCounters& counters);

void add_type1_edges(const OracleState& state, const Decomposition& dec, ConnectivityGraph& m,
                     UpdateCounters& counters);
void add_type2_edges(const OracleState& state, const Decomposition& dec, ConnectivityGraph& m,
                     UpdateCounters& counters);
void add_type3_edges(const OracleState& state, const Decomposition& dec, ConnectivityGraph& m,
                     UpdateCounters& counters);
void add_type4_edges(const OracleState& state, const Decomposition& dec, ConnectivityGraph& m,
                     UpdateCounters& counters);
void add_type5_edges(const OracleState& state, const Decomposition& dec, ConnectivityGraph& m,
                     UpdateCounters& counters);
void add_type6_edges(const OracleState& state, const Decomposition& dec, ConnectivityGraph& m,
                     UpdateCounters& counters);

// Result of one update; independent of the shared OracleState.
struct UpdateState {
  Decomposition dec;
  ConnectivityGraph m;
  std::vector<std::int32_t> m_label;  // component label per M vertex
  UpdateCounters counters;
};

// Checks `req` against the instance the state was built from.
ValidatedUpdate validate_update(const OracleState& state, const UpdateRequest& req);

// Full update phase. The first form validates and throws InvalidRequest.
UpdateState apply_update(const OracleState& state, const UpdateRequest& req);
UpdateState apply_update(const OracleState& state, const ValidatedUpdate& update);

}  // namespace pvf
