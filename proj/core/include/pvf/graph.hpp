#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace pvf {

using Vertex = std::int32_t;
inline constexpr Vertex kNoVertex = -1;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph in compressed adjacency form. Vertices are 0..n-1.
// Construction rejects self-loops, duplicate edges and out-of-range ids, so a
// live Graph always has sorted, symmetric neighbor lists.
class Graph {
 public:
  Graph() = default;
  Graph(Vertex n, std::span<const Edge> edges);

  Vertex num_vertices() const noexcept { return n_; }
  std::int64_t num_edges() const noexcept { return static_cast<std::int64_t>(edges_.size()); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::int64_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  // Canonical edge list: u < v, sorted lexicographically.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Vertex n_ = 0;
  std::vector<std::int64_t> offsets_{0};
  std::vector<Vertex> targets_;
  std::vector<Edge> edges_;
};

// Everything known at preprocessing time: the graph, the failure bound d and
// the predicted failure set.
struct Instance {
  Graph graph;
  std::int32_t d = 1;
  std::vector<Vertex> predicted;  // sorted, distinct
};

// The actual failure set, expressed relative to the prediction:
// removed = D \ predicted, restored = predicted \ D.
struct UpdateRequest {
  std::vector<Vertex> removed;
  std::vector<Vertex> restored;

  friend bool operator==(const UpdateRequest&, const UpdateRequest&) = default;
};

// A request accepted against an instance. request.removed carries the hub id
// (n) in addition to the caller's removed vertices; eta excludes the hub.
struct ValidatedUpdate {
  UpdateRequest request;
  std::int64_t eta = 0;

  friend bool operator==(const ValidatedUpdate&, const ValidatedUpdate&) = default;
};

struct AugmentedGraph {
  Graph graph;      // n + 1 vertices
  Vertex hub = 0;   // == base vertex count

  Vertex base_vertices() const noexcept { return hub; }

  friend bool operator==(const AugmentedGraph&, const AugmentedGraph&) = default;
};

// Appends vertex n adjacent to every original vertex.
AugmentedGraph augment_with_hub(const Graph& g);

// Throws InvalidRequest unless 1 <= d <= n (d == 0 allowed only for n == 0),
// predicted is sorted, distinct, within range, and |predicted| <= d.
void validate_instance(const Instance& inst);

// Checks the update invariants and returns the request normalized: both sets
// sorted, hub appended to removed. Accepts its own output unchanged.
ValidatedUpdate validate_update(const Instance& inst, const UpdateRequest& req);
ValidatedUpdate validate_update(Vertex n, std::int32_t d, std::span<const Vertex> predicted,
                                const UpdateRequest& req);

}  // namespace pvf
