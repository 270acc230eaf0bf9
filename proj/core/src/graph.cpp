#include "pvf/graph.hpp"

#include <algorithm>
#include <string>

#include "pvf/errors.hpp"

namespace pvf {

Graph::Graph(Vertex n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw InvalidRequest("negative vertex count");
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw InvalidRequest("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                           " has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (e.u == e.v) throw InvalidRequest("self-loop at vertex " + std::to_string(e.u));
    edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw InvalidRequest("duplicate edge " + std::to_string(dup->u) + "-" + std::to_string(dup->v));
  }

  offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (Vertex v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
  targets_.resize(static_cast<std::size_t>(offsets_[n]));
  std::vector<std::int64_t> fill(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted by (u, v), so u's list receives v in ascending order
  // and v's list receives u in ascending order as well.
  for (const Edge& e : edges_) targets_[fill[e.u]++] = e.v;
  for (const Edge& e : edges_) targets_[fill[e.v]++] = e.u;
  for (Vertex v = 0; v < n; ++v) {
    std::sort(targets_.begin() + offsets_[v], targets_.begin() + offsets_[v + 1]);
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

AugmentedGraph augment_with_hub(const Graph& g) {
  const Vertex n = g.num_vertices();
  std::vector<Edge> edges = g.edges();
  edges.reserve(edges.size() + static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, n});
  return AugmentedGraph{Graph(n + 1, edges), n};
}

namespace {

void require_sorted_set(const std::vector<Vertex>& s, Vertex limit, const char* what) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= limit) {
      throw InvalidRequest(std::string(what) + " contains out-of-range vertex " + std::to_string(s[i]));
    }
    if (i > 0 && s[i - 1] >= s[i]) {
      throw InvalidRequest(std::string(what) + " is not sorted and distinct");
    }
  }
}

std::vector<Vertex> sorted_distinct(std::vector<Vertex> s, const char* what) {
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw InvalidRequest(std::string(what) + " lists a vertex twice");
  }
  return s;
}

}  // namespace

void validate_instance(const Instance& inst) {
  const Vertex n = inst.graph.num_vertices();
  if (inst.d < 0 || inst.d > n) {
    throw InvalidRequest("failure bound d=" + std::to_string(inst.d) + " outside [0, n]");
  }
  if (inst.d == 0 && n > 0) throw InvalidRequest("failure bound d must be positive");
  require_sorted_set(inst.predicted, n, "predicted set");
  if (static_cast<std::int64_t>(inst.predicted.size()) > inst.d) {
    throw InvalidRequest("predicted set larger than d");
  }
}

ValidatedUpdate validate_update(const Instance& inst, const UpdateRequest& req) {
  return validate_update(inst.graph.num_vertices(), inst.d, inst.predicted, req);
}

ValidatedUpdate validate_update(Vertex n, std::int32_t d, std::span<const Vertex> predicted,
                                const UpdateRequest& req) {
  const Vertex hub = n;
  std::vector<Vertex> removed = sorted_distinct(req.removed, "removed set");
  std::vector<Vertex> restored = sorted_distinct(req.restored, "restored set");

  bool has_hub = !removed.empty() && removed.back() == hub;
  if (has_hub) removed.pop_back();

  for (Vertex v : restored) {
    if (v < 0 || v >= n) throw InvalidRequest("restored vertex " + std::to_string(v) + " out of range");
    if (!std::binary_search(predicted.begin(), predicted.end(), v)) {
      throw InvalidRequest("restored vertex " + std::to_string(v) + " is not in the predicted set");
    }
  }
  for (Vertex v : removed) {
    if (v < 0 || v >= n) throw InvalidRequest("removed vertex " + std::to_string(v) + " out of range");
    if (std::binary_search(predicted.begin(), predicted.end(), v)) {
      throw InvalidRequest("removed vertex " + std::to_string(v) + " is already in the predicted set");
    }
  }
  const std::int64_t failed = static_cast<std::int64_t>(predicted.size()) -
                              static_cast<std::int64_t>(restored.size()) +
                              static_cast<std::int64_t>(removed.size());
  if (failed > d) {
    throw InvalidRequest("update fails " + std::to_string(failed) + " vertices, more than d=" +
                         std::to_string(d));
  }

  ValidatedUpdate out;
  out.eta = static_cast<std::int64_t>(removed.size() + restored.size());
  removed.push_back(hub);
  out.request.removed = std::move(removed);
  out.request.restored = std::move(restored);
  return out;
}

}  // namespace pvf
