#include <algorithm>
#include <string>

#include "pvf/errors.hpp"
#include "pvf/update.hpp"

namespace pvf {

namespace {

std::vector<Segment> segments_of(const DfsTree& t, Pos root, const std::vector<Pos>& boundary) {
  std::vector<Segment> out;
  Pos lo = root;
  for (Pos f : boundary) {
    if (f - 1 >= lo) out.push_back({lo, f - 1});
    lo = f + t.subtree_size(f);
  }
  if (t.subtree_last(root) >= lo) out.push_back({lo, t.subtree_last(root)});
  return out;
}

}  // namespace

std::int32_t FailedForest::index_of(Pos p) const {
  auto it = std::lower_bound(failed.begin(), failed.end(), p);
  if (it == failed.end() || *it != p) return -1;
  return static_cast<std::int32_t>(it - failed.begin());
}

FailedForest build_failed_forest(const DfsTree& t, std::span<const Pos> removed, UpdateCounters& counters) {
  FailedForest forest;
  forest.failed.assign(removed.begin(), removed.end());
  std::sort(forest.failed.begin(), forest.failed.end());
  forest.failed.erase(std::unique(forest.failed.begin(), forest.failed.end()), forest.failed.end());
  const std::int32_t k = forest.size();
  forest.parent.assign(static_cast<std::size_t>(k), -1);
  forest.children.assign(static_cast<std::size_t>(k), {});
  for (std::int32_t j = 0; j < k; ++j) {
    // Ancestors precede j in preorder; the last one found is the deepest.
    for (std::int32_t i = 0; i < j; ++i) {
      ++counters.ancestor_tests;
      if (t.is_ancestor(forest.failed[i], forest.failed[j])) forest.parent[j] = i;
    }
    if (forest.parent[j] >= 0) forest.children[forest.parent[j]].push_back(j);
  }
  return forest;
}

Pos locate_component_root(const DfsTree& t, const LevelAncestorIndex& la, const FailedForest& forest, Pos v,
                          UpdateCounters& counters) {
  if (forest.contains(v)) throw InvalidRequest("position " + std::to_string(v) + " is failed");
  std::int32_t deepest = -1;
  for (std::int32_t i = 0; i < forest.size() && forest.failed[i] < v; ++i) {
    ++counters.ancestor_tests;
    if (t.is_ancestor(forest.failed[i], v)) deepest = i;
  }
  if (deepest < 0) return t.root();
  ++counters.la_probes;
  return la.ancestor_at_depth(v, t.depth(forest.failed[deepest]) + 1);
}

ComponentInfo classify_component(const DfsTree& t, const FailedForest& forest, Pos root,
                                 UpdateCounters& counters) {
  ComponentInfo info;
  info.root = root;
  const Pos last = t.subtree_last(root);
  ++counters.bin_searches;
  auto it = std::lower_bound(forest.failed.begin(), forest.failed.end(), root);
  if (it == forest.failed.end() || *it > last) {
    info.kind = ComponentKind::kHanging;
    info.segments.push_back({root, last});
    return info;
  }
  info.kind = ComponentKind::kInternal;
  for (; it != forest.failed.end() && *it <= last; ++it) {
    const Pos f = *it;
    const std::int32_t i = static_cast<std::int32_t>(it - forest.failed.begin());
    const Pos pf = forest.parent_pos(i);
    // p_T(f) survives and the nearest failed ancestor of f lies above root.
    if (pf != t.parent(f) && (pf == kNoPos || pf < root)) info.boundary.push_back(f);
  }
  info.segments = segments_of(t, root, info.boundary);
  return info;
}

Decomposition decompose(const OracleState& state, const ValidatedUpdate& update, UpdateCounters& counters) {
  const DfsTree& t = state.tree();
  const LevelAncestorIndex& la = state.level_ancestor();
  Decomposition dec;
  dec.eta = update.eta;

  std::vector<Pos> removed;
  removed.reserve(update.request.removed.size());
  for (Vertex x : update.request.removed) {
    Pos p = t.position(x);
    if (p == kNoPos) throw InvalidRequest("removed vertex " + std::to_string(x) + " is not in the tree");
    removed.push_back(p);
    if (x != state.hub()) ++dec.removed_count;
  }
  dec.forest = build_failed_forest(t, removed, counters);
  const FailedForest& forest = dec.forest;
  const std::int32_t k = forest.size();

  dec.boundary_of.assign(static_cast<std::size_t>(k), -1);
  for (std::int32_t i = 0; i < k; ++i) {
    const Pos f = forest.failed[i];
    const Pos p = t.parent(f);
    if (p == kNoPos || forest.parent_pos(i) == p) continue;
    const Pos pf = forest.parent_pos(i);
    Pos root = t.root();
    if (pf != kNoPos) {
      ++counters.la_probes;
      root = la.ancestor_at_depth(p, t.depth(pf) + 1);
    }
    auto [it, inserted] = dec.internal_index.try_emplace(root, static_cast<std::int32_t>(dec.internal.size()));
    if (inserted) {
      ComponentInfo info;
      info.root = root;
      info.kind = ComponentKind::kInternal;
      dec.internal.push_back(std::move(info));
    }
    // forest.failed is ascending, so boundary lists come out sorted.
    dec.internal[it->second].boundary.push_back(f);
    dec.boundary_of[i] = it->second;
  }
  for (ComponentInfo& c : dec.internal) c.segments = segments_of(t, c.root, c.boundary);

  dec.chains.assign(static_cast<std::size_t>(k), {});
  for (std::int32_t i = 0; i < k; ++i) {
    for (std::int32_t j = i; j >= 0; j = forest.parent[j]) {
      if (dec.boundary_of[j] >= 0) dec.chains[i].push_back({dec.boundary_of[j], forest.failed[j]});
    }
  }

  dec.blocked_children.assign(static_cast<std::size_t>(k), {});
  for (std::int32_t i = 0; i < k; ++i) {
    const Pos p = t.parent(forest.failed[i]);
    if (p != kNoPos && forest.parent_pos(i) == p) dec.blocked_children[forest.parent[i]].push_back(forest.failed[i]);
  }
  for (const ComponentInfo& c : dec.internal) {
    const Pos p = t.parent(c.root);
    if (p == kNoPos) continue;
    ++counters.bin_searches;
    dec.blocked_children[forest.index_of(p)].push_back(c.root);
  }

  dec.restored.reserve(update.request.restored.size());
  for (Vertex x : update.request.restored) {
    std::int32_t idx = state.predicted_index(x);
    if (idx < 0) throw InvalidRequest("restored vertex " + std::to_string(x) + " is not predicted");
    dec.restored.push_back(idx);
  }
  std::sort(dec.restored.begin(), dec.restored.end());
  return dec;
}

ConnectivityGraph::ConnectivityGraph(std::int32_t vertices)
    : parent_(static_cast<std::size_t>(vertices)), size_(static_cast<std::size_t>(vertices), 1) {
  for (std::int32_t v = 0; v < vertices; ++v) parent_[v] = v;
}

std::uint64_t ConnectivityGraph::key(std::int32_t a, std::int32_t b, std::int32_t type) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 35) ^
         (static_cast<std::uint64_t>(static_cast<std::uint32_t>(b)) << 3) ^ static_cast<std::uint64_t>(type);
}

void ConnectivityGraph::add_edge(std::int32_t a, std::int32_t b, std::int32_t type) {
  if (a == b) return;
  auto [it, inserted] = edge_keys_.try_emplace(key(a, b, type), static_cast<std::int32_t>(edges_.size()));
  if (!inserted) return;
  edges_.push_back({std::min(a, b), std::max(a, b), type});
  std::int32_t ra = find(a);
  std::int32_t rb = find(b);
  if (ra == rb) return;
  if (size_[ra] < size_[rb]) std::swap(ra, rb);
  parent_[rb] = ra;
  size_[ra] += size_[rb];
}

bool ConnectivityGraph::has_edge(std::int32_t a, std::int32_t b, std::int32_t type) const {
  return edge_keys_.count(key(a, b, type)) > 0;
}

std::vector<MEdge> ConnectivityGraph::edges_of_type(std::int32_t type) const {
  std::vector<MEdge> out;
  for (const MEdge& e : edges_) {
    if (e.type == type) out.push_back(e);
  }
  return out;
}

std::int32_t ConnectivityGraph::find(std::int32_t a) const {
  std::int32_t root = a;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[a] != root) {
    std::int32_t next = parent_[a];
    parent_[a] = root;
    a = next;
  }
  return root;
}

}  // namespace pvf
