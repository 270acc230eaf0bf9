#include "pvf/reference.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "pvf/errors.hpp"

namespace pvf::reference {
namespace {

std::vector<bool> failed_mask(const Graph& g, std::span<const Vertex> failed) {
  std::vector<bool> mask(static_cast<std::size_t>(g.num_vertices()), false);
  for (Vertex v : failed) {
    if (v >= 0 && v < g.num_vertices()) mask[v] = true;
  }
  return mask;
}

bool proper_ancestor(const DfsTree& t, Pos a, Pos v) {
  for (Pos x = t.parent(v); x != kNoPos; x = t.parent(x)) {
    if (x == a) return true;
  }
  return false;
}

}  // namespace

bool bfs_connected(const Graph& g, std::span<const Vertex> failed, Vertex s, Vertex t) {
  const std::vector<bool> dead = failed_mask(g, failed);
  for (Vertex x : {s, t}) {
    if (x < 0 || x >= g.num_vertices()) throw InvalidRequest("vertex " + std::to_string(x) + " out of range");
    if (dead[x]) throw InvalidRequest("vertex " + std::to_string(x) + " is failed");
  }
  std::vector<bool> seen(dead.size(), false);
  std::deque<Vertex> queue{s};
  seen[s] = true;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    if (x == t) return true;
    for (Vertex y : g.neighbors(x)) {
      if (!dead[y] && !seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  return false;
}

std::vector<Vertex> bfs_components(const Graph& g, std::span<const Vertex> failed) {
  const std::vector<bool> dead = failed_mask(g, failed);
  std::vector<Vertex> label(dead.size(), -1);
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (dead[s] || label[s] >= 0) continue;
    std::deque<Vertex> queue{s};
    label[s] = s;
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g.neighbors(x)) {
        if (!dead[y] && label[y] < 0) {
          label[y] = s;
          queue.push_back(y);
        }
      }
    }
  }
  return label;
}

std::vector<Pos> brute_low(const Graph& g, const DfsTree& t, Pos v, Vertex ignore) {
  std::set<Pos> targets;
  for (Pos x = 0; x < t.size(); ++x) {
    if (x != v && !proper_ancestor(t, v, x)) continue;
    const Vertex vx = t.vertex(x);
    if (vx == ignore) continue;
    for (Vertex w : g.neighbors(vx)) {
      if (w == ignore) continue;
      const Pos y = t.position(w);
      if (y == kNoPos || y == t.parent(x) || t.parent(y) == x) continue;
      if (proper_ancestor(t, y, v)) targets.insert(y);
    }
  }
  std::vector<Pos> out(targets.begin(), targets.end());
  std::sort(out.begin(), out.end(), [&](Pos a, Pos b) { return t.depth(a) < t.depth(b); });
  return out;
}

TreeComponents brute_components(const DfsTree& t, std::span<const Pos> failed) {
  const Pos n = t.size();
  std::vector<bool> dead(static_cast<std::size_t>(n), false);
  for (Pos f : failed) dead[f] = true;

  TreeComponents out;
  out.label.assign(static_cast<std::size_t>(n), -1);
  // Preorder visits every parent before its children.
  for (Pos x = 0; x < n; ++x) {
    if (dead[x]) continue;
    const Pos p = t.parent(x);
    if (p != kNoPos && !dead[p]) {
      out.label[x] = out.label[p];
    } else {
      out.label[x] = out.count();
      out.root.push_back(x);
    }
  }
  out.internal.assign(out.root.size(), false);
  out.boundary.assign(out.root.size(), {});
  for (Pos f : failed) {
    for (Pos a = t.parent(f); a != kNoPos; a = t.parent(a)) {
      if (!dead[a]) out.internal[out.label[a]] = true;
    }
  }
  for (Pos f = 0; f < n; ++f) {
    if (!dead[f]) continue;
    const Pos p = t.parent(f);
    if (p != kNoPos && !dead[p]) out.boundary[out.label[p]].push_back(f);
  }
  return out;
}

std::vector<HangingContacts> hanging_contacts(const Graph& g, const DfsTree& t, const TreeComponents& comps,
                                              std::span<const Vertex> restored, Vertex ignore) {
  std::vector<std::set<std::int32_t>> comp_sets(comps.root.size());
  std::vector<std::set<Vertex>> restored_sets(comps.root.size());
  std::vector<bool> is_restored(static_cast<std::size_t>(g.num_vertices()), false);
  for (Vertex r : restored) is_restored[r] = true;

  for (Pos x = 0; x < t.size(); ++x) {
    const std::int32_t h = comps.label[x];
    if (h < 0 || comps.internal[h]) continue;
    const Vertex vx = t.vertex(x);
    if (vx == ignore) continue;
    for (Vertex w : g.neighbors(vx)) {
      if (w == ignore) continue;
      if (is_restored[w]) {
        restored_sets[h].insert(w);
        continue;
      }
      const Pos y = t.position(w);
      if (y == kNoPos) continue;
      const std::int32_t c = comps.label[y];
      if (c >= 0 && comps.internal[c]) comp_sets[h].insert(c);
    }
  }
  std::vector<HangingContacts> out;
  for (std::int32_t h = 0; h < comps.count(); ++h) {
    if (comps.internal[h]) continue;
    out.push_back({h, {comp_sets[h].begin(), comp_sets[h].end()}, {restored_sets[h].begin(), restored_sets[h].end()}});
  }
  return out;
}

}  // namespace pvf::reference
