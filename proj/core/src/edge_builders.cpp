// Edge builders for the connectivity graph, one per edge type.
//
// Every builder reuses two facts about T \ failed:
//  * a back-edge leaving a component C lands in an ancestor component, and
//    for the component C' reached through boundary vertex b it lands in the
//    path interval [r_C', p_T(b)];
//  * walking parent_F from a failed vertex f and keeping only boundary
//    vertices (Decomposition::chains) visits every internal component on the
//    root path of f exactly once.
// Both hold under any numbering that shares T's ancestor relation.

#include <algorithm>

#include "pvf/update.hpp"

namespace pvf {

std::vector<Slice> make_slices(const OracleState& state, const Decomposition& dec, const Reordering& order,
                               std::int32_t failed_index, std::int32_t begin, std::int32_t end) {
  std::vector<Slice> out;
  if (begin >= end) return out;
  const DfsTree& t = state.tree();
  const Pos f = dec.forest.failed[failed_index];
  auto kids = order.children(f);

  std::vector<std::int32_t> cuts;
  for (Pos c : dec.blocked_children[failed_index]) {
    std::int32_t r = order.sibling_rank(c);
    if (r >= begin && r < end) cuts.push_back(r);
  }
  std::sort(cuts.begin(), cuts.end());

  auto emit = [&](std::int32_t a, std::int32_t b) {
    Slice s;
    s.first = kids[a];
    s.last = kids[b];
    s.lo = order.number(s.first);
    s.hi = order.number(s.last) + t.subtree_size(s.last) - 1;
    out.push_back(s);
  };
  std::int32_t start = begin;
  for (std::int32_t cut : cuts) {
    if (cut > start) emit(start, cut - 1);
    start = cut + 1;
  }
  if (start < end) emit(start, end - 1);
  return out;
}

std::vector<Slice> marked_slices(const OracleState& state, const Decomposition& dec, std::int32_t u,
                                 std::int32_t failed_index, UpdateCounters& counters) {
  const DfsTree& t = state.tree();
  const Reordering& order = state.by_marks(u);
  const Pos f = dec.forest.failed[failed_index];
  const std::int32_t degree = t.num_children(f);
  if (degree == 0) return {};

  // Marked children of f form the tail of its T_u child list, so the first
  // neighbor of u after f in T_u order sits in the first marked child.
  auto own = state.neighbors_in(u, u);
  const Pos lo = order.number(f) + 1;
  const Pos hi = order.number(f) + t.subtree_size(f) - 1;
  ++counters.bin_searches;
  auto it = std::lower_bound(own.begin(), own.end(), lo);
  if (it == own.end() || *it > hi) return {};
  ++counters.la_probes;
  const Pos first_marked = state.level_ancestor().ancestor_at_depth(order.position_of(*it), t.depth(f) + 1);
  return make_slices(state, dec, order, failed_index, order.sibling_rank(first_marked), degree);
}

void add_type1_edges(const OracleState& state, const Decomposition& dec, ConnectivityGraph& m,
                     UpdateCounters& counters) {
  const DfsTree& t = state.tree();
  const RangeEmptiness2D& ranges = state.base_ranges();
  for (std::int32_t c = 0; c < static_cast<std::int32_t>(dec.internal.size()); ++c) {
    const ComponentInfo& low_side = dec.internal[c];
    const Pos p = t.parent(low_side.root);
    if (p == kNoPos) continue;
    ++counters.bin_searches;
    const std::int32_t above = dec.forest.index_of(p);
    for (const ChainLink& link : dec.chains[above]) {
      const Pos ylo = dec.internal[link.component].root;
      const Pos yhi = t.parent(link.boundary);
      for (const Segment& seg : low_side.segments) {
        ++counters.q2d_base;
        if (ranges.any(seg.lo, seg.hi, ylo, yhi)) {
          m.add_edge(dec.m_vertex_of_component(c), dec.m_vertex_of_component(link.component), 1);
          break;
        }
      }
    }
  }
}

// For every hanging child c of a failed f, let C' be the component of the
// first surviving low_i(c). Children of f sorted by low_i put all c whose
// low_i falls in C''s path interval into one run; any back-edge from that
// run into another component C'' on f's root path joins C' and C''.
void add_type2_edges(const OracleState& state, const Decomposition& dec, ConnectivityGraph& m,
                     UpdateCounters& counters) {
  const DfsTree& t = state.tree();
  const LowTable& lows = state.lows();
  const std::int32_t columns = dec.low_scan_limit(state.low_columns());
  for (std::int32_t k = 0; k < dec.forest.size(); ++k) {
    const auto& chain = dec.chains[k];
    const Pos f = dec.forest.failed[k];
    if (chain.size() < 2 || t.num_children(f) == 0) continue;
    for (std::int32_t i = 1; i <= columns; ++i) {
      const Reordering& order = state.by_low(i);
      const RangeEmptiness2D& ranges = state.by_low_ranges(i);
      auto kids = order.children(f);
      for (const ChainLink& target : chain) {
        const Pos lo = dec.internal[target.component].root;
        const Pos hi = t.parent(target.boundary);
        counters.bin_searches += 2;
        auto first = std::lower_bound(kids.begin(), kids.end(), lo,
                                      [&](Pos c, Pos key) { return low_key(lows, c, i) < key; });
        auto last = std::upper_bound(first, kids.end(), hi,
                                     [&](Pos key, Pos c) { return key < low_key(lows, c, i); });
        if (first == last) continue;
        const auto slices = make_slices(state, dec, order, k, static_cast<std::int32_t>(first - kids.begin()),
                                        static_cast<std::int32_t>(last - kids.begin()));
        const std::int32_t a = dec.m_vertex_of_component(target.component);
        for (const ChainLink& other : chain) {
          if (other.component == target.component) continue;
          const std::int32_t b = dec.m_vertex_of_component(other.component);
          if (m.has_edge(a, b, 2)) continue;
          const Pos ylo = order.number(dec.internal[other.component].root);
          const Pos yhi = order.number(t.parent(other.boundary));
          for (const Slice& s : slices) {
            ++counters.q2d_ti;
            if (ranges.any(s.lo, s.hi, ylo, yhi)) {
              m.add_edge(a, b, 2);
              break;
            }
          }
        }
      }
    }
  }
}

void add_type3_edges(const OracleState& state, const Decomposition& dec, ConnectivityGraph& m,
                     UpdateCounters& counters) {
  const std::int32_t r = dec.num_restored();
  for (std::int32_t a = 0; a < r; ++a) {
    auto adj = state.predicted_adjacency(dec.restored[a]);
    for (std::int32_t b = a + 1; b < r; ++b) {
      ++counters.bin_searches;
      if (std::binary_search(adj.begin(), adj.end(), dec.restored[b])) {
        m.add_edge(dec.m_vertex_of_restored(a), dec.m_vertex_of_restored(b), 3);
      }
    }
  }
}

void add_type4_edges(const OracleState& state, const Decomposition& dec, ConnectivityGraph& m,
                     UpdateCounters& counters) {
  for (std::int32_t a = 0; a < dec.num_restored(); ++a) {
    auto nb = state.neighbors(dec.restored[a]);
    for (std::int32_t c = 0; c < static_cast<std::int32_t>(dec.internal.size()); ++c) {
      for (const Segment& seg : dec.internal[c].segments) {
        ++counters.bin_searches;
        if (neighbor_interval_nonempty(nb, seg.lo, seg.hi)) {
          m.add_edge(dec.m_vertex_of_component(c), dec.m_vertex_of_restored(a), 4);
          break;
        }
      }
    }
  }
}

void add_type5_edges(const OracleState& state, const Decomposition& dec, ConnectivityGraph& m,
                     UpdateCounters& counters) {
  const std::int32_t r = dec.num_restored();
  if (r < 2) return;
  for (std::int32_t a = 0; a < r; ++a) {
    const std::int32_t u = dec.restored[a];
    std::vector<Slice> slices;
    for (std::int32_t k = 0; k < dec.forest.size(); ++k) {
      auto part = marked_slices(state, dec, u, k, counters);
      slices.insert(slices.end(), part.begin(), part.end());
    }
    if (slices.empty()) continue;
    for (std::int32_t b = 0; b < r; ++b) {
      if (b == a || m.has_edge(dec.m_vertex_of_restored(a), dec.m_vertex_of_restored(b), 5)) continue;
      auto nb = state.neighbors_in(u, dec.restored[b]);
      for (const Slice& s : slices) {
        ++counters.bin_searches;
        if (neighbor_interval_nonempty(nb, s.lo, s.hi)) {
          m.add_edge(dec.m_vertex_of_restored(a), dec.m_vertex_of_restored(b), 5);
          break;
        }
      }
    }
  }
}

void add_type6_edges(const OracleState& state, const Decomposition& dec, ConnectivityGraph& m,
                     UpdateCounters& counters) {
  const DfsTree& t = state.tree();
  for (std::int32_t a = 0; a < dec.num_restored(); ++a) {
    const std::int32_t u = dec.restored[a];
    const Reordering& order = state.by_marks(u);
    const RangeEmptiness2D& ranges = state.by_marks_ranges(u);
    for (std::int32_t k = 0; k < dec.forest.size(); ++k) {
      if (dec.chains[k].empty()) continue;
      const auto slices = marked_slices(state, dec, u, k, counters);
      if (slices.empty()) continue;
      for (const ChainLink& link : dec.chains[k]) {
        const std::int32_t c = dec.m_vertex_of_component(link.component);
        if (m.has_edge(c, dec.m_vertex_of_restored(a), 6)) continue;
        const Pos ylo = order.number(dec.internal[link.component].root);
        const Pos yhi = order.number(t.parent(link.boundary));
        for (const Slice& s : slices) {
          ++counters.q2d_tu;
          if (ranges.any(s.lo, s.hi, ylo, yhi)) {
            m.add_edge(c, dec.m_vertex_of_restored(a), 6);
            break;
          }
        }
      }
    }
  }
}

}  // namespace pvf
