#include "pvf/query.hpp"

#include <algorithm>
#include <string>

#include "pvf/errors.hpp"

namespace pvf {

bool QueryContext::is_failed(Pos p) {
  ++counters_.bin_searches;
  return update_->dec.forest.contains(p);
}

std::int32_t QueryContext::internal_m_vertex(Pos root) const {
  auto it = update_->dec.internal_index.find(root);
  return it == update_->dec.internal_index.end() ? -1 : update_->dec.m_vertex_of_component(it->second);
}

Representative QueryContext::find_representative(Vertex u) {
  const OracleState& state = *state_;
  const Decomposition& dec = update_->dec;
  if (u < 0 || u >= state.base_vertices()) {
    throw InvalidRequest(u == state.hub() ? "the hub vertex cannot be queried"
                                          : "query vertex " + std::to_string(u) + " out of range");
  }

  if (std::int32_t p = state.predicted_index(u); p >= 0) {
    ++counters_.bin_searches;
    auto it = std::lower_bound(dec.restored.begin(), dec.restored.end(), p);
    if (it == dec.restored.end() || *it != p) {
      throw InvalidRequest("query vertex " + std::to_string(u) + " is failed");
    }
    return {Representative::Kind::kMVertex,
            dec.m_vertex_of_restored(static_cast<std::int32_t>(it - dec.restored.begin()))};
  }

  const DfsTree& t = state.tree();
  const Pos pos = t.position(u);
  if (is_failed(pos)) throw InvalidRequest("query vertex " + std::to_string(u) + " is failed");

  UpdateCounters scratch;
  const Pos root = locate_component_root(t, state.level_ancestor(), dec.forest, pos, scratch);
  counters_.ancestor_tests += scratch.ancestor_tests;
  counters_.la_probes += scratch.la_probes;
  if (std::int32_t mv = internal_m_vertex(root); mv >= 0) return {Representative::Kind::kMVertex, mv};

  // Hanging subtree: the first surviving low point names an internal
  // component adjacent to it through a back-edge.
  const std::int32_t scan = dec.low_scan_limit(state.low_columns());
  for (std::int32_t i = 1; i <= scan; ++i) {
    ++counters_.low_probes;
    const Pos w = state.lows().low(root, i);
    if (w == kNoPos) break;
    if (is_failed(w)) continue;
    scratch = {};
    const Pos host = locate_component_root(t, state.level_ancestor(), dec.forest, w, scratch);
    counters_.ancestor_tests += scratch.ancestor_tests;
    counters_.la_probes += scratch.la_probes;
    return {Representative::Kind::kMVertex, internal_m_vertex(host)};
  }

  const Pos last = t.subtree_last(root);
  for (std::int32_t a = 0; a < dec.num_restored(); ++a) {
    ++counters_.restored_scans;
    ++counters_.bin_searches;
    if (neighbor_interval_nonempty(state.neighbors(dec.restored[a]), root, last)) {
      return {Representative::Kind::kMVertex, dec.m_vertex_of_restored(a)};
    }
  }
  return {Representative::Kind::kIsolatedHanging, root};
}

bool QueryContext::connected(Vertex s, Vertex t) {
  const Representative rs = find_representative(s);
  const Representative rt = find_representative(t);
  if (rs.kind == Representative::Kind::kMVertex && rt.kind == Representative::Kind::kMVertex) {
    return update_->m_label[rs.id] == update_->m_label[rt.id];
  }
  return rs == rt;
}

}  // namespace pvf
