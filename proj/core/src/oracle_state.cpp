#include "pvf/oracle_state.hpp"

#include <algorithm>

namespace pvf {

ListFamily::ListFamily(const std::vector<std::vector<std::int32_t>>& lists) {
  begin_.reserve(lists.size() + 1);
  begin_.push_back(0);
  std::size_t total = 0;
  for (const auto& l : lists) total += l.size();
  data_.reserve(total);
  for (const auto& l : lists) {
    data_.insert(data_.end(), l.begin(), l.end());
    begin_.push_back(static_cast<std::int64_t>(data_.size()));
  }
}

bool neighbor_interval_nonempty(std::span<const std::int32_t> list, std::int32_t lo, std::int32_t hi) {
  auto it = std::lower_bound(list.begin(), list.end(), lo);
  return it != list.end() && *it <= hi;
}

std::vector<Point2> renumbered_back_edges(const std::vector<BackEdge>& edges, const Reordering* order) {
  std::vector<Point2> points;
  points.reserve(edges.size());
  for (const BackEdge& e : edges) {
    if (order == nullptr) {
      points.push_back({e.lower, e.upper});
    } else {
      points.push_back({order->number(e.lower), order->number(e.upper)});
    }
  }
  return points;
}

std::size_t OracleState::count_space() const {
  std::size_t words = tree_.space_words() + la_.space_words() + base_2d_.space_words() +
                      lows_.space_words() + neighbors_.space_words() + neighbors_u_.space_words() +
                      pred_adj_.space_words() + pred_index_.size() + predicted_.size();
  for (const auto& r : by_low_) words += r.space_words();
  for (const auto& s : by_low_2d_) words += s.space_words();
  for (const auto& r : by_marks_) words += r.space_words();
  for (const auto& s : by_marks_2d_) words += s.space_words();
  return words;
}

OracleState preprocess(const Instance& inst) {
  validate_instance(inst);
  OracleState s;
  s.aug_ = augment_with_hub(inst.graph);
  s.d_ = inst.d;
  s.predicted_ = inst.predicted;
  const Vertex hub = s.aug_.hub;
  const Graph& g = s.aug_.graph;

  s.pred_index_.assign(static_cast<std::size_t>(g.num_vertices()), -1);
  for (std::size_t i = 0; i < s.predicted_.size(); ++i) s.pred_index_[s.predicted_[i]] = static_cast<std::int32_t>(i);

  s.tree_ = DfsTree::build(g, s.predicted_, hub);
  s.la_ = LevelAncestorIndex(s.tree_);

  // Hub edges never carry connectivity (the hub always fails), so they are
  // left out of every back-edge set and low list.
  const std::vector<BackEdge> edges = back_edges(s.tree_, g, hub);
  s.base_2d_ = RangeEmptiness2D(renumbered_back_edges(edges, nullptr));

  const std::int32_t columns = inst.d + 1;
  s.lows_ = LowTable::build(s.tree_, g, columns, hub);
  s.by_low_.reserve(static_cast<std::size_t>(columns));
  s.by_low_2d_.reserve(static_cast<std::size_t>(columns));
  for (std::int32_t i = 1; i <= columns; ++i) {
    s.by_low_.push_back(reorder_by_low(s.tree_, s.lows_, i));
    s.by_low_2d_.emplace_back(renumbered_back_edges(edges, &s.by_low_.back()));
  }

  const std::size_t k = s.predicted_.size();
  s.by_marks_.reserve(k);
  s.by_marks_2d_.reserve(k);
  for (std::size_t u = 0; u < k; ++u) {
    std::vector<std::uint8_t> marks = compute_marks(s.tree_, g, s.predicted_[u]);
    s.by_marks_.push_back(reorder_by_marks(s.tree_, marks));
    s.by_marks_2d_.emplace_back(renumbered_back_edges(edges, &s.by_marks_.back()));
  }

  std::vector<std::vector<std::int32_t>> base_lists(k);
  std::vector<std::vector<std::int32_t>> adj_lists(k);
  for (std::size_t v = 0; v < k; ++v) {
    for (Vertex y : g.neighbors(s.predicted_[v])) {
      Pos w = s.tree_.position(y);
      if (w != kNoPos) {
        base_lists[v].push_back(w);
      } else if (s.pred_index_[y] >= 0) {
        adj_lists[v].push_back(s.pred_index_[y]);
      }
    }
    std::sort(base_lists[v].begin(), base_lists[v].end());
    std::sort(adj_lists[v].begin(), adj_lists[v].end());
  }
  std::vector<std::vector<std::int32_t>> renumbered(k * k);
  for (std::size_t u = 0; u < k; ++u) {
    for (std::size_t v = 0; v < k; ++v) {
      auto& list = renumbered[u * k + v];
      list.reserve(base_lists[v].size());
      for (Pos w : base_lists[v]) list.push_back(s.by_marks_[u].number(w));
      std::sort(list.begin(), list.end());
    }
  }
  s.neighbors_ = ListFamily(base_lists);
  s.neighbors_u_ = ListFamily(renumbered);
  s.pred_adj_ = ListFamily(adj_lists);
  s.space_words_ = s.count_space();
  return s;
}

}  // namespace pvf
