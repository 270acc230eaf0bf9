#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "pvf/errors.hpp"
#include "pvf/oracle_state.hpp"
#include "pvf/query.hpp"
#include "pvf/update.hpp"
#include "support.hpp"

namespace pvf {
namespace {

TEST(Preprocess, X1StructureCounts) {
  const OracleState s = preprocess(testing::x1_instance());
  EXPECT_EQ(s.tree().size(), 8);
  EXPECT_EQ(s.tree().vertex(0), s.hub());
  EXPECT_EQ(s.hub(), 9);
  EXPECT_EQ(s.low_columns(), 4);
  for (std::int32_t i = 1; i <= 4; ++i) EXPECT_EQ(s.by_low(i).children(0).size(), s.tree().children(0).size());
  EXPECT_EQ(s.num_predicted(), 2);
  EXPECT_EQ(s.predicted_index(3), 0);
  EXPECT_EQ(s.predicted_index(6), 1);
  EXPECT_EQ(s.predicted_index(4), -1);
}

TEST(Preprocess, EmptyPrediction) {
  const OracleState s = preprocess(testing::make_instance(4, {{0, 1}, {1, 2}, {2, 3}}, 2, {}));
  EXPECT_EQ(s.num_predicted(), 0);
  EXPECT_EQ(s.tree().size(), 5);
  const UpdateState up = apply_update(s, UpdateRequest{{1}, {}});
  QueryContext ctx(s, up);
  EXPECT_FALSE(ctx.connected(0, 2));
  EXPECT_TRUE(ctx.connected(2, 3));
}

TEST(Preprocess, RejectsInvalidInstance) {
  Instance inst = testing::x1_instance();
  inst.d = 1;
  EXPECT_THROW(preprocess(inst), InvalidRequest);
}

TEST(Preprocess, FullFailureBoundSpace) {
  Rng rng(40);
  const Vertex n = 24;
  const Instance inst = random_instance(n, 60, n, n / 2, rng);
  const OracleState s = preprocess(inst);
  const double m = static_cast<double>(s.graph().num_edges());
  const double bound = 8.0 * (n + 1) * m * std::log2(static_cast<double>(n) + 2);
  EXPECT_GT(s.space_words(), 0u);
  EXPECT_LE(static_cast<double>(s.space_words()), bound);
}

TEST(Preprocess, SpaceScalesWithDm) {
  Rng rng(41);
  const Instance small = random_instance(500, 2000, 4, 4, rng);
  const Instance large = random_instance(500, 2000, 16, 16, rng);
  const double a = static_cast<double>(preprocess(small).space_words());
  const double b = static_cast<double>(preprocess(large).space_words());
  // d grows 4x; the O(d^2) neighbor lists are dominated by the d m log n terms here.
  EXPECT_LT(b / a, 8.0);
  EXPECT_GT(b / a, 1.5);
}

TEST(NeighborInterval, Examples) {
  const std::vector<std::int32_t> list{2, 9, 14};
  EXPECT_TRUE(neighbor_interval_nonempty(list, 3, 9));
  EXPECT_FALSE(neighbor_interval_nonempty(list, 10, 13));
  EXPECT_FALSE(neighbor_interval_nonempty({}, 0, 100));
  EXPECT_TRUE(neighbor_interval_nonempty(list, 14, 14));
  EXPECT_FALSE(neighbor_interval_nonempty(list, 15, 20));
}

TEST(Preprocess, MarksAgreeWithNeighborLists) {
  Rng rng(42);
  for (int k = 0; k < 20; ++k) {
    const Instance inst = random_instance(40, 100, 5, 5, rng);
    const OracleState s = preprocess(inst);
    const DfsTree& t = s.tree();
    for (std::int32_t u = 0; u < s.num_predicted(); ++u) {
      const auto marks = compute_marks(t, s.graph(), s.predicted()[u]);
      for (Pos v = 0; v < t.size(); ++v) {
        EXPECT_EQ(marks[v] != 0, neighbor_interval_nonempty(s.neighbors(u), v, t.subtree_last(v)));
      }
      // Marked children form a suffix of each T_u child list.
      const Reordering& r = s.by_marks(u);
      for (Pos v = 0; v < t.size(); ++v) {
        bool seen_marked = false;
        for (Pos c : r.children(v)) {
          if (marks[c]) seen_marked = true;
          else EXPECT_FALSE(seen_marked);
        }
      }
    }
  }
}

TEST(Preprocess, RenumberedListsArePermutations) {
  Rng rng(43);
  for (int k = 0; k < 10; ++k) {
    const Instance inst = random_instance(50, 150, 6, 6, rng);
    const OracleState s = preprocess(inst);
    for (std::int32_t u = 0; u < s.num_predicted(); ++u) {
      for (std::int32_t v = 0; v < s.num_predicted(); ++v) {
        auto ren = s.neighbors_in(u, v);
        ASSERT_TRUE(std::is_sorted(ren.begin(), ren.end()));
        std::vector<Pos> back;
        for (std::int32_t x : ren) back.push_back(s.by_marks(u).position_of(x));
        std::sort(back.begin(), back.end());
        auto base = s.neighbors(v);
        EXPECT_EQ(back, std::vector<Pos>(base.begin(), base.end()));
      }
    }
  }
}

TEST(Preprocess, PredictedAdjacency) {
  Rng rng(44);
  for (int k = 0; k < 10; ++k) {
    const Instance inst = random_instance(30, 120, 8, 8, rng);
    const OracleState s = preprocess(inst);
    for (std::int32_t u = 0; u < s.num_predicted(); ++u) {
      std::vector<std::int32_t> expect;
      for (std::int32_t v = 0; v < s.num_predicted(); ++v) {
        if (inst.graph.has_edge(inst.predicted[u], inst.predicted[v])) expect.push_back(v);
      }
      auto got = s.predicted_adjacency(u);
      EXPECT_EQ(std::vector<std::int32_t>(got.begin(), got.end()), expect);
    }
  }
}

TEST(Serialization, RoundTripIsIdentical) {
  Rng rng(45);
  for (int k = 0; k < 10; ++k) {
    const auto sc = testing::random_scenario(rng, 60, 160, 6, 6);
    const OracleState s = preprocess(sc.inst);
    std::stringstream buf;
    s.save(buf);
    const OracleState back = OracleState::load(buf);
    EXPECT_TRUE(back == s);
    EXPECT_EQ(back.space_words(), s.space_words());

    const UpdateState a = apply_update(s, sc.req);
    const UpdateState b = apply_update(back, sc.req);
    QueryContext ca(s, a);
    QueryContext cb(back, b);
    for (Vertex x : survivors(sc.inst, sc.req)) {
      for (Vertex y : survivors(sc.inst, sc.req)) ASSERT_EQ(ca.connected(x, y), cb.connected(x, y));
    }
  }
}

TEST(Serialization, RejectsGarbage) {
  std::stringstream bad("NOTSTATE");
  EXPECT_THROW(OracleState::load(bad), FormatError);
  const OracleState s = preprocess(testing::x1_instance());
  std::stringstream buf;
  s.save(buf);
  std::string bytes = buf.str();
  bytes.resize(bytes.size() / 2);
  std::stringstream truncated(bytes);
  EXPECT_THROW(OracleState::load(truncated), FormatError);
}

}  // namespace
}  // namespace pvf
