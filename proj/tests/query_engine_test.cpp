#include <gtest/gtest.h>

#include "pvf/errors.hpp"
#include "pvf/query.hpp"
#include "pvf/reference.hpp"
#include "pvf/update.hpp"
#include "support.hpp"

namespace pvf {
namespace {

using testing::failure_set;
using testing::random_scenario;
using testing::x1_instance;

bool oracle_connected(const Instance& inst, const UpdateRequest& req, Vertex s, Vertex t) {
  const OracleState state = preprocess(inst);
  const UpdateState up = apply_update(state, req);
  QueryContext ctx(state, up);
  return ctx.connected(s, t);
}

TEST(QueryEngine, X1RemovedTwo) {
  const Instance inst = x1_instance();
  const UpdateRequest req{{2}, {}};
  EXPECT_FALSE(oracle_connected(inst, req, 0, 4));
  EXPECT_TRUE(oracle_connected(inst, req, 5, 7));
  EXPECT_EQ(reference::bfs_connected(inst.graph, failure_set(inst, req), 0, 4), false);
  EXPECT_EQ(reference::bfs_connected(inst.graph, failure_set(inst, req), 5, 7), true);
}

TEST(QueryEngine, X1RestoredSix) {
  const Instance inst = x1_instance();
  const UpdateRequest req{{5}, {6}};
  EXPECT_TRUE(oracle_connected(inst, req, 4, 6));
  EXPECT_TRUE(reference::bfs_connected(inst.graph, failure_set(inst, req), 4, 6));
}

TEST(QueryEngine, Reflexive) {
  const Instance inst = x1_instance();
  const OracleState state = preprocess(inst);
  const UpdateState up = apply_update(state, UpdateRequest{{2}, {3}});
  QueryContext ctx(state, up);
  for (Vertex v : {0, 1, 3, 4, 5, 7, 8}) EXPECT_TRUE(ctx.connected(v, v)) << v;
}

TEST(QueryEngine, RejectsFailedAndHub) {
  const Instance inst = x1_instance();
  const OracleState state = preprocess(inst);
  const UpdateState up = apply_update(state, UpdateRequest{{2}, {6}});
  QueryContext ctx(state, up);
  EXPECT_THROW(ctx.connected(2, 0), InvalidRequest);
  EXPECT_THROW(ctx.connected(0, 3), InvalidRequest);
  EXPECT_THROW(ctx.find_representative(9), InvalidRequest);
  EXPECT_NO_THROW(ctx.find_representative(6));
}

TEST(QueryEngine, RestoredIsItsOwnRepresentative) {
  const Instance inst = x1_instance();
  const OracleState state = preprocess(inst);
  const UpdateState up = apply_update(state, UpdateRequest{{}, {3, 6}});
  QueryContext ctx(state, up);
  const Representative r3 = ctx.find_representative(3);
  const Representative r6 = ctx.find_representative(6);
  EXPECT_EQ(r3.kind, Representative::Kind::kMVertex);
  EXPECT_EQ(r6.kind, Representative::Kind::kMVertex);
  EXPECT_NE(r3.id, r6.id);
}

TEST(QueryEngine, IsolatedHangingSubtreeReturnsItsRoot) {
  // Vertex 2 hangs below failed 1 with no other contacts.
  const Instance inst = testing::make_instance(4, {{0, 1}, {1, 2}, {0, 3}}, 1, {1});
  const OracleState state = preprocess(inst);
  const UpdateState up = apply_update(state, UpdateRequest{});
  QueryContext ctx(state, up);
  const Representative r = ctx.find_representative(2);
  EXPECT_EQ(r.kind, Representative::Kind::kIsolatedHanging);
  EXPECT_EQ(state.tree().vertex(r.id), 2);
  EXPECT_FALSE(ctx.connected(2, 0));
  EXPECT_TRUE(ctx.connected(0, 3));
}

TEST(QueryEngine, InternalComponentMembersShareRepresentative) {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const auto sc = random_scenario(rng, 40, 90, 6, 6);
    const OracleState state = preprocess(sc.inst);
    const UpdateState up = apply_update(state, sc.req);
    QueryContext ctx(state, up);
    const auto labels = reference::bfs_components(sc.inst.graph, failure_set(sc.inst, sc.req));
    std::vector<Pos> failed;
    for (Vertex v : failure_set(sc.inst, sc.req)) {
      if (state.tree().position(v) != kNoPos) failed.push_back(state.tree().position(v));
    }
    failed.push_back(state.tree().position(state.hub()));
    const auto comps = reference::brute_components(state.tree(), failed);
    std::vector<std::int32_t> rep_of(static_cast<std::size_t>(comps.count()), -1);
    for (Vertex v = 0; v < sc.inst.graph.num_vertices(); ++v) {
      if (labels[v] < 0 || state.predicted_index(v) >= 0) continue;
      const std::int32_t c = comps.label[state.tree().position(v)];
      const Representative r = ctx.find_representative(v);
      EXPECT_EQ(r, ctx.find_representative(v));
      if (!comps.internal[c]) continue;
      EXPECT_EQ(r.kind, Representative::Kind::kMVertex);
      if (rep_of[c] < 0) rep_of[c] = r.id;
      EXPECT_EQ(rep_of[c], r.id);
    }
  }
}

void sweep(UpdateRegime regime, std::uint64_t seed, int trials) {
  Rng rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const auto sc = random_scenario(rng, 48, 140, 8, 8, regime);
    const OracleState state = preprocess(sc.inst);
    const UpdateState up = apply_update(state, sc.req);
    QueryContext ctx(state, up);
    const auto labels = reference::bfs_components(sc.inst.graph, failure_set(sc.inst, sc.req));
    const Vertex n = sc.inst.graph.num_vertices();
    for (Vertex s = 0; s < n; ++s) {
      if (labels[s] < 0) continue;
      for (Vertex t = s; t < n; ++t) {
        if (labels[t] < 0) continue;
        ctx.reset_counters();
        const bool got = ctx.connected(s, t);
        ASSERT_EQ(got, labels[s] == labels[t]) << "trial " << trial << " s=" << s << " t=" << t;
        const QueryCounters c = ctx.counters();
        // Two representatives per query.
        ASSERT_LE(c.low_probes, 2 * (up.dec.removed_count + 1));
        ASSERT_LE(c.restored_scans, 2 * up.dec.num_restored());
        ASSERT_EQ(got, ctx.connected(t, s));
      }
    }
  }
}

TEST(QueryEngine, SweepAnyRegime) { sweep(UpdateRegime::kAny, 1, 150); }
TEST(QueryEngine, SweepSupersetOfPredicted) { sweep(UpdateRegime::kSupersetOfPredicted, 2, 80); }
TEST(QueryEngine, SweepSubsetOfPredicted) { sweep(UpdateRegime::kSubsetOfPredicted, 3, 80); }
TEST(QueryEngine, SweepDisjointFromPredicted) { sweep(UpdateRegime::kDisjointFromPredicted, 4, 80); }

TEST(QueryEngine, TransitivityOnSampledTriples) {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto sc = random_scenario(rng, 60, 120, 6, 6);
    const OracleState state = preprocess(sc.inst);
    const UpdateState up = apply_update(state, sc.req);
    QueryContext ctx(state, up);
    const auto alive = survivors(sc.inst, sc.req);
    if (alive.empty()) continue;
    for (int k = 0; k < 50; ++k) {
      const Vertex a = alive[uniform_below(rng, alive.size())];
      const Vertex b = alive[uniform_below(rng, alive.size())];
      const Vertex c = alive[uniform_below(rng, alive.size())];
      if (ctx.connected(a, b) && ctx.connected(b, c)) EXPECT_TRUE(ctx.connected(a, c));
    }
  }
}

}  // namespace
}  // namespace pvf
