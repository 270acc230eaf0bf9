#pragma once

#include <cstdint>

#include "pvf/oracle_state.hpp"
#include "pvf/update.hpp"

namespace pvf {

struct QueryCounters {
  std::int64_t low_probes = 0;      // low_i entries inspected
  std::int64_t restored_scans = 0;  // restored vertices tested for adjacency
  std::int64_t ancestor_tests = 0;
  std::int64_t la_probes = 0;
  std::int64_t bin_searches = 0;

  std::int64_t probes() const noexcept { return low_probes + restored_scans; }
};

// What a query vertex stands for: a vertex of the connectivity graph, or the
// root of a hanging subtree with no surrogate.
struct Representative {
  enum class Kind { kMVertex, kIsolatedHanging };
  Kind kind = Kind::kMVertex;
  std::int32_t id = -1;  // M vertex id, or hanging-subtree root position

  friend bool operator==(const Representative&, const Representative&) = default;
};

// Read-only view over one (OracleState, UpdateState) pair plus counters.
// Cheap to create; use one per thread.
class QueryContext {
 public:
  QueryContext(const OracleState& state, const UpdateState& update) : state_(&state), update_(&update) {}

  // Throws InvalidRequest when u is failed, the hub, or out of range.
  Representative find_representative(Vertex u);
  bool connected(Vertex s, Vertex t);

  const QueryCounters& counters() const noexcept { return counters_; }
  void reset_counters() { counters_ = {}; }

 private:
  bool is_failed(Pos p);
  std::int32_t internal_m_vertex(Pos root) const;

  const OracleState* state_;
  const UpdateState* update_;
  QueryCounters counters_;
};

}  // namespace pvf
