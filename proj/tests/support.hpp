#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "pvf/generate.hpp"
#include "pvf/graph.hpp"

namespace pvf::testing {

// The actual failure set D = (predicted \ restored) + removed, ascending.
inline std::vector<Vertex> failure_set(const Instance& inst, const UpdateRequest& req) {
  std::vector<Vertex> out;
  for (Vertex v : inst.predicted) {
    if (std::find(req.restored.begin(), req.restored.end(), v) == req.restored.end()) out.push_back(v);
  }
  out.insert(out.end(), req.removed.begin(), req.removed.end());
  std::sort(out.begin(), out.end());
  return out;
}

inline Instance make_instance(Vertex n, std::vector<Edge> edges, std::int32_t d, std::vector<Vertex> predicted) {
  return Instance{Graph(n, edges), d, std::move(predicted)};
}

// Shared desk-scale example used across the suites.
inline Instance x1_instance() {
  return make_instance(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 7}, {7, 8}, {8, 3}, {6, 0}, {4, 8}}, 3,
                       {3, 6});
}

// Random instance plus update drawn with small, regime-spread parameters.
struct Scenario {
  Instance inst;
  UpdateRequest req;
};

inline Scenario random_scenario(Rng& rng, Vertex max_n, std::int64_t max_m, std::int32_t max_d, std::int32_t max_eta,
                                UpdateRegime regime = UpdateRegime::kAny) {
  for (;;) {
    const auto n = static_cast<Vertex>(2 + uniform_below(rng, static_cast<std::uint64_t>(max_n - 1)));
    const std::int64_t lo = n - 1;
    const std::int64_t hi = std::min<std::int64_t>(max_m, static_cast<std::int64_t>(n) * (n - 1) / 2);
    const std::int64_t m = lo + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
    const auto d = static_cast<std::int32_t>(1 + uniform_below(rng, static_cast<std::uint64_t>(std::min(max_d, n))));
    const auto p = static_cast<std::int32_t>(uniform_below(rng, static_cast<std::uint64_t>(d) + 1));
    Instance inst = random_instance(n, m, d, p, rng);
    const auto eta = static_cast<std::int32_t>(uniform_below(rng, static_cast<std::uint64_t>(max_eta) + 1));
    try {
      UpdateRequest req = random_update(inst, eta, regime, rng);
      return {std::move(inst), std::move(req)};
    } catch (const std::exception&) {
      // Infeasible draw for this regime; try again.
    }
  }
}

}  // namespace pvf::testing
