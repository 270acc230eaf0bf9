#include "pvf/generate.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "pvf/errors.hpp"

namespace pvf {
namespace {

// k distinct entries of pool in random order (partial Fisher-Yates).
std::vector<Vertex> sample_distinct(std::vector<Vertex> pool, std::int32_t k, Rng& rng) {
  for (std::int32_t i = 0; i < k; ++i) {
    const auto j = static_cast<std::size_t>(i) + uniform_below(rng, pool.size() - static_cast<std::size_t>(i));
    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
  }
  pool.resize(static_cast<std::size_t>(k));
  return pool;
}

}  // namespace

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = Rng::max() - Rng::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

Graph random_graph(Vertex n, std::int64_t m, Rng& rng) {
  const std::int64_t max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (n < 0 || m > max_edges || (n > 1 && m < n - 1)) {
    throw InvalidRequest("cannot build a graph with n=" + std::to_string(n) + " m=" + std::to_string(m));
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(static_cast<std::size_t>(m) * 2);
  auto add = [&](Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    const std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
    if (u == v || !seen.insert(key).second) return false;
    edges.push_back({u, v});
    return true;
  };
  for (Vertex v = 1; v < n; ++v) add(static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(v))), v);
  if (2 * m <= max_edges) {
    while (static_cast<std::int64_t>(edges.size()) < m) {
      add(static_cast<Vertex>(uniform_below(rng, n)), static_cast<Vertex>(uniform_below(rng, n)));
    }
  } else {
    // Dense: shuffle the complement of the tree and take a prefix.
    std::vector<Edge> rest;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (!seen.contains((static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v))) rest.push_back({u, v});
      }
    }
    for (std::size_t i = 0; static_cast<std::int64_t>(edges.size()) < m; ++i) {
      const std::size_t j = i + uniform_below(rng, rest.size() - i);
      std::swap(rest[i], rest[j]);
      edges.push_back(rest[i]);
    }
  }
  return Graph(n, edges);
}

Instance random_instance(Vertex n, std::int64_t m, std::int32_t d, std::int32_t predicted_count, Rng& rng) {
  if (predicted_count < 0 || predicted_count > d || predicted_count > n) {
    throw InvalidRequest("predicted set size " + std::to_string(predicted_count) + " infeasible");
  }
  Instance inst;
  inst.graph = random_graph(n, m, rng);
  inst.d = d;
  std::vector<Vertex> all(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  inst.predicted = sample_distinct(std::move(all), predicted_count, rng);
  std::sort(inst.predicted.begin(), inst.predicted.end());
  return inst;
}

UpdateRequest random_update(const Instance& inst, std::int32_t eta, UpdateRegime regime, Rng& rng) {
  const auto p = static_cast<std::int32_t>(inst.predicted.size());
  const std::int32_t others = inst.graph.num_vertices() - p;
  // r restored, s = eta - r removed; |D| = p - r + s <= d.
  std::int32_t lo = 0;
  std::int32_t hi = std::min(p, eta);
  switch (regime) {
    case UpdateRegime::kAny: break;
    case UpdateRegime::kSupersetOfPredicted: hi = 0; break;
    case UpdateRegime::kSubsetOfPredicted: lo = eta; break;
    case UpdateRegime::kDisjointFromPredicted: lo = hi = p; break;
  }
  std::vector<std::int32_t> feasible;
  for (std::int32_t r = lo; r <= hi; ++r) {
    const std::int32_t s = eta - r;
    if (r <= p && s >= 0 && s <= others && p - r + s <= inst.d) feasible.push_back(r);
  }
  if (feasible.empty()) throw InvalidRequest("no update with eta=" + std::to_string(eta) + " fits the instance");
  const std::int32_t r = feasible[uniform_below(rng, feasible.size())];

  std::vector<bool> predicted(static_cast<std::size_t>(inst.graph.num_vertices()), false);
  for (Vertex v : inst.predicted) predicted[v] = true;
  std::vector<Vertex> rest;
  rest.reserve(static_cast<std::size_t>(others));
  for (Vertex v = 0; v < inst.graph.num_vertices(); ++v) {
    if (!predicted[v]) rest.push_back(v);
  }
  UpdateRequest req;
  req.restored = sample_distinct(inst.predicted, r, rng);
  req.removed = sample_distinct(std::move(rest), eta - r, rng);
  std::sort(req.restored.begin(), req.restored.end());
  std::sort(req.removed.begin(), req.removed.end());
  return req;
}

std::vector<Vertex> survivors(const Instance& inst, const UpdateRequest& req) {
  std::vector<bool> dead(static_cast<std::size_t>(inst.graph.num_vertices()), false);
  for (Vertex v : inst.predicted) dead[v] = true;
  for (Vertex v : req.restored) dead[v] = false;
  for (Vertex v : req.removed) dead[v] = true;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < inst.graph.num_vertices(); ++v) {
    if (!dead[v]) out.push_back(v);
  }
  return out;
}

Generated generate(const GenerateParams& params) {
  if (params.d < 0 || params.eta < 0 || params.updates < 0 || params.queries < 0) {
    throw InvalidRequest("size parameters must be non-negative");
  }
  if (params.eta > 2 * params.d) {
    throw InvalidRequest("eta=" + std::to_string(params.eta) + " exceeds 2d=" + std::to_string(2 * params.d));
  }
  Rng rng(params.seed);
  Generated out;
  out.instance = random_instance(params.n, params.m, params.d, std::min(params.d, params.n), rng);
  for (std::int32_t k = 0; k < params.updates; ++k) {
    WorkloadOp up;
    up.kind = WorkloadOp::Kind::kUpdate;
    up.update = random_update(out.instance, params.eta, UpdateRegime::kAny, rng);
    const std::vector<Vertex> alive = survivors(out.instance, up.update);
    out.workload.push_back(std::move(up));
    if (alive.empty()) continue;
    for (std::int32_t q = 0; q < params.queries; ++q) {
      WorkloadOp op;
      op.kind = WorkloadOp::Kind::kQuery;
      op.s = alive[uniform_below(rng, alive.size())];
      op.t = alive[uniform_below(rng, alive.size())];
      out.workload.push_back(op);
    }
  }
  return out;
}

}  // namespace pvf
