#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pvf/graph.hpp"
#include "pvf/io.hpp"

namespace pvf {

using Rng = std::mt19937_64;

// Uniform in [0, bound), bound > 0; rejection sampling keeps the stream
// identical across standard libraries.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

// Random spanning tree (each vertex attaches to an earlier one) plus
// uniformly random extra edges. Requires n - 1 <= m <= n(n-1)/2, or m = 0
// when n <= 1.
Graph random_graph(Vertex n, std::int64_t m, Rng& rng);

// Random graph with a uniformly random predicted set of exactly
// `predicted_count` vertices.
Instance random_instance(Vertex n, std::int64_t m, std::int32_t d, std::int32_t predicted_count, Rng& rng);

// How the actual failure set relates to the prediction.
enum class UpdateRegime {
  kAny,
  kSupersetOfPredicted,  // restored is empty
  kSubsetOfPredicted,    // removed is empty
  kDisjointFromPredicted // restored is all of the prediction
};

// Update with symmetric difference exactly eta respecting |D| <= d. Throws
// InvalidRequest when the regime and eta cannot be met.
UpdateRequest random_update(const Instance& inst, std::int32_t eta, UpdateRegime regime, Rng& rng);

// Survivors of the update, ascending.
std::vector<Vertex> survivors(const Instance& inst, const UpdateRequest& req);

struct GenerateParams {
  Vertex n = 16;
  std::int64_t m = 32;
  std::int32_t d = 4;
  std::int32_t eta = 2;
  std::int32_t updates = 4;
  std::int32_t queries = 8;  // per update
  std::uint64_t seed = 1;
};

struct Generated {
  Instance instance;
  std::vector<WorkloadOp> workload;
};

// |predicted| = d. Throws InvalidRequest on infeasible parameters, including
// eta > 2d.
Generated generate(const GenerateParams& params);

}  // namespace pvf
