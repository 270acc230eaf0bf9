#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pvf/dfs_tree.hpp"
#include "pvf/graph.hpp"

// Brute-force oracles. They share nothing with the oracle implementation
// beyond Graph and DfsTree, and favor clarity over speed.
namespace pvf::reference {

// BFS over g minus `failed`. Throws InvalidRequest when s or t is failed.
bool bfs_connected(const Graph& g, std::span<const Vertex> failed, Vertex s, Vertex t);

// Component label per vertex of g minus `failed` (smallest member id), -1
// for failed vertices.
std::vector<Vertex> bfs_components(const Graph& g, std::span<const Vertex> failed);

// Every distinct proper ancestor of v receiving a non-tree edge from T(v),
// nearest the root first. Edges at `ignore` are skipped.
std::vector<Pos> brute_low(const Graph& g, const DfsTree& t, Pos v, Vertex ignore = kNoVertex);

struct TreeComponents {
  std::vector<std::int32_t> label;          // per position, -1 when failed
  std::vector<Pos> root;                    // per label
  std::vector<bool> internal;               // per label
  std::vector<std::vector<Pos>> boundary;   // per label, ascending
  std::int32_t count() const noexcept { return static_cast<std::int32_t>(root.size()); }
};

// Components of T minus the failed positions, from parent pointers alone.
TreeComponents brute_components(const DfsTree& t, std::span<const Pos> failed);

// For one hanging subtree: the internal components joined to it by an edge
// of g, and the restored vertices adjacent to it.
struct HangingContacts {
  std::int32_t hanging = -1;                 // label
  std::vector<std::int32_t> components;      // internal labels, ascending
  std::vector<Vertex> restored;              // ascending
};

// One entry per hanging label, ascending. Edges at `ignore` are skipped.
std::vector<HangingContacts> hanging_contacts(const Graph& g, const DfsTree& t, const TreeComponents& comps,
                                              std::span<const Vertex> restored, Vertex ignore = kNoVertex);

}  // namespace pvf::reference
