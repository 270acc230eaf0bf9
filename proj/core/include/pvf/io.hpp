#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pvf/graph.hpp"

namespace pvf {

// Edge-list text: "n m", then m lines "u v". Lines whose first non-blank
// character is '#' are comments. Errors carry the 1-based line number.
Graph parse_graph(std::string_view text);
Graph parse_graph(std::istream& in);
std::string serialize_graph(const Graph& g);

// Instance text: "n m d", m edge lines, then "P k v1 ... vk".
Instance parse_instance(std::string_view text);
Instance parse_instance(std::istream& in);
std::string serialize_instance(const Instance& inst);

struct WorkloadOp {
  enum class Kind { kUpdate, kQuery };
  Kind kind = Kind::kQuery;
  UpdateRequest update;   // kUpdate
  Vertex s = kNoVertex;   // kQuery
  Vertex t = kNoVertex;
  std::size_t line = 0;

  friend bool operator==(const WorkloadOp& a, const WorkloadOp& b) {
    return a.kind == b.kind && a.update == b.update && a.s == b.s && a.t == b.t;
  }
};

// Workload text: "U r s x1..xr y1..ys" (r removed, s restored) and "Q u v".
std::vector<WorkloadOp> parse_workload(std::string_view text);
std::vector<WorkloadOp> parse_workload(std::istream& in);
std::string serialize_workload(const std::vector<WorkloadOp>& ops);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace pvf
