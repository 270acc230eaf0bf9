#include "pvf/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pvf/errors.hpp"
#include "pvf/generate.hpp"
#include "pvf/query.hpp"
#include "pvf/update.hpp"

namespace pvf {

void validate_setdisjointness(const SetDisjointnessInstance& inst) {
  if (inst.universe < 0) throw InvalidRequest("universe size must be non-negative");
  for (std::size_t i = 0; i < inst.sets.size(); ++i) {
    const auto& s = inst.sets[i];
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] < 0 || s[k] >= inst.universe) {
        throw InvalidRequest("set " + std::to_string(i) + " has element " + std::to_string(s[k]) + " outside the universe");
      }
      if (k > 0 && s[k] <= s[k - 1]) {
        throw InvalidRequest("set " + std::to_string(i) + " is not strictly ascending");
      }
    }
  }
  for (const auto& [i, j] : inst.queries) {
    if (i < 0 || j < 0 || i >= inst.family_size() || j >= inst.family_size()) {
      throw InvalidRequest("query (" + std::to_string(i) + ", " + std::to_string(j) + ") names a missing set");
    }
  }
}

ReductionGraph build_reduction_graph(const SetDisjointnessInstance& inst) {
  validate_setdisjointness(inst);
  ReductionGraph r;
  r.family_size = inst.family_size();
  std::vector<Edge> edges;
  for (std::int32_t i = 0; i < r.family_size; ++i) {
    for (std::int32_t u : inst.sets[i]) edges.push_back({r.set_vertex(i), r.element_vertex(u)});
  }
  r.instance.graph = Graph(r.family_size + inst.universe, edges);
  r.instance.d = r.family_size;
  r.instance.predicted.resize(static_cast<std::size_t>(r.family_size));
  for (std::int32_t i = 0; i < r.family_size; ++i) r.instance.predicted[i] = r.set_vertex(i);
  return r;
}

std::vector<bool> naive_disjointness(const SetDisjointnessInstance& inst) {
  std::vector<bool> out;
  out.reserve(inst.queries.size());
  for (const auto& [i, j] : inst.queries) {
    const auto& a = inst.sets[i];
    const auto& b = inst.sets[j];
    bool meet = false;
    for (std::int32_t x : a) meet = meet || std::find(b.begin(), b.end(), x) != b.end();
    out.push_back(meet);
  }
  return out;
}

SetDisjointnessRun solve_setdisjointness(const OracleState& oracle, const ReductionGraph& reduction,
                                         const SetDisjointnessInstance& inst) {
  SetDisjointnessRun run;
  for (const auto& [i, j] : inst.queries) {
    const Vertex a = reduction.set_vertex(i);
    const Vertex b = reduction.set_vertex(j);
    if (i == j) {
      run.answers.push_back(oracle.graph().degree(a) > 1);  // one edge goes to the hub
      run.etas.push_back(0);
      continue;
    }
    UpdateRequest req;
    req.restored = {std::min(a, b), std::max(a, b)};
    const UpdateState state = apply_update(oracle, req);
    QueryContext ctx(oracle, state);
    run.answers.push_back(ctx.connected(a, b));
    run.etas.push_back(state.dec.eta);
  }
  return run;
}

SetDisjointnessInstance parse_setdisjointness(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  std::string line;
  auto next_line = [&]() -> std::istringstream {
    while (std::getline(in, line)) {
      ++line_no;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return std::istringstream(line);
    }
    throw FormatError(line_no + 1, "unexpected end of input");
  };
  auto read_int = [&](std::istringstream& ls, const char* what) {
    long long v = 0;
    if (!(ls >> v)) throw FormatError(line_no, std::string("expected ") + what);
    if (v < 0 || v > INT32_MAX) throw FormatError(line_no, std::string(what) + " out of range");
    return static_cast<std::int32_t>(v);
  };
  auto expect_end = [&](std::istringstream& ls) {
    std::string extra;
    if (ls >> extra) throw FormatError(line_no, "trailing token '" + extra + "'");
  };

  SetDisjointnessInstance inst;
  auto header = next_line();
  inst.universe = read_int(header, "universe size");
  const std::int32_t family = read_int(header, "family size");
  const std::int32_t queries = read_int(header, "query count");
  expect_end(header);
  inst.sets.resize(static_cast<std::size_t>(family));
  for (auto& s : inst.sets) {
    auto ls = next_line();
    const std::int32_t k = read_int(ls, "set size");
    s.resize(static_cast<std::size_t>(k));
    for (auto& e : s) {
      e = read_int(ls, "element");
      if (e >= inst.universe) throw FormatError(line_no, "element " + std::to_string(e) + " outside the universe");
    }
    expect_end(ls);
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw FormatError(line_no, "repeated element");
  }
  for (std::int32_t q = 0; q < queries; ++q) {
    auto ls = next_line();
    const std::int32_t i = read_int(ls, "set index");
    const std::int32_t j = read_int(ls, "set index");
    expect_end(ls);
    if (i >= family || j >= family) throw FormatError(line_no, "set index out of range");
    inst.queries.emplace_back(i, j);
  }
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] != '#') throw FormatError(line_no, "unexpected trailing line");
  }
  return inst;
}

std::string serialize_setdisjointness(const SetDisjointnessInstance& inst) {
  std::ostringstream out;
  out << inst.universe << ' ' << inst.family_size() << ' ' << inst.queries.size() << '\n';
  for (const auto& s : inst.sets) {
    out << s.size();
    for (std::int32_t e : s) out << ' ' << e;
    out << '\n';
  }
  for (const auto& [i, j] : inst.queries) out << i << ' ' << j << '\n';
  return out.str();
}

SetDisjointnessInstance random_setdisjointness(std::int32_t universe, std::int32_t family, std::int32_t max_set,
                                               std::int32_t queries, std::uint64_t seed) {
  if (universe < 0 || family < 0 || max_set < 0 || queries < 0 || (queries > 0 && family == 0)) {
    throw InvalidRequest("infeasible set-disjointness parameters");
  }
  Rng rng(seed);
  SetDisjointnessInstance inst;
  inst.universe = universe;
  std::vector<std::int32_t> pool(static_cast<std::size_t>(universe));
  for (std::int32_t u = 0; u < universe; ++u) pool[u] = u;
  const std::int32_t cap = std::min(max_set, universe);
  for (std::int32_t i = 0; i < family; ++i) {
    const auto k = static_cast<std::int32_t>(uniform_below(rng, static_cast<std::uint64_t>(cap) + 1));
    for (std::int32_t a = 0; a < k; ++a) {
      const auto b = a + static_cast<std::int32_t>(uniform_below(rng, static_cast<std::uint64_t>(universe - a)));
      std::swap(pool[a], pool[b]);
    }
    std::vector<std::int32_t> s(pool.begin(), pool.begin() + k);
    std::sort(s.begin(), s.end());
    inst.sets.push_back(std::move(s));
  }
  for (std::int32_t q = 0; q < queries; ++q) {
    const auto i = static_cast<std::int32_t>(uniform_below(rng, static_cast<std::uint64_t>(family)));
    const auto j = static_cast<std::int32_t>(uniform_below(rng, static_cast<std::uint64_t>(family)));
    inst.queries.emplace_back(i, j);
  }
  return inst;
}

SetDisjointnessInstance generate_setdisjointness(std::int32_t n, double gamma, std::uint64_t seed) {
  if (n < 1 || !(gamma > 0.0 && gamma < 1.0)) throw InvalidRequest("need n >= 1 and 0 < gamma < 1");
  const double nd = n;
  const auto universe = std::max<std::int32_t>(1, static_cast<std::int32_t>(std::lround(std::pow(nd, 2 - 2 * gamma))));
  const auto set_size = std::max<std::int32_t>(1, static_cast<std::int32_t>(std::lround(std::pow(nd, 1 - gamma))));
  const auto queries = std::max<std::int32_t>(1, static_cast<std::int32_t>(std::lround(std::pow(nd, 1 + gamma))));
  return random_setdisjointness(universe, n, set_size, queries, seed);
}

}  // namespace pvf
