#include "pvf/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>

#include "pvf/errors.hpp"

namespace pvf {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string_view> tokens;
};

// Splits into non-empty, non-comment lines of whitespace-separated tokens.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool next(Line& out) {
    while (!done_) {
      std::size_t end = text_.find('\n', pos_);
      if (end == std::string_view::npos) {
        end = text_.size();
        done_ = true;
      }
      std::string_view raw = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++line_;
      std::vector<std::string_view> tokens = split(raw);
      if (tokens.empty() || tokens.front().front() == '#') continue;
      out.number = line_;
      out.tokens = std::move(tokens);
      return true;
    }
    return false;
  }

  std::size_t last_line() const { return line_; }

 private:
  static std::vector<std::string_view> split(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; };
    while (i < s.size()) {
      while (i < s.size() && is_space(s[i])) ++i;
      std::size_t j = i;
      while (j < s.size() && !is_space(s[j])) ++j;
      if (j > i) out.push_back(s.substr(i, j - i));
      i = j;
    }
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
  bool done_ = false;
};

std::int64_t to_int(std::string_view tok, std::size_t line) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw FormatError(line, "expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

Vertex to_vertex(std::string_view tok, std::size_t line, std::int64_t n) {
  std::int64_t v = to_int(tok, line);
  if (v < 0 || v >= n) {
    throw FormatError(line, "vertex id " + std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
  }
  return static_cast<Vertex>(v);
}

std::int64_t to_count(std::string_view tok, std::size_t line, const char* what) {
  std::int64_t v = to_int(tok, line);
  if (v < 0 || v > std::int64_t{1} << 31) {
    throw FormatError(line, std::string(what) + " out of range: " + std::to_string(v));
  }
  return v;
}

void expect_tokens(const Line& l, std::size_t count, const char* shape) {
  if (l.tokens.size() != count) {
    throw FormatError(l.number, std::string("expected \"") + shape + "\"");
  }
}

// Reads m edge lines, reporting self-loops and duplicates at the offending line.
Graph read_edges(LineReader& reader, std::int64_t n, std::int64_t m) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::map<Edge, std::size_t> seen;
  Line l;
  for (std::int64_t i = 0; i < m; ++i) {
    if (!reader.next(l)) {
      throw FormatError(reader.last_line(), "expected " + std::to_string(m) + " edges, found " +
                                                std::to_string(i));
    }
    expect_tokens(l, 2, "u v");
    Vertex u = to_vertex(l.tokens[0], l.number, n);
    Vertex v = to_vertex(l.tokens[1], l.number, n);
    if (u == v) throw FormatError(l.number, "self-loop at vertex " + std::to_string(u));
    Edge key = u < v ? Edge{u, v} : Edge{v, u};
    auto [it, inserted] = seen.emplace(key, l.number);
    if (!inserted) {
      throw FormatError(l.number, "duplicate edge " + std::to_string(key.u) + "-" + std::to_string(key.v) +
                                      " (first seen on line " + std::to_string(it->second) + ")");
    }
    edges.push_back(key);
  }
  return Graph(static_cast<Vertex>(n), edges);
}

void expect_end(LineReader& reader) {
  Line l;
  if (reader.next(l)) throw FormatError(l.number, "unexpected trailing content");
}

std::string slurp(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

Graph parse_graph(std::string_view text) {
  LineReader reader(text);
  Line l;
  if (!reader.next(l)) throw FormatError(reader.last_line(), "missing header \"n m\"");
  expect_tokens(l, 2, "n m");
  std::int64_t n = to_count(l.tokens[0], l.number, "vertex count");
  std::int64_t m = to_count(l.tokens[1], l.number, "edge count");
  Graph g = read_edges(reader, n, m);
  expect_end(reader);
  return g;
}

Graph parse_graph(std::istream& in) { return parse_graph(slurp(in)); }

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Instance parse_instance(std::string_view text) {
  LineReader reader(text);
  Line l;
  if (!reader.next(l)) throw FormatError(reader.last_line(), "missing header \"n m d\"");
  expect_tokens(l, 3, "n m d");
  std::int64_t n = to_count(l.tokens[0], l.number, "vertex count");
  std::int64_t m = to_count(l.tokens[1], l.number, "edge count");
  std::int64_t d = to_count(l.tokens[2], l.number, "failure bound");
  Instance inst;
  inst.graph = read_edges(reader, n, m);
  inst.d = static_cast<std::int32_t>(d);
  if (!reader.next(l)) throw FormatError(reader.last_line(), "missing prediction line \"P k v1 ... vk\"");
  if (l.tokens.size() < 2 || l.tokens[0] != "P") {
    throw FormatError(l.number, "expected \"P k v1 ... vk\"");
  }
  std::int64_t k = to_count(l.tokens[1], l.number, "prediction size");
  if (static_cast<std::int64_t>(l.tokens.size()) != 2 + k) {
    throw FormatError(l.number, "prediction line lists " + std::to_string(l.tokens.size() - 2) +
                                    " vertices, header says " + std::to_string(k));
  }
  for (std::int64_t i = 0; i < k; ++i) inst.predicted.push_back(to_vertex(l.tokens[2 + i], l.number, n));
  std::sort(inst.predicted.begin(), inst.predicted.end());
  if (std::adjacent_find(inst.predicted.begin(), inst.predicted.end()) != inst.predicted.end()) {
    throw FormatError(l.number, "prediction lists a vertex twice");
  }
  expect_end(reader);
  try {
    validate_instance(inst);
  } catch (const InvalidRequest& e) {
    throw FormatError(l.number, e.what());
  }
  return inst;
}

Instance parse_instance(std::istream& in) { return parse_instance(slurp(in)); }

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << inst.graph.num_vertices() << ' ' << inst.graph.num_edges() << ' ' << inst.d << '\n';
  for (const Edge& e : inst.graph.edges()) out << e.u << ' ' << e.v << '\n';
  out << "P " << inst.predicted.size();
  for (Vertex v : inst.predicted) out << ' ' << v;
  out << '\n';
  return out.str();
}

std::vector<WorkloadOp> parse_workload(std::string_view text) {
  LineReader reader(text);
  std::vector<WorkloadOp> ops;
  Line l;
  while (reader.next(l)) {
    WorkloadOp op;
    op.line = l.number;
    if (l.tokens[0] == "Q") {
      expect_tokens(l, 3, "Q u v");
      op.kind = WorkloadOp::Kind::kQuery;
      op.s = static_cast<Vertex>(to_count(l.tokens[1], l.number, "vertex id"));
      op.t = static_cast<Vertex>(to_count(l.tokens[2], l.number, "vertex id"));
    } else if (l.tokens[0] == "U") {
      if (l.tokens.size() < 3) throw FormatError(l.number, "expected \"U r s x1..xr y1..ys\"");
      op.kind = WorkloadOp::Kind::kUpdate;
      std::int64_t r = to_count(l.tokens[1], l.number, "removed count");
      std::int64_t s = to_count(l.tokens[2], l.number, "restored count");
      if (static_cast<std::int64_t>(l.tokens.size()) != 3 + r + s) {
        throw FormatError(l.number, "update line has " + std::to_string(l.tokens.size() - 3) +
                                        " ids, header says " + std::to_string(r + s));
      }
      for (std::int64_t i = 0; i < r; ++i) {
        op.update.removed.push_back(static_cast<Vertex>(to_count(l.tokens[3 + i], l.number, "vertex id")));
      }
      for (std::int64_t i = 0; i < s; ++i) {
        op.update.restored.push_back(static_cast<Vertex>(to_count(l.tokens[3 + r + i], l.number, "vertex id")));
      }
    } else {
      throw FormatError(l.number, "unknown workload record '" + std::string(l.tokens[0]) + "'");
    }
    ops.push_back(std::move(op));
  }
  return ops;
}

std::vector<WorkloadOp> parse_workload(std::istream& in) { return parse_workload(slurp(in)); }

std::string serialize_workload(const std::vector<WorkloadOp>& ops) {
  std::ostringstream out;
  for (const WorkloadOp& op : ops) {
    if (op.kind == WorkloadOp::Kind::kQuery) {
      out << "Q " << op.s << ' ' << op.t << '\n';
    } else {
      out << "U " << op.update.removed.size() << ' ' << op.update.restored.size();
      for (Vertex v : op.update.removed) out << ' ' << v;
      for (Vertex v : op.update.restored) out << ' ' << v;
      out << '\n';
    }
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(0, "cannot open '" + path + "'");
  return slurp(in);
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError(0, "cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
}

}  // namespace pvf
