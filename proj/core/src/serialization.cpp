// Binary OracleState format, version 1. All integers little-endian.
//
//   magic   8 bytes  "PVFSTATE"
//   version u32
//   body    sequence of fields; scalars are i64, arrays are an i64 length
//           followed by that many i32 (or i64 for offset arrays) values.
//
// Field order follows Serializer::state below. Graphs are stored as vertex
// count plus canonical edge list and rebuilt on load.

#include <array>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>

#include "pvf/errors.hpp"
#include "pvf/oracle_state.hpp"

namespace pvf {

namespace {

constexpr std::array<char, 8> kMagic{'P', 'V', 'F', 'S', 'T', 'A', 'T', 'E'};
constexpr std::uint32_t kVersion = 1;

class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(out) {}

  void u64(std::uint64_t v) {
    unsigned char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
    out_.write(reinterpret_cast<const char*>(buf), 8);
  }
  void i64(std::int64_t v) { u64(static_cast<std::uint64_t>(v)); }
  void u32(std::uint32_t v) {
    unsigned char buf[4];
    for (int i = 0; i < 4; ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
    out_.write(reinterpret_cast<const char*>(buf), 4);
  }
  void vec(const std::vector<std::int32_t>& v) {
    i64(static_cast<std::int64_t>(v.size()));
    for (std::int32_t x : v) u32(static_cast<std::uint32_t>(x));
  }
  void vec(const std::vector<std::int64_t>& v) {
    i64(static_cast<std::int64_t>(v.size()));
    for (std::int64_t x : v) i64(x);
  }

 private:
  std::ostream& out_;
};

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  std::uint64_t u64() {
    unsigned char buf[8];
    read(buf, 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t{buf[i]} << (8 * i);
    return v;
  }
  std::int64_t i64() { return static_cast<std::int64_t>(u64()); }
  std::uint32_t u32() {
    unsigned char buf[4];
    read(buf, 4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= std::uint32_t{buf[i]} << (8 * i);
    return v;
  }
  std::int64_t length() {
    std::int64_t n = i64();
    if (n < 0 || n > (std::int64_t{1} << 40)) throw FormatError(0, "corrupt oracle state: bad array length");
    return n;
  }
  void vec(std::vector<std::int32_t>& v) {
    v.resize(static_cast<std::size_t>(length()));
    for (auto& x : v) x = static_cast<std::int32_t>(u32());
  }
  void vec(std::vector<std::int64_t>& v) {
    v.resize(static_cast<std::size_t>(length()));
    for (auto& x : v) x = i64();
  }
  void read(unsigned char* buf, std::size_t n) {
    in_.read(reinterpret_cast<char*>(buf), static_cast<std::streamsize>(n));
    if (in_.gcount() != static_cast<std::streamsize>(n)) throw FormatError(0, "truncated oracle state");
  }

 private:
  std::istream& in_;
};

}  // namespace

struct Serializer {
  static void put(Writer& w, const Graph& g) {
    w.i64(g.num_vertices());
    std::vector<std::int32_t> flat;
    flat.reserve(g.edges().size() * 2);
    for (const Edge& e : g.edges()) {
      flat.push_back(e.u);
      flat.push_back(e.v);
    }
    w.vec(flat);
  }
  static void get(Reader& r, Graph& g) {
    auto n = static_cast<Vertex>(r.i64());
    std::vector<std::int32_t> flat;
    r.vec(flat);
    std::vector<Edge> edges;
    edges.reserve(flat.size() / 2);
    for (std::size_t i = 0; i + 1 < flat.size(); i += 2) edges.push_back({flat[i], flat[i + 1]});
    g = Graph(n, edges);
  }

  static void put(Writer& w, const DfsTree& t) {
    w.vec(t.parent_);
    w.vec(t.depth_);
    w.vec(t.size_);
    w.vec(t.vertex_);
    w.vec(t.position_);
    w.vec(t.child_begin_);
    w.vec(t.children_);
  }
  static void get(Reader& r, DfsTree& t) {
    r.vec(t.parent_);
    r.vec(t.depth_);
    r.vec(t.size_);
    r.vec(t.vertex_);
    r.vec(t.position_);
    r.vec(t.child_begin_);
    r.vec(t.children_);
  }

  static void put(Writer& w, const LevelAncestorIndex& la) {
    w.i64(static_cast<std::int64_t>(la.n_));
    w.i64(la.levels_);
    w.vec(la.up_);
    w.vec(la.depth_);
  }
  static void get(Reader& r, LevelAncestorIndex& la) {
    la.n_ = static_cast<std::size_t>(r.i64());
    la.levels_ = static_cast<int>(r.i64());
    r.vec(la.up_);
    r.vec(la.depth_);
  }

  static void put(Writer& w, const RangeEmptiness2D& s) {
    w.vec(s.xs_);
    w.i64(static_cast<std::int64_t>(s.levels_.size()));
    for (const auto& level : s.levels_) w.vec(level);
  }
  static void get(Reader& r, RangeEmptiness2D& s) {
    r.vec(s.xs_);
    s.levels_.resize(static_cast<std::size_t>(r.length()));
    for (auto& level : s.levels_) r.vec(level);
  }

  static void put(Writer& w, const LowTable& l) {
    w.i64(l.k_);
    w.vec(l.table_);
  }
  static void get(Reader& r, LowTable& l) {
    l.k_ = static_cast<std::int32_t>(r.i64());
    r.vec(l.table_);
  }

  static void put(Writer& w, const Reordering& o) {
    w.vec(o.number_);
    w.vec(o.inverse_);
    w.vec(o.begin_);
    w.vec(o.children_);
    w.vec(o.rank_);
  }
  static void get(Reader& r, Reordering& o) {
    r.vec(o.number_);
    r.vec(o.inverse_);
    r.vec(o.begin_);
    r.vec(o.children_);
    r.vec(o.rank_);
  }

  static void put(Writer& w, const ListFamily& f) {
    w.vec(f.begin_);
    w.vec(f.data_);
  }
  static void get(Reader& r, ListFamily& f) {
    r.vec(f.begin_);
    r.vec(f.data_);
  }

  template <typename T>
  static void put_all(Writer& w, const std::vector<T>& items) {
    w.i64(static_cast<std::int64_t>(items.size()));
    for (const T& item : items) put(w, item);
  }
  template <typename T>
  static void get_all(Reader& r, std::vector<T>& items) {
    items.resize(static_cast<std::size_t>(r.length()));
    for (T& item : items) get(r, item);
  }

  static void state(Writer& w, const OracleState& s) {
    put(w, s.aug_.graph);
    w.i64(s.aug_.hub);
    w.i64(s.d_);
    w.vec(s.predicted_);
    w.vec(s.pred_index_);
    put(w, s.tree_);
    put(w, s.la_);
    put(w, s.base_2d_);
    put(w, s.lows_);
    put_all(w, s.by_low_);
    put_all(w, s.by_low_2d_);
    put_all(w, s.by_marks_);
    put_all(w, s.by_marks_2d_);
    put(w, s.neighbors_);
    put(w, s.neighbors_u_);
    put(w, s.pred_adj_);
  }
  static void state(Reader& r, OracleState& s) {
    get(r, s.aug_.graph);
    s.aug_.hub = static_cast<Vertex>(r.i64());
    s.d_ = static_cast<std::int32_t>(r.i64());
    r.vec(s.predicted_);
    r.vec(s.pred_index_);
    get(r, s.tree_);
    get(r, s.la_);
    get(r, s.base_2d_);
    get(r, s.lows_);
    get_all(r, s.by_low_);
    get_all(r, s.by_low_2d_);
    get_all(r, s.by_marks_);
    get_all(r, s.by_marks_2d_);
    get(r, s.neighbors_);
    get(r, s.neighbors_u_);
    get(r, s.pred_adj_);
    s.space_words_ = s.count_space();
  }
};

void OracleState::save(std::ostream& out) const {
  out.write(kMagic.data(), kMagic.size());
  Writer w(out);
  w.u32(kVersion);
  Serializer::state(w, *this);
  if (!out) throw FormatError(0, "failed to write oracle state");
}

OracleState OracleState::load(std::istream& in) {
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  if (in.gcount() != static_cast<std::streamsize>(magic.size()) || magic != kMagic) {
    throw FormatError(0, "not an oracle state file");
  }
  Reader r(in);
  std::uint32_t version = r.u32();
  if (version != kVersion) {
    throw FormatError(0, "unsupported oracle state version " + std::to_string(version));
  }
  OracleState s;
  Serializer::state(r, s);
  return s;
}

}  // namespace pvf
