#include <chrono>

#include "pvf/update.hpp"

namespace pvf {

ValidatedUpdate validate_update(const OracleState& state, const UpdateRequest& req) {
  return validate_update(state.base_vertices(), state.d(), state.predicted(), req);
}

UpdateState apply_update(const OracleState& state, const UpdateRequest& req) {
  return apply_update(state, validate_update(state, req));
}

UpdateState apply_update(const OracleState& state, const ValidatedUpdate& update) {
  const auto start = std::chrono::steady_clock::now();
  UpdateState out;
  out.dec = decompose(state, update, out.counters);
  out.m = ConnectivityGraph(out.dec.num_m_vertices());
  add_type1_edges(state, out.dec, out.m, out.counters);
  add_type2_edges(state, out.dec, out.m, out.counters);
  add_type3_edges(state, out.dec, out.m, out.counters);
  add_type4_edges(state, out.dec, out.m, out.counters);
  add_type5_edges(state, out.dec, out.m, out.counters);
  add_type6_edges(state, out.dec, out.m, out.counters);
  out.m_label.resize(static_cast<std::size_t>(out.m.num_vertices()));
  for (std::int32_t v = 0; v < out.m.num_vertices(); ++v) out.m_label[v] = out.m.find(v);
  out.counters.update_micros =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace pvf
