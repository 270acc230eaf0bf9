#include <benchmark/benchmark.h>

#include <map>
#include <memory>

#include "pvf/generate.hpp"
#include "pvf/query.hpp"
#include "pvf/range_emptiness.hpp"
#include "pvf/update.hpp"

namespace pvf {
namespace {

// One shared instance per (n, d); building the oracle dominates setup.
struct Fixture {
  Instance inst;
  OracleState state;
};

const Fixture& fixture(Vertex n, std::int32_t d) {
  static std::map<std::pair<Vertex, std::int32_t>, std::unique_ptr<Fixture>> cache;
  auto& slot = cache[{n, d}];
  if (!slot) {
    Rng rng(static_cast<std::uint64_t>(n) * 131 + static_cast<std::uint64_t>(d));
    slot = std::make_unique<Fixture>();
    slot->inst = random_instance(n, 4LL * n, d, d, rng);
    slot->state = preprocess(slot->inst);
  }
  return *slot;
}

void BM_Preprocess(benchmark::State& st) {
  const auto n = static_cast<Vertex>(st.range(0));
  const auto d = static_cast<std::int32_t>(st.range(1));
  Rng rng(1);
  const Instance inst = random_instance(n, 4LL * n, d, d, rng);
  std::size_t words = 0;
  for (auto _ : st) {
    OracleState s = preprocess(inst);
    words = s.space_words();
    benchmark::DoNotOptimize(words);
  }
  st.counters["space_words"] = static_cast<double>(words);
  st.SetComplexityN(4LL * n * d);
}
BENCHMARK(BM_Preprocess)->Args({1000, 4})->Args({10000, 4})->Args({100000, 4})->Args({10000, 16})
    ->Unit(benchmark::kMillisecond);

void BM_Update(benchmark::State& st) {
  const auto n = static_cast<Vertex>(st.range(0));
  const auto eta = static_cast<std::int32_t>(st.range(1));
  const Fixture& f = fixture(n, 16);
  Rng rng(2);
  std::vector<UpdateRequest> reqs;
  for (int k = 0; k < 64; ++k) reqs.push_back(random_update(f.inst, eta, UpdateRegime::kAny, rng));
  std::size_t k = 0;
  UpdateCounters total;
  for (auto _ : st) {
    UpdateState up = apply_update(f.state, reqs[k++ % reqs.size()]);
    total.q2d_ti += up.counters.q2d_ti;
    total.q2d_tu += up.counters.q2d_tu;
    total.bin_searches += up.counters.bin_searches;
    benchmark::DoNotOptimize(up.m_label.data());
  }
  const auto per = benchmark::Counter::kAvgIterations;
  st.counters["q2d_ti"] = benchmark::Counter(static_cast<double>(total.q2d_ti), per);
  st.counters["q2d_tu"] = benchmark::Counter(static_cast<double>(total.q2d_tu), per);
  st.counters["bin_searches"] = benchmark::Counter(static_cast<double>(total.bin_searches), per);
}
BENCHMARK(BM_Update)
    ->Args({1000, 2})->Args({10000, 2})->Args({100000, 2})
    ->Args({10000, 4})->Args({10000, 8})->Args({10000, 16})
    ->Unit(benchmark::kMicrosecond);

void BM_Query(benchmark::State& st) {
  const auto n = static_cast<Vertex>(st.range(0));
  const auto eta = static_cast<std::int32_t>(st.range(1));
  const Fixture& f = fixture(n, 16);
  Rng rng(3);
  const UpdateRequest req = random_update(f.inst, eta, UpdateRegime::kAny, rng);
  const UpdateState up = apply_update(f.state, req);
  const auto alive = survivors(f.inst, req);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (int k = 0; k < 4096; ++k) {
    pairs.emplace_back(alive[uniform_below(rng, alive.size())], alive[uniform_below(rng, alive.size())]);
  }
  QueryContext ctx(f.state, up);
  std::size_t k = 0;
  for (auto _ : st) {
    const auto& [a, b] = pairs[k++ % pairs.size()];
    benchmark::DoNotOptimize(ctx.connected(a, b));
  }
  st.counters["probes"] = benchmark::Counter(static_cast<double>(ctx.counters().probes()),
                                             benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_Query)->Args({1000, 2})->Args({10000, 2})->Args({100000, 2})->Args({10000, 16});

void BM_RangeEmptiness(benchmark::State& st) {
  const auto m = static_cast<std::size_t>(st.range(0));
  Rng rng(4);
  std::vector<Point2> pts(m);
  for (auto& p : pts) {
    p = {static_cast<std::int32_t>(uniform_below(rng, m)), static_cast<std::int32_t>(uniform_below(rng, m))};
  }
  const RangeEmptiness2D s(pts);
  const auto span = static_cast<std::int32_t>(std::max<std::size_t>(1, m / 64));
  std::int32_t x = 0;
  for (auto _ : st) {
    const std::int32_t y = (x * 7919) % static_cast<std::int32_t>(m);
    benchmark::DoNotOptimize(s.any(x, x + span, y, y + span));
    x = (x + 104729) % static_cast<std::int32_t>(m);
  }
}
BENCHMARK(BM_RangeEmptiness)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 18);

}  // namespace
}  // namespace pvf

BENCHMARK_MAIN();
