#include "pvf/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <functional>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "pvf/errors.hpp"
#include "pvf/generate.hpp"
#include "pvf/io.hpp"
#include "pvf/query.hpp"
#include "pvf/reduction.hpp"
#include "pvf/reference.hpp"
#include "pvf/update.hpp"

namespace pvf::cli {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

std::int64_t micros_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
}

// Writes to the --out file when one is given, otherwise to `out`.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

template <class Parse>
auto parse_file(const std::string& path, Parse parse) {
  try {
    return parse(read_file(path));
  } catch (const FormatError& e) {
    throw FormatError(0, path + ": " + e.what());
  }
}

Json update_report(const UpdateState& up, bool timing) {
  const UpdateCounters& c = up.counters;
  Json j;
  j["kind"] = "update";
  j["eta"] = up.dec.eta;
  j["removed"] = up.dec.removed_count;
  j["restored"] = up.dec.num_restored();
  j["q2d_base"] = c.q2d_base;
  j["q2d_ti"] = c.q2d_ti;
  j["q2d_tu"] = c.q2d_tu;
  j["bin_searches"] = c.bin_searches;
  j["la_probes"] = c.la_probes;
  j["ancestor_tests"] = c.ancestor_tests;
  j["internal_components"] = up.dec.internal.size();
  j["m_edges"] = up.m.edges().size();
  j["update_micros"] = timing ? c.update_micros : 0;
  return j;
}

// Input and request errors map to the data-error exit code.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const FormatError& e) {
    err << "pvf: " << e.what() << '\n';
  } catch (const InvalidRequest& e) {
    err << "pvf: " << e.what() << '\n';
  }
  return kDataError;
}

}  // namespace

int cmd_run(const RunOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Instance inst = parse_file(opt.instance, [](const std::string& s) { return parse_instance(s); });
    const std::vector<WorkloadOp> ops = parse_file(opt.workload, [](const std::string& s) { return parse_workload(s); });
    const OracleState state = preprocess(inst);

    std::ostringstream answers;
    std::optional<UpdateState> current;
    std::vector<Vertex> dead;
    std::int64_t queries = 0;
    std::int64_t max_probes = 0;
    std::int64_t mismatches = 0;
    auto flush_counters = [&] {
      if (!opt.counters || !current) return;
      Json j = update_report(*current, opt.timing);
      j["queries"] = queries;
      j["max_query_probes"] = max_probes;
      err << j.dump() << '\n';
    };

    for (const WorkloadOp& op : ops) {
      if (op.kind == WorkloadOp::Kind::kUpdate) {
        flush_counters();
        try {
          current = apply_update(state, op.update);
        } catch (const InvalidRequest& e) {
          throw FormatError(0, opt.workload + ": line " + std::to_string(op.line) + ": " + e.what());
        }
        if (opt.verify) {
          dead = inst.predicted;
          for (Vertex v : op.update.restored) std::erase(dead, v);
          dead.insert(dead.end(), op.update.removed.begin(), op.update.removed.end());
        }
        queries = 0;
        max_probes = 0;
        continue;
      }
      if (!current) throw FormatError(0, opt.workload + ": line " + std::to_string(op.line) + ": no update applied");
      QueryContext ctx(state, *current);
      bool answer = false;
      try {
        answer = ctx.connected(op.s, op.t);
      } catch (const InvalidRequest& e) {
        throw FormatError(0, opt.workload + ": line " + std::to_string(op.line) + ": " + e.what());
      }
      ++queries;
      max_probes = std::max(max_probes, ctx.counters().probes());
      answers << (answer ? '1' : '0') << '\n';
      if (opt.verify && answer != reference::bfs_connected(inst.graph, dead, op.s, op.t)) {
        ++mismatches;
        err << "pvf: mismatch at " << opt.workload << ": line " << op.line << '\n';
      }
    }
    flush_counters();
    emit(opt.out, answers.str(), out);
    return mismatches == 0 ? kOk : kMismatch;
  });
}

int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opt.out.empty()) {
      err << "pvf: gen needs --out PREFIX\n";
      return kUsage;
    }
    if (opt.kind == "setdisj") {
      SetDisjointnessInstance inst;
      try {
        inst = generate_setdisjointness(opt.n, opt.gamma, opt.seed);
      } catch (const InvalidRequest& e) {
        err << "pvf: " << e.what() << '\n';
        return kUsage;
      }
      write_file(opt.out + ".setdisj", serialize_setdisjointness(inst));
      out << opt.out << ".setdisj\n";
      return kOk;
    }
    GenerateParams p;
    p.n = opt.n;
    p.m = opt.m;
    p.d = opt.d;
    p.eta = opt.eta;
    p.updates = opt.updates;
    p.queries = opt.queries;
    p.seed = opt.seed;
    Generated g;
    try {
      g = generate(p);
    } catch (const InvalidRequest& e) {
      err << "pvf: " << e.what() << '\n';
      return kUsage;
    }
    write_file(opt.out + ".instance", serialize_instance(g.instance));
    write_file(opt.out + ".workload", serialize_workload(g.workload));
    out << opt.out << ".instance\n" << opt.out << ".workload\n";
    return kOk;
  });
}

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Rng rng(opt.seed);
    const Instance inst = opt.instance.empty()
                              ? random_instance(opt.n, opt.m, opt.d, std::min(opt.d, opt.n), rng)
                              : parse_file(opt.instance, [](const std::string& s) { return parse_instance(s); });
    std::ostringstream lines;
    const auto t0 = Clock::now();
    const OracleState state = preprocess(inst);
    const std::int64_t pre_micros = micros_since(t0);
    Json head;
    head["kind"] = "preprocess";
    head["n"] = inst.graph.num_vertices();
    head["m"] = inst.graph.num_edges();
    head["d"] = inst.d;
    head["predicted"] = inst.predicted.size();
    head["space_words"] = state.space_words();
    head["preprocess_micros"] = opt.timing ? pre_micros : 0;
    lines << head.dump() << '\n';

    for (std::int32_t eta : opt.etas) {
      for (std::int32_t k = 0; k < opt.updates; ++k) {
        const UpdateRequest req = random_update(inst, eta, UpdateRegime::kAny, rng);
        const UpdateState up = apply_update(state, req);
        const std::vector<Vertex> alive = survivors(inst, req);
        QueryContext ctx(state, up);
        std::int64_t max_probes = 0;
        std::int64_t total_probes = 0;
        const auto q0 = Clock::now();
        for (std::int32_t q = 0; q < opt.queries && !alive.empty(); ++q) {
          ctx.reset_counters();
          ctx.connected(alive[uniform_below(rng, alive.size())], alive[uniform_below(rng, alive.size())]);
          max_probes = std::max(max_probes, ctx.counters().probes());
          total_probes += ctx.counters().probes();
        }
        const std::int64_t query_micros = micros_since(q0);
        Json j = update_report(up, opt.timing);
        j["queries"] = alive.empty() ? 0 : opt.queries;
        j["max_query_probes"] = max_probes;
        j["total_query_probes"] = total_probes;
        j["query_micros"] = opt.timing ? query_micros : 0;
        lines << j.dump() << '\n';
      }
    }
    emit(opt.out, lines.str(), out);
    return kOk;
  });
}

int cmd_setdisj(const SetDisjOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SetDisjointnessInstance inst =
        parse_file(opt.input, [](const std::string& s) { return parse_setdisjointness(s); });
    const ReductionGraph reduction = build_reduction_graph(inst);
    const OracleState state = preprocess(reduction.instance);
    const SetDisjointnessRun run = solve_setdisjointness(state, reduction, inst);
    const std::vector<bool> naive = naive_disjointness(inst);

    std::ostringstream text;
    for (std::size_t q = 0; q < run.answers.size(); ++q) {
      text << (q ? " " : "") << (run.answers[q] ? '1' : '0');
      if (opt.counters) {
        Json j;
        j["kind"] = "query";
        j["i"] = inst.queries[q].first;
        j["j"] = inst.queries[q].second;
        j["eta"] = run.etas[q];
        j["answer"] = run.answers[q] ? 1 : 0;
        err << j.dump() << '\n';
      }
    }
    if (!run.answers.empty()) text << '\n';
    const bool agree = run.answers == naive;
    text << (agree ? "AGREE" : "DISAGREE") << '\n';
    emit(opt.out, text.str(), out);
    return agree ? kOk : kMismatch;
  });
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Connectivity oracle under predicted vertex failures"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  std::string out_path;
  app.add_option("--seed", seed, "Random seed for gen and bench");

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "Preprocess an instance and execute a workload");
  run_cmd->add_option("instance", run.instance, "Instance file")->required();
  run_cmd->add_option("workload", run.workload, "Workload file")->required();
  run_cmd->add_flag("--verify", run.verify, "Check every answer against breadth-first search");
  run_cmd->add_flag("--counters", run.counters, "Print per-update counters as JSON lines on stderr");
  run_cmd->add_flag("--no-timing", [&](std::int64_t) { run.timing = false; }, "Report zero for wall-clock fields");
  run_cmd->add_option("--out", out_path, "Write answers here instead of stdout");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance and workload");
  gen_cmd->add_option("--kind", gen.kind, "graph or setdisj")->check(CLI::IsMember({"graph", "setdisj"}));
  gen_cmd->add_option("--out", out_path, "Output path prefix")->required();
  gen_cmd->add_option("--n", gen.n, "Vertices (graph) or family size (setdisj)");
  gen_cmd->add_option("--m", gen.m, "Edges");
  gen_cmd->add_option("--d", gen.d, "Failure bound; the prediction has this many vertices");
  gen_cmd->add_option("--eta", gen.eta, "Symmetric difference of every update");
  gen_cmd->add_option("--updates", gen.updates, "Number of updates");
  gen_cmd->add_option("--queries", gen.queries, "Queries per update");
  gen_cmd->add_option("--gamma", gen.gamma, "Set-disjointness shape parameter in (0, 1)");
  gen_cmd->add_option("--seed", seed, "Random seed");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Emit counter reports over an eta schedule");
  bench_cmd->add_option("--instance", bench.instance, "Instance file instead of a generated graph");
  bench_cmd->add_option("--n", bench.n, "Vertices");
  bench_cmd->add_option("--m", bench.m, "Edges");
  bench_cmd->add_option("--d", bench.d, "Failure bound");
  bench_cmd->add_option("--etas", bench.etas, "Comma-separated eta schedule")->delimiter(',');
  bench_cmd->add_option("--updates", bench.updates, "Updates per eta");
  bench_cmd->add_option("--queries", bench.queries, "Queries per update");
  bench_cmd->add_option("--seed", seed, "Random seed");
  bench_cmd->add_flag("--no-timing", [&](std::int64_t) { bench.timing = false; }, "Report zero for wall-clock fields");
  bench_cmd->add_option("--out", out_path, "Write JSON lines here instead of stdout");

  SetDisjOptions sd;
  auto* sd_cmd = app.add_subcommand("setdisj", "Answer set-disjointness queries through the oracle");
  sd_cmd->add_option("input", sd.input, "Set-disjointness file")->required();
  sd_cmd->add_flag("--counters", sd.counters, "Print per-query JSON lines on stderr");
  sd_cmd->add_option("--out", out_path, "Write answers here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  if (run_cmd->parsed()) {
    run.out = out_path;
    return cmd_run(run, out, err);
  }
  if (gen_cmd->parsed()) {
    gen.out = out_path;
    gen.seed = seed;
    return cmd_gen(gen, out, err);
  }
  if (bench_cmd->parsed()) {
    bench.out = out_path;
    bench.seed = seed;
    return cmd_bench(bench, out, err);
  }
  sd.out = out_path;
  return cmd_setdisj(sd, out, err);
}

}  // namespace pvf::cli
