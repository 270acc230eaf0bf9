#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pvf::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDataError = 2, kMismatch = 3 };

struct RunOptions {
  std::string instance;
  std::string workload;
  std::string out;        // empty: stdout
  bool verify = false;    // check every answer against BFS
  bool counters = false;  // CounterReport lines on the error stream
  bool timing = true;
};

struct GenOptions {
  std::string kind = "graph";  // graph | setdisj
  std::string out;             // path prefix
  std::int32_t n = 16;
  std::int64_t m = 32;
  std::int32_t d = 4;
  std::int32_t eta = 2;
  std::int32_t updates = 4;
  std::int32_t queries = 8;
  double gamma = 0.5;
  std::uint64_t seed = 1;
};

struct BenchOptions {
  std::string instance;  // empty: generate from n, m, d
  std::string out;
  std::int32_t n = 2000;
  std::int64_t m = 8000;
  std::int32_t d = 64;
  std::vector<std::int32_t> etas{2, 4, 8, 16};
  std::int32_t updates = 5;   // per eta
  std::int32_t queries = 100; // per update
  std::uint64_t seed = 1;
  bool timing = true;
};

struct SetDisjOptions {
  std::string input;
  std::string out;
  bool counters = false;
};

int cmd_run(const RunOptions& opt, std::ostream& out, std::ostream& err);
int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err);
int cmd_setdisj(const SetDisjOptions& opt, std::ostream& out, std::ostream& err);

// Parses argv and dispatches; returns the process exit code.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pvf::cli
