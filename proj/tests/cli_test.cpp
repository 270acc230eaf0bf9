#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "pvf/cli.hpp"
#include "pvf/io.hpp"
#include "support.hpp"

namespace pvf {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "pvf");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("pvf_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& contents) {
    const std::string p = path(name);
    write_file(p, contents);
    return p;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(Cli, RunX1) {
  const std::string inst = file("x1.instance", serialize_instance(testing::x1_instance()));
  const std::string work = file("x1.workload", "U 1 1 5 6\nQ 4 6\nU 1 0 2\nQ 0 4\nQ 5 7\n");
  const Result r = invoke({"run", inst, work, "--verify"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "1\n0\n1\n");
}

TEST_F(Cli, RunEmptyWorkload) {
  const std::string inst = file("x1.instance", serialize_instance(testing::x1_instance()));
  const Result r = invoke({"run", inst, file("empty.workload", "")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "");
}

TEST_F(Cli, RunQueryBeforeUpdate) {
  const std::string inst = file("x1.instance", serialize_instance(testing::x1_instance()));
  const Result r = invoke({"run", inst, file("w", "Q 4 6\n")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("no update applied"), std::string::npos);
}

TEST_F(Cli, RunDataErrors) {
  const std::string inst = file("x1.instance", serialize_instance(testing::x1_instance()));
  EXPECT_EQ(invoke({"run", inst, file("w1", "U 1 0 3\n")}).code, 2);       // predicted vertex in removed
  EXPECT_EQ(invoke({"run", inst, file("w2", "U 0 0\nQ 3 4\n")}).code, 2);  // failed query vertex
  EXPECT_EQ(invoke({"run", inst, file("w3", "U 0\n")}).code, 2);
  EXPECT_EQ(invoke({"run", path("missing"), file("w4", "")}).code, 2);
  const Result r = invoke({"run", file("bad.instance", "3 1 1\n0 0\nP 0\n"), file("w5", "")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 1);
  EXPECT_EQ(invoke({"run"}).code, 1);
  EXPECT_EQ(invoke({"frobnicate"}).code, 1);
  EXPECT_EQ(invoke({"gen", "--n", "x", "--out", path("g")}).code, 1);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST_F(Cli, GenDeterministicAndValid) {
  const std::vector<std::string> base{"gen", "--n", "16", "--m", "32", "--d", "4", "--eta", "2", "--seed", "7"};
  auto a = base;
  a.insert(a.end(), {"--out", path("a")});
  auto b = base;
  b.insert(b.end(), {"--out", path("b")});
  ASSERT_EQ(invoke(a).code, 0);
  ASSERT_EQ(invoke(b).code, 0);
  EXPECT_EQ(read_file(path("a.instance")), read_file(path("b.instance")));
  EXPECT_EQ(read_file(path("a.workload")), read_file(path("b.workload")));
  const Instance inst = parse_instance(read_file(path("a.instance")));
  EXPECT_NO_THROW(validate_instance(inst));
  const Result r = invoke({"run", path("a.instance"), path("a.workload"), "--verify"});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST_F(Cli, GenRejectsLargeEta) {
  const Result r = invoke({"gen", "--n", "16", "--m", "32", "--d", "2", "--eta", "5", "--out", path("z")});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(fs::exists(path("z.instance")));
}

TEST_F(Cli, GenSetDisjointness) {
  ASSERT_EQ(invoke({"gen", "--kind", "setdisj", "--n", "20", "--gamma", "0.5", "--seed", "3", "--out", path("s")}).code, 0);
  const Result r = invoke({"setdisj", path("s.setdisj")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("AGREE\n"), std::string::npos);
  EXPECT_EQ(r.out.find("DISAGREE"), std::string::npos);
}

TEST_F(Cli, SetDisjTiny) {
  const Result r = invoke({"setdisj", file("t", "2 3 2\n1 0\n1 1\n2 0 1\n0 1\n0 2\n")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0 1\nAGREE\n");
}

TEST_F(Cli, SetDisjEmptyQueries) {
  const Result r = invoke({"setdisj", file("t", "2 1 0\n1 0\n")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "AGREE\n");
}

TEST_F(Cli, SetDisjCounters) {
  const Result r = invoke({"setdisj", file("t", "2 3 1\n1 0\n1 1\n2 0 1\n1 2\n"), "--counters"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("\"eta\":2"), std::string::npos);
}

TEST_F(Cli, BenchDeterministicWithoutTiming) {
  const std::vector<std::string> args{"bench", "--n", "200", "--m", "800", "--d", "6", "--etas", "2,4",
                                      "--updates", "2", "--queries", "20", "--seed", "5", "--no-timing"};
  const Result a = invoke(args);
  const Result b = invoke(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  std::istringstream lines(a.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) ++count;
  EXPECT_EQ(count, 5);
  EXPECT_NE(a.out.find("\"q2d_ti\""), std::string::npos);
}

TEST_F(Cli, OutFlagWritesFile) {
  const std::string inst = file("x1.instance", serialize_instance(testing::x1_instance()));
  const std::string work = file("x1.workload", "U 1 1 5 6\nQ 4 6\n");
  const Result r = invoke({"run", inst, work, "--out", path("answers")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(read_file(path("answers")), "1\n");
}

}  // namespace
}  // namespace pvf
