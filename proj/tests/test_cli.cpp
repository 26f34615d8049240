#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "purify/cli.hpp"
#include "support.hpp"

using namespace purify;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string sample_path(const std::string& name) { return std::string(PURIFY_SAMPLES_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(Cli, CheckPrintsType) {
  Result r = run({"check", sample_path("two_fetch.pfy")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "(Str, Str)\n");
}

TEST(Cli, DiagnosticsExitOne) {
  Result r = run({"check", "-"}, "purify { (fun x -> fetch(x)!)(\"a\") }");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
  EXPECT_EQ(run({"check", "/nonexistent/file.pfy"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"run", sample_path("two_fetch.pfy"), "--monad", "list"}).code, 1);
}

TEST(Cli, AnalyzeTwoFetchJson) {
  Result r = run({"analyze", sample_path("two_fetch.pfy"), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["v"], 1);
  EXPECT_EQ(j["span_src"], 1);
  EXPECT_EQ(j["work_src"], 2);
  EXPECT_EQ(j["span_opt"], 1);
  EXPECT_EQ(j["work_opt"], 2);
  EXPECT_EQ(j["span_seq"], 2);
  EXPECT_EQ(j["work_seq"], 2);
}

TEST(Cli, AnalyzeTwoChainJson) {
  Result r = run({"analyze", sample_path("two_chain.pfy"), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["span_src"], 2);
  EXPECT_EQ(j["work_src"], 4);
  EXPECT_EQ(j["span_opt"], 2);
  EXPECT_EQ(j["work_opt"], 4);
  EXPECT_EQ(j["span_seq"], 4);
  EXPECT_EQ(j["work_seq"], 4);
  EXPECT_EQ(j["syntactic"]["span_opt"], 1);
}

TEST(Cli, AnalyzeTextTable) {
  Result r = run({"analyze", sample_path("two_chain.pfy")});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("seq"), std::string::npos);
}

TEST(Cli, TranslateRoundTripKeepsMeasures) {
  for (const char* sample : {"two_fetch.pfy", "two_chain.pfy"}) {
    nlohmann::json in_memory = nlohmann::json::parse(run({"analyze", sample_path(sample), "--json"}).out);
    for (const char* mode : {"opt", "naive", "seq"}) {
      Result t = run({"translate", sample_path(sample), "--mode", mode});
      ASSERT_EQ(t.code, 0) << t.err;
      EXPECT_EQ(run({"check", "-"}, t.out).code, 0) << t.out;
      Result a = run({"analyze", "-", "--json"}, t.out);
      ASSERT_EQ(a.code, 0) << a.err << t.out;
      nlohmann::json j = nlohmann::json::parse(a.out);
      EXPECT_EQ(j["span_tgt"], in_memory[std::string("span_") + mode]) << sample << " " << mode;
      EXPECT_EQ(j["work_tgt"], in_memory[std::string("work_") + mode]) << sample << " " << mode;
      EXPECT_EQ(j["syntactic"]["span_tgt"], in_memory["syntactic"][std::string("span_") + mode]);
    }
  }
}

TEST(Cli, TranslateTermOnlyAndNormalize) {
  Result r = run({"translate", sample_path("two_fetch.pfy"), "--term-only"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("ap ", 0), 0u) << r.out;
  Result n = run({"translate", sample_path("two_chain.pfy"), "--normalize", "--reassoc"});
  EXPECT_EQ(n.code, 0) << n.err;
  EXPECT_EQ(run({"translate", "-"}, "target { pure () }").code, 1);
}

TEST(Cli, RunTraceLatency) {
  for (auto [mode, ms, span] : {std::tuple{"opt", 200, 2}, std::tuple{"seq", 400, 4}}) {
    Result r = run({"run", sample_path("two_chain.pfy"), "--monad", "trace", "--mode", mode,
                    "--uniform-latency", "100", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    nlohmann::json j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["latency_ms"], ms);
    EXPECT_EQ(j["dyn_span"], span);
    EXPECT_EQ(j["dyn_work"], 4);
  }
}

TEST(Cli, RunPipedSeqTranslation) {
  Result t = run({"translate", sample_path("two_chain.pfy"), "--mode", "seq"});
  Result r = run({"run", "-", "--monad", "trace", "--uniform-latency", "100", "--json"}, t.out);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["latency_ms"], 400);
}

TEST(Cli, RunWithConfigAndDot) {
  std::string cfg = temp_file("cfg.json",
                              R"({"latency_ms":{"fetch":50},"behavior":{"fetch":{"kind":"absent"}}})");
  Result opt = run({"run", sample_path("two_fetch.pfy"), "--monad", "option", "--config", cfg});
  EXPECT_EQ(opt.code, 0) << opt.err;
  EXPECT_NE(opt.out.find("absent"), std::string::npos) << opt.out;
  Result tr = run({"run", sample_path("two_fetch.pfy"), "--monad", "trace", "--config", cfg,
                   "--dot", "-"});
  EXPECT_EQ(tr.code, 0) << tr.err;
  EXPECT_NE(tr.out.find("digraph"), std::string::npos);
  EXPECT_NE(tr.out.find("latency_ms: 50"), std::string::npos) << tr.out;
  std::string bad = temp_file("bad.json", R"({"latency_ms":{"nope":1}})");
  EXPECT_EQ(run({"run", sample_path("two_fetch.pfy"), "--monad", "trace", "--config", bad}).code, 1);
}

TEST(Cli, RunEveryMonad) {
  for (const char* m : {"option", "state", "writer", "trace", "writer-rtl"}) {
    Result r = run({"run", sample_path("two_chain.pfy"), "--monad", m, "--json"});
    EXPECT_EQ(r.code, 0) << m << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out)["monad"], m);
  }
}

TEST(Cli, LawsAndSuites) {
  Result l = run({"laws", "--monad", "trace", "--trials", "100", "--json"});
  EXPECT_EQ(l.code, 0);
  EXPECT_EQ(nlohmann::json::parse(l.out)["laws"].size(), 7u);
  Result s = run({"suite", "types", "--trials", "50", "--json"});
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(nlohmann::json::parse(s.out)["passes"], 50);
  Result broken = run({"suite", "semantics", "--trials", "2000", "--depth", "6", "--monads", "writer-rtl"});
  EXPECT_EQ(broken.code, 2) << broken.out;
  EXPECT_EQ(run({"suite", "nope"}).code, 1);
  EXPECT_EQ(run({"laws", "--monad", "option", "--trials", "0"}).code, 1);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }
