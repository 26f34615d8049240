#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "purify/cli.hpp"
#include "purify/eval.hpp"
#include "purify/metrics.hpp"
#include "purify/propcheck.hpp"
#include "purify/surface.hpp"
#include "purify/translate.hpp"
#include "support.hpp"

using namespace purify;

namespace {

struct Outcome {
  bool ok;
  std::string note;
};

nlohmann::json analyze(const std::string& sample) {
  std::istringstream in;
  std::ostringstream out, err;
  int code = run_cli({"analyze", std::string(PURIFY_SAMPLES_DIR) + "/" + sample, "--json"}, in, out, err);
  if (code != 0) throw std::runtime_error("analyze failed: " + err.str());
  return nlohmann::json::parse(out.str());
}

GenConfig gen(int depth) {
  GenConfig cfg;
  cfg.max_depth = depth;
  cfg.seed = 42;
  return cfg;
}

Outcome suite(const std::string& name, int trials, int depth, const SuiteOptions& opts = {}) {
  SuiteReport r = run_suite(name, gen(depth), trials, opts);
  std::string note = name + " " + std::to_string(r.passes) + "/" + std::to_string(r.trials);
  if (!r.failures.empty()) note += ", first: " + r.failures.front().detail;
  return {r.ok(), note};
}

Outcome criterion1() {
  nlohmann::json j = analyze("two_fetch.pfy");
  bool ok = j["span_src"] == 1 && j["work_src"] == 2 && j["span_opt"] == 1 && j["work_opt"] == 2;
  return {ok, "src " + j["span_src"].dump() + "/" + j["work_src"].dump() + ", opt " +
                  j["span_opt"].dump() + "/" + j["work_opt"].dump()};
}

Outcome criterion2() {
  Program p = load_program(test::sample("two_chain.pfy"));
  TermPtr want = parse_term(test::golden("two_chain")["opt_term"].get<std::string>(), p.sig, Label::Tgt);
  bool same = alpha_eq(pure_translate(p.term), want);
  nlohmann::json j = analyze("two_chain.pfy");
  bool ok = same && j["span_opt"] == 2 && j["work_opt"] == 4 && j["span_seq"] == 4;
  return {ok, std::string("term ") + (same ? "matches" : "differs") + ", opt " + j["span_opt"].dump() +
                  "/" + j["work_opt"].dump() + ", seq span " + j["span_seq"].dump()};
}

Outcome criterion7() {
  Outcome a = suite("effect_free", 5000, 6);
  Outcome b = suite("relabel", 5000, 6);
  return {a.ok && b.ok, a.note + "; " + b.note};
}

Outcome criterion8() {
  std::string note;
  bool ok = true;
  for (const auto& m : builtin_monads()) {
    LawReport r = check_laws(m, 1000, 42);
    ok = ok && r.all_pass();
    note += m->name + (r.all_pass() ? " lawful; " : " UNLAWFUL; ");
  }
  SuiteOptions broken;
  broken.monads = {"writer-rtl"};
  SuiteReport r = run_suite("semantics", gen(6), 2000, broken);
  int found = r.trials - r.passes;
  note += "writer-rtl counterexamples " + std::to_string(found);
  if (!r.failures.empty()) note += " e.g. " + r.failures.front().term_pretty;
  return {ok && found >= 1, note};
}

Outcome criterion9() {
  Program p = load_program(test::sample("two_chain.pfy"));
  Monad m = trace_monad();
  ConstEnv env = build_const_env(p.sig, m);
  std::map<std::string, double> lat;
  for (const auto& d : p.sig.consts()) {
    if (d.kind == ConstKind::Effectful) lat[d.name] = 100;
  }
  bool ok = true;
  std::string note;
  for (auto [mode, want] : {std::pair{"opt", 200.0}, std::pair{"seq", 400.0}}) {
    TermPtr t = std::string(mode) == "opt" ? pure_translate(p.term) : seq_translate(p.term);
    auto trace = as_trace(eval(t, Label::Tgt, m, env).as_action());
    double ms = simulate_latency(trace->dag, lat);
    Cost c = effect_cost(t, Label::Tgt, p.sig);
    bool agree = dyn_span(trace->dag) == c.span && dyn_work(trace->dag) == c.work;
    ok = ok && ms == want && agree;
    if (!note.empty()) note += "; ";
    note += std::string(mode) + " " + std::to_string(static_cast<long>(ms)) + "ms span/work " +
            std::to_string(dyn_span(trace->dag)) + "/" + std::to_string(dyn_work(trace->dag)) +
            (agree ? " = static" : " != static");
  }
  return {ok, note};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* what;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "two-fetch pair span/work", 1, criterion1},
      {2, "two-chain translation and span/work", 1, criterion2},
      {3, "PURE preserves types", 60, [] { return suite("types", 10000, 6); }},
      {4, "PURE preserves semantics", 120, [] { return suite("semantics", 2000, 6); }},
      {5, "PURE preserves span and work", 60, [] { return suite("span_work", 10000, 6); }},
      {6, "AP/JOIN semantics and bounds", 60, [] { return suite("smart_ctors", 5000, 6); }},
      {7, "common terms effect-free, relabel sound", 30, criterion7},
      {8, "law gate and broken monad detection", 1e9, criterion8},
      {9, "trace latency 200ms vs 400ms", 1e9, criterion9},
      {10, "normalizer soundness", 120, [] { return suite("normalize", 2000, 6); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs < c.limit_s;
    bool pass = o.ok && in_time;
    failed += !pass;
    std::ostringstream time;
    time.precision(3);
    time << std::fixed << secs << "s";
    std::cout << (pass ? "PASS" : "FAIL") << " " << c.id << " " << c.what << " (" << o.note << ", "
              << time.str() << (in_time ? "" : " over limit") << ")\n";
  }
  return failed == 0 ? 0 : 1;
}
