#include "purify/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "purify/config.hpp"
#include "purify/eval.hpp"
#include "purify/metrics.hpp"
#include "purify/propcheck.hpp"
#include "purify/surface.hpp"
#include "purify/translate.hpp"
#include "purify/typing.hpp"

namespace purify {

namespace {

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::ConfigError, "cannot read '" + path + "'");
  buf << f.rdbuf();
  return buf.str();
}

Program load(const std::string& path, std::istream& in) { return load_program(read_input(path, in)); }

Ty check_program(const Program& p) {
  TypeEnv env(p.sig);
  if (p.block == Block::Purify) return type_of(p.term, Label::Src, env);
  return type_of(p.term, Label::Tgt, env, CheckOptions{true});
}

Program require_source(Program p, const char* command) {
  if (p.block != Block::Purify) {
    throw Error(ErrorKind::LabelMismatch, std::string(command) + " needs a purify block");
  }
  check_program(p);
  return p;
}

TermPtr translate_as(const TermPtr& src, const std::string& mode) {
  if (mode == "opt") return pure_translate(src);
  if (mode == "naive") return naive_translate(src);
  if (mode == "seq") return seq_translate(src);
  throw Error(ErrorKind::ConfigError, "unknown mode '" + mode + "'");
}

struct Measures {
  std::string form;
  Cost effect;
  long span = 0;
  long work = 0;
};

Measures measure(const std::string& form, const TermPtr& e, Label label, const Signature& sig) {
  return {form, effect_cost(e, label, sig), span(e), work(e)};
}

int cmd_check(const std::string& file, std::istream& in, std::ostream& out) {
  Program p = load(file, in);
  out << check_program(p).show() << "\n";
  return 0;
}

int cmd_translate(const std::string& file, const std::string& mode, bool norm, bool reassoc,
                  bool term_only, std::istream& in, std::ostream& out) {
  Program p = require_source(load(file, in), "translate");
  TermPtr t = translate_as(p.term, mode);
  if (norm) t = normalize(t, NormalizeOptions{reassoc});
  if (term_only) {
    out << pretty(t) << "\n";
  } else {
    out << pretty_program(p.sig, t, Block::Target);
  }
  return 0;
}

int cmd_analyze(const std::string& file, bool json, std::istream& in, std::ostream& out) {
  Program p = load(file, in);
  check_program(p);
  std::vector<Measures> rows;
  if (p.block == Block::Purify) {
    rows.push_back(measure("src", p.term, Label::Src, p.sig));
    for (const char* mode : {"opt", "naive", "seq"}) {
      rows.push_back(measure(mode, translate_as(p.term, mode), Label::Tgt, p.sig));
    }
  } else {
    rows.push_back(measure("tgt", p.term, Label::Tgt, p.sig));
  }
  if (json) {
    nlohmann::ordered_json j, syn;
    j["v"] = 1;
    for (const auto& r : rows) {
      j["span_" + r.form] = r.effect.span;
      j["work_" + r.form] = r.effect.work;
      syn["span_" + r.form] = r.span;
      syn["work_" + r.form] = r.work;
    }
    j["syntactic"] = syn;
    out << j.dump() << "\n";
    return 0;
  }
  out << std::left << std::setw(8) << "form" << std::right << std::setw(6) << "span" << std::setw(6)
      << "work" << std::setw(16) << "syntactic span" << std::setw(16) << "syntactic work" << "\n";
  for (const auto& r : rows) {
    out << std::left << std::setw(8) << r.form << std::right << std::setw(6) << r.effect.span
        << std::setw(6) << r.effect.work << std::setw(16) << r.span << std::setw(16) << r.work << "\n";
  }
  return 0;
}

struct RunOptions {
  std::string monad;
  std::string mode = "src";
  std::string config;
  std::string dot;
  double uniform_latency = -1;
  bool json = false;
};

int cmd_run(const std::string& file, const RunOptions& o, std::istream& in, std::ostream& out) {
  Program p = load(file, in);
  check_program(p);
  Monad m = monad_by_name(o.monad);
  if (!m) throw Error(ErrorKind::ConfigError, "unknown monad '" + o.monad + "'");
  EffectConfig cfg;
  if (!o.config.empty()) {
    cfg = parse_effect_config(read_input(o.config, in));
    validate_effect_config(cfg, p.sig);
  }
  if (o.uniform_latency >= 0) {
    for (const auto& d : p.sig.consts()) {
      if (d.kind == ConstKind::Effectful) cfg.latency_ms[d.name] = o.uniform_latency;
    }
  }
  TermPtr term = p.term;
  Label label = Label::Src;
  if (p.block == Block::Target) {
    label = Label::Tgt;
  } else if (o.mode != "src") {
    term = translate_as(p.term, o.mode);
    label = Label::Tgt;
  }
  Value v = eval(term, label, m, build_const_env(p.sig, m, cfg.behavior));
  nlohmann::ordered_json j;
  j["v"] = 1;
  j["monad"] = m->name;
  j["mode"] = p.block == Block::Target ? "tgt" : o.mode;
  if (v.kind() != Value::Kind::Eff) {
    j["result"] = show_value(v);
  } else if (auto trace = as_trace(v.as_action())) {
    j["result"] = show_value(trace->result);
    j["dyn_span"] = dyn_span(trace->dag);
    j["dyn_work"] = dyn_work(trace->dag);
    if (!cfg.latency_ms.empty()) j["latency_ms"] = simulate_latency(trace->dag, cfg.latency_ms);
    if (!o.dot.empty()) {
      if (o.dot == "-") {
        out << to_dot(trace->dag);
      } else {
        std::ofstream f(o.dot);
        if (!f) throw Error(ErrorKind::ConfigError, "cannot write '" + o.dot + "'");
        f << to_dot(trace->dag);
      }
    }
  } else {
    j["result"] = m->describe(v.as_action());
  }
  if (o.json) {
    out << j.dump() << "\n";
    return 0;
  }
  for (const auto& [key, value] : j.items()) {
    if (key == "v") continue;
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  return 0;
}

int cmd_laws(const std::string& name, int trials, std::uint64_t seed, bool json, std::ostream& out) {
  Monad m = monad_by_name(name);
  if (!m) throw Error(ErrorKind::ConfigError, "unknown monad '" + name + "'");
  if (trials < 1) throw Error(ErrorKind::ConfigError, "--trials must be at least 1");
  LawReport r = check_laws(m, trials, seed);
  if (json) {
    nlohmann::ordered_json j;
    j["v"] = 1;
    j["monad"] = r.monad;
    j["seed"] = r.seed;
    j["laws"] = nlohmann::json::array();
    for (const auto& l : r.laws) {
      j["laws"].push_back({{"law", l.law},
                           {"trials", l.trials},
                           {"failures", l.failures},
                           {"counterexample", l.counterexample}});
    }
    out << j.dump() << "\n";
  } else {
    out << "monad " << r.monad << ", seed " << r.seed << "\n";
    for (const auto& l : r.laws) {
      out << "  " << std::left << std::setw(8) << l.law << (l.failures ? "FAIL " : "pass ")
          << l.trials - l.failures << "/" << l.trials;
      if (l.failures) out << "  " << l.counterexample;
      out << "\n";
    }
  }
  return r.all_pass() ? 0 : 2;
}

int cmd_suite(const std::string& name, int trials, int depth, std::uint64_t seed,
              const std::vector<std::string>& monads, bool json, std::ostream& out) {
  GenConfig cfg;
  cfg.max_depth = depth;
  cfg.seed = seed;
  SuiteOptions opts;
  opts.monads = monads;
  SuiteReport r = run_suite(name, cfg, trials, opts);
  if (json) {
    out << r.to_json() << "\n";
  } else {
    out << "suite " << r.suite << ": " << r.passes << "/" << r.trials << " passed (seed " << r.seed
        << ")\n";
    for (const auto& f : r.failures) {
      out << "  seed " << f.seed << ": " << f.detail << "\n";
      if (!f.term_pretty.empty()) out << "    " << f.term_pretty << "\n";
    }
  }
  return r.ok() ? 0 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Translate direct-style effect programs into applicative/monadic combinators"};
  app.require_subcommand(1);

  std::string file;
  bool json = false;

  auto* check = app.add_subcommand("check", "Parse and typecheck; print the program type");
  check->add_option("FILE", file, "Program file, or - for stdin")->required();

  std::string mode = "opt";
  bool norm = false, reassoc = false, term_only = false;
  auto* translate = app.add_subcommand("translate", "Print the target program");
  translate->add_option("FILE", file)->required();
  translate->add_option("--mode", mode)->check(CLI::IsMember({"opt", "naive", "seq"}));
  translate->add_flag("--normalize", norm, "Rewrite the output with the monad laws");
  translate->add_flag("--reassoc", reassoc, "Also reassociate ap chains when normalizing");
  translate->add_flag("--term-only", term_only, "Print the term without declarations");

  auto* analyze = app.add_subcommand("analyze", "Span and work of the source and its translations");
  analyze->add_option("FILE", file)->required();
  analyze->add_flag("--json", json);

  RunOptions run_opts;
  auto* run = app.add_subcommand("run", "Evaluate under a monad");
  run->add_option("FILE", file)->required();
  run->add_option("--monad", run_opts.monad)
      ->required()
      ->check(CLI::IsMember({"option", "state", "writer", "trace", "writer-rtl"}));
  run->add_option("--mode", run_opts.mode)->check(CLI::IsMember({"src", "opt", "naive", "seq"}));
  run->add_option("--config", run_opts.config, "Effect behaviour JSON");
  run->add_option("--dot", run_opts.dot, "Write the trace as Graphviz (- for stdout)");
  run->add_option("--uniform-latency", run_opts.uniform_latency, "Latency in ms for every effect");
  run->add_flag("--json", run_opts.json);

  std::string monad;
  int trials = 1000;
  std::uint64_t seed = 42;
  auto* laws = app.add_subcommand("laws", "Check the monad laws on random inputs");
  laws->add_option("--monad", monad)->required();
  laws->add_option("--trials", trials);
  laws->add_option("--seed", seed);
  laws->add_flag("--json", json);

  std::string suite_name;
  int depth = 5;
  std::vector<std::string> monads;
  auto* suite = app.add_subcommand("suite", "Run a property suite");
  suite->add_option("NAME", suite_name)->required()->check(CLI::IsMember(suite_names()));
  suite->add_option("--trials", trials);
  suite->add_option("--depth", depth);
  suite->add_option("--seed", seed);
  suite->add_option("--monads", monads)->delimiter(',');
  suite->add_flag("--json", json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (check->parsed()) return cmd_check(file, in, out);
    if (translate->parsed()) return cmd_translate(file, mode, norm, reassoc, term_only, in, out);
    if (analyze->parsed()) return cmd_analyze(file, json, in, out);
    if (run->parsed()) return cmd_run(file, run_opts, in, out);
    if (laws->parsed()) return cmd_laws(monad, trials, seed, json, out);
    if (suite->parsed()) return cmd_suite(suite_name, trials, depth, seed, monads, json, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace purify
