#include "purify/propcheck.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include <nlohmann/json.hpp>

#include "purify/eval.hpp"
#include "purify/metrics.hpp"
#include "purify/monad.hpp"
#include "purify/pretty.hpp"
#include "purify/translate.hpp"
#include "purify/typing.hpp"

namespace purify {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr double kLeafFirst = 0.4;
constexpr double kEachFirst = 0.3;
constexpr long kGenBudget = 20000;

class TermGen {
 public:
  TermGen(Signature sig, std::uint64_t seed) : sig_(std::move(sig)), rng_(seed) {}

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  /// Unit, Str, pairs, Eff-free functions and effects over base types.
  Ty small_type(int level) {
    if (level <= 0) return pick(3) == 0 ? Ty::unit() : Ty::str();
    switch (pick(10)) {
      case 0:
      case 1: return Ty::unit();
      case 2:
      case 3:
      case 4: return Ty::str();
      case 5:
      case 6: return Ty::prod(small_type(level - 1), small_type(level - 1));
      case 7: return Ty::arrow(small_type(level - 1), small_type(level - 1));
      case 8: return Ty::arrow(Ty::str(), Ty::eff(Ty::str()));
      default: return Ty::eff(small_type(0));
    }
  }

  /// Default goal: mostly data types, where marks can appear at the top.
  Ty goal_type() {
    switch (pick(10)) {
      case 0: return Ty::unit();
      case 1:
      case 2:
      case 3: return Ty::str();
      case 4:
      case 5:
      case 6: return Ty::prod(small_type(1), small_type(0));
      case 7: return Ty::arrow(small_type(0), small_type(1));
      default: return small_type(2);
    }
  }

  TermPtr term(Label label, const Ty& ty, int depth) {
    budget_ = kGenBudget;
    root_depth_ = depth;
    TermPtr t = gen(label, ty, depth);
    if (!t) {
      throw Error(ErrorKind::Unsatisfiable, "no " + std::string(to_string(label)) + " term of type " +
                                                ty.show() + " within depth " + std::to_string(depth));
    }
    return t;
  }

  TermPtr gen(Label label, const Ty& ty, int depth) {
    if (depth < 1 || --budget_ < 0) return nullptr;
    enum Kind { Leaf, Prd, Lam, Fst, Snd, Call, Beta, Each, Pure, Map, Ap, Join };
    std::vector<Kind> compounds;
    if (depth > 1) {
      if (ty.is(Ty::Kind::Prod)) compounds.push_back(Prd);
      if (ty.is(Ty::Kind::Arrow)) compounds.push_back(Lam);
      compounds.insert(compounds.end(), {Fst, Snd, Call, Beta});
      if (label == Label::Tgt && ty.is(Ty::Kind::Eff)) {
        compounds.insert(compounds.end(), {Pure, Map, Ap, Join, Pure, Map, Ap});
      }
      std::shuffle(compounds.begin(), compounds.end(), rng_);
      if (label == Label::Src) compounds.insert(compounds.begin() + pick(static_cast<int>(compounds.size()) + 1), Each);
    }
    // A mark is tried before anything else with probability kEachFirst. The
    // root is a leaf only when nothing else fits.
    bool root = depth == root_depth_;
    bool each_first = label == Label::Src && depth > 1 && chance(kEachFirst);
    std::vector<Kind> order;
    if (each_first) {
      order.push_back(Each);
      for (Kind k : compounds) {
        if (k != Each) order.push_back(k);
      }
      order.push_back(Leaf);
    } else if ((!root && chance(kLeafFirst)) || compounds.empty()) {
      order.push_back(Leaf);
      order.insert(order.end(), compounds.begin(), compounds.end());
    } else {
      order = compounds;
      order.push_back(Leaf);
    }
    for (Kind k : order) {
      TermPtr t;
      switch (k) {
        case Leaf: t = leaf(label, ty); break;
        case Prd: t = binary(label, ty.left(), ty.right(), depth, mk::prd); break;
        case Lam: t = lambda(label, ty, depth); break;
        case Fst: t = project(label, ty, depth, true); break;
        case Snd: t = project(label, ty, depth, false); break;
        case Call: t = call(label, ty, depth); break;
        case Beta: {
          Ty a = small_type(1);
          TermPtr f = gen(label, Ty::arrow(a, ty), depth - 1);
          TermPtr x = f ? gen(label, a, depth - 1) : nullptr;
          if (x) t = mk::app(f, x, label);
          break;
        }
        case Each: {
          TermPtr inner = gen(Label::Src, Ty::eff(ty), depth - 1);
          if (inner) t = mk::each(inner);
          break;
        }
        case Pure: {
          TermPtr inner = gen(Label::Com, ty.inner(), depth - 1);
          if (inner) t = mk::pure(inner);
          break;
        }
        case Map: {
          Ty a = small_type(1);
          TermPtr f = gen(Label::Tgt, Ty::arrow(a, ty.inner()), depth - 1);
          TermPtr x = f ? gen(Label::Tgt, Ty::eff(a), depth - 1) : nullptr;
          if (x) t = mk::map(f, x);
          break;
        }
        case Ap: {
          Ty a = small_type(1);
          TermPtr f = gen(Label::Tgt, Ty::eff(Ty::arrow(a, ty.inner())), depth - 1);
          TermPtr x = f ? gen(Label::Tgt, Ty::eff(a), depth - 1) : nullptr;
          if (x) t = mk::ap(f, x);
          break;
        }
        case Join: {
          TermPtr inner = gen(Label::Tgt, Ty::eff(ty), depth - 1);
          if (inner) t = mk::join(inner);
          break;
        }
      }
      if (t) return t;
      if (budget_ < 0) return nullptr;
    }
    return nullptr;
  }

 private:
  TermPtr leaf(Label label, const Ty& ty) {
    std::vector<TermPtr> options;
    for (const auto& [name, vty] : scope_) {
      if (vty == ty) options.push_back(mk::var(name, label));
    }
    if (ty.is(Ty::Kind::Unit)) options.push_back(mk::unt(label));
    if (ty.is(Ty::Kind::Str)) {
      static const char* words[] = {"a", "b", "foo", "bar", ""};
      options.push_back(mk::lit(words[pick(5)], label));
    }
    for (const auto& d : sig_.consts()) {
      if (d.ty == ty) options.push_back(mk::cnst(d.name, label));
    }
    if (options.empty()) return nullptr;
    return options[pick(static_cast<int>(options.size()))];
  }

  using Binary = TermPtr (*)(TermPtr, TermPtr, Label);

  TermPtr binary(Label label, const Ty& a, const Ty& b, int depth, Binary make) {
    TermPtr l = gen(label, a, depth - 1);
    TermPtr r = l ? gen(label, b, depth - 1) : nullptr;
    return r ? make(l, r, label) : nullptr;
  }

  TermPtr lambda(Label label, const Ty& ty, int depth) {
    std::string name = "v" + std::to_string(++counter_);
    scope_.emplace_back(name, ty.dom());
    TermPtr body = gen(Label::Com, ty.cod(), depth - 1);
    scope_.pop_back();
    if (!body) return nullptr;
    auto lam = std::make_shared<Term>(*mk::lam(name, body, label));
    lam->ascribed = ty;
    return lam;
  }

  TermPtr project(Label label, const Ty& ty, int depth, bool first) {
    Ty other = small_type(0);
    Ty pair = first ? Ty::prod(ty, other) : Ty::prod(other, ty);
    TermPtr p = gen(label, pair, depth - 1);
    if (!p) return nullptr;
    return first ? mk::fst(p, label) : mk::snd(p, label);
  }

  /// Saturated or partial application of a constant or variable whose
  /// type ends in `ty`.
  TermPtr call(Label label, const Ty& ty, int depth) {
    struct Head {
      TermPtr fn;
      std::vector<Ty> args;
    };
    std::vector<Head> heads;
    auto consider = [&](TermPtr fn, Ty t) {
      std::vector<Ty> args;
      while (t.is(Ty::Kind::Arrow)) {
        args.push_back(t.dom());
        t = t.cod();
        if (t == ty) heads.push_back({fn, args});
      }
    };
    for (const auto& d : sig_.consts()) consider(mk::cnst(d.name, label), d.ty);
    for (const auto& [name, vty] : scope_) consider(mk::var(name, label), vty);
    if (heads.empty()) return nullptr;
    const Head& h = heads[pick(static_cast<int>(heads.size()))];
    TermPtr out = h.fn;
    for (const Ty& a : h.args) {
      TermPtr x = gen(label, a, depth - 1);
      if (!x) return nullptr;
      out = mk::app(out, x, label);
    }
    return out;
  }

  Signature sig_;
  std::mt19937_64 rng_;
  std::vector<std::pair<std::string, Ty>> scope_;
  int counter_ = 0;
  long budget_ = kGenBudget;
  int root_depth_ = 0;
};

// --- suites ---------------------------------------------------------------

using Detail = std::optional<std::string>;

struct Context {
  Signature sig;
  TypeEnv env;
  std::vector<Monad> monads;
  std::map<std::string, ConstEnv> consts;

  const ConstEnv& for_monad(const Monad& m) const { return consts.at(m->name); }
};

struct Suite {
  /// Builds the trial input from a sub-seed. Null for suites without terms.
  std::function<TermPtr(const GenConfig&, std::uint64_t)> generate;
  Label label = Label::Src;
  std::function<Detail(const Context&, const TermPtr&, std::uint64_t)> property;
};

std::string describe(const Monad& m, const Value& v) {
  if (v.kind() == Value::Kind::Eff) return m->describe(v.as_action());
  return show_value(v);
}

Detail compare_runs(const Monad& m, const Value& expected, const Value& actual,
                    const Ty& ty, std::uint64_t seed, const std::string& what) {
  if (observe_equal(actual, expected, ty, m, seed)) return std::nullopt;
  return m->name + ": " + what + " gives " + describe(m, actual) + ", expected " +
         describe(m, expected);
}

Detail bound(const std::string& what, long got, long limit) {
  if (got <= limit) return std::nullopt;
  return what + " " + std::to_string(got) + " exceeds " + std::to_string(limit);
}

#define PURIFY_CHECK(expr)          \
  do {                              \
    if (Detail d_ = (expr)) return d_; \
  } while (0)

TermPtr gen_at(const GenConfig& cfg, std::uint64_t seed, Label label, std::optional<Ty> goal = {}) {
  GenConfig c = cfg;
  c.seed = seed;
  c.label = label;
  if (goal) c.goal_type = goal;
  return gen_term(c);
}

Ty eff_goal(std::uint64_t seed) {
  TermGen g(Signature{}, seed);
  return Ty::eff(g.small_type(1));
}

Detail prop_types(const Context& ctx, const TermPtr& e, std::uint64_t) {
  Ty t = type_of(e, Label::Src, ctx.env);
  Ty want = Ty::eff(t);
  TermPtr p = pure_translate(e);
  Ty got = type_of(p, Label::Tgt, ctx.env);
  if (got != want) return "PURE output has type " + got.show() + ", expected " + want.show();
  Ty naive = type_of(naive_translate(e), Label::Tgt, ctx.env);
  if (naive != want) return "naive output has type " + naive.show() + ", expected " + want.show();
  return std::nullopt;
}

Detail check_baseline(const Context& ctx, const TermPtr& e, const Ty& t, std::uint64_t seed) {
  TermPtr s;
  for (const auto& m : ctx.monads) {
    if (!m->sequential_ap) continue;
    if (!s) s = seq_translate(e);
    const auto& ce = ctx.for_monad(m);
    PURIFY_CHECK(compare_runs(m, eval(e, Label::Src, m, ce), eval(s, Label::Tgt, m, ce),
                              Ty::eff(t), seed, "sequential baseline"));
  }
  return std::nullopt;
}

Detail prop_semantics(const Context& ctx, const TermPtr& e, std::uint64_t seed) {
  Ty t = type_of(e, Label::Src, ctx.env);
  TermPtr p = pure_translate(e);
  for (const auto& m : ctx.monads) {
    const auto& ce = ctx.for_monad(m);
    PURIFY_CHECK(compare_runs(m, eval(e, Label::Src, m, ce), eval(p, Label::Tgt, m, ce),
                              Ty::eff(t), seed, "PURE output"));
  }
  return check_baseline(ctx, e, t, seed);
}

Detail prop_baseline(const Context& ctx, const TermPtr& e, std::uint64_t seed) {
  Ty t = type_of(e, Label::Src, ctx.env);
  TermPtr s = seq_translate(e);
  Ty got = type_of(s, Label::Tgt, ctx.env, CheckOptions{true});
  if (got != Ty::eff(t)) return "sequential output has type " + got.show();
  return check_baseline(ctx, e, t, seed);
}

Detail prop_span_work(const Context& ctx, const TermPtr& e, std::uint64_t) {
  TermPtr p = pure_translate(e);
  PURIFY_CHECK(bound("span of PURE output", span(p), span(e)));
  PURIFY_CHECK(bound("work of PURE output", work(p), work(e)));
  Monad m = trace_monad();
  ConstEnv ce = build_const_env(ctx.sig, m);
  auto src = as_trace(eval(e, Label::Src, m, ce).as_action());
  if (dyn_span(src->dag) != span(e) || dyn_work(src->dag) != work(e)) {
    return "source trace has span/work " + std::to_string(dyn_span(src->dag)) + "/" +
           std::to_string(dyn_work(src->dag)) + ", static " + std::to_string(span(e)) + "/" +
           std::to_string(work(e));
  }
  auto tgt = as_trace(eval(p, Label::Tgt, m, ce).as_action());
  PURIFY_CHECK(bound("dynamic span of PURE output", dyn_span(tgt->dag), span(e)));
  PURIFY_CHECK(bound("dynamic work of PURE output", dyn_work(tgt->dag), work(e)));
  return std::nullopt;
}

Detail prop_smart_ctors(const Context& ctx, const TermPtr& e, std::uint64_t seed) {
  TermPtr smart;
  if (e->node == Node::Ap) {
    FreshNames fresh = FreshNames::avoiding(e);
    smart = smart_ap(e->lhs, e->rhs, fresh);
  } else if (e->node == Node::Join) {
    smart = smart_join(e->lhs);
  } else {
    return std::nullopt;
  }
  const char* name = e->node == Node::Ap ? "AP" : "JOIN";
  Ty t = type_of(e, Label::Tgt, ctx.env);
  Ty got = type_of(smart, Label::Tgt, ctx.env);
  if (got != t) return std::string(name) + " result has type " + got.show() + ", expected " + t.show();
  PURIFY_CHECK(bound(std::string("span of ") + name, span(smart), span(e)));
  PURIFY_CHECK(bound(std::string("work of ") + name, work(smart), work(e)));
  for (const auto& m : ctx.monads) {
    const auto& ce = ctx.for_monad(m);
    PURIFY_CHECK(compare_runs(m, eval(e, Label::Tgt, m, ce), eval(smart, Label::Tgt, m, ce), t,
                              seed, name));
  }
  return std::nullopt;
}

Detail zero_cost(const std::string& what, const TermPtr& e) {
  if (span(e) == 0 && work(e) == 0) return std::nullopt;
  return what + " has span/work " + std::to_string(span(e)) + "/" + std::to_string(work(e));
}

Detail prop_effect_free(const Context&, const TermPtr& e, std::uint64_t) {
  if (!is_effect_free(e)) return std::string("common term contains an effect");
  PURIFY_CHECK(zero_cost("common term", e));
  PURIFY_CHECK(zero_cost("term relabeled to target", relabel(e, Label::Tgt)));
  PURIFY_CHECK(zero_cost("term relabeled to source", relabel(e, Label::Src)));
  return std::nullopt;
}

Detail prop_relabel(const Context& ctx, const TermPtr& e, std::uint64_t seed) {
  PURIFY_CHECK(prop_effect_free(ctx, e, seed));
  Ty t = type_of(e, Label::Com, ctx.env);
  TermPtr rt = relabel(e, Label::Tgt);
  TermPtr rs = relabel(e, Label::Src);
  if (type_of(rt, Label::Tgt, ctx.env) != t) return std::string("target relabel changes the type");
  if (type_of(rs, Label::Src, ctx.env) != t) return std::string("source relabel changes the type");
  for (const auto& m : ctx.monads) {
    const auto& ce = ctx.for_monad(m);
    Value direct = eval(e, Label::Com, m, ce);
    PURIFY_CHECK(compare_runs(m, direct, eval(rt, Label::Tgt, m, ce), t, seed, "target relabel"));
    PURIFY_CHECK(compare_runs(m, Value::eff(m->pure(direct)), eval(rs, Label::Src, m, ce),
                              Ty::eff(t), seed, "source relabel"));
  }
  return std::nullopt;
}

Detail prop_normalize(const Context& ctx, const TermPtr& e, std::uint64_t seed) {
  Ty t = type_of(e, Label::Tgt, ctx.env);
  TermPtr n = normalize(e, NormalizeOptions{(seed & 1) != 0});
  Ty got = type_of(n, Label::Tgt, ctx.env, CheckOptions{true});
  if (got != t) return "normal form has type " + got.show() + ", expected " + t.show();
  PURIFY_CHECK(bound("span of normal form", span(n), span(e)));
  PURIFY_CHECK(bound("work of normal form", work(n), work(e)));
  for (const auto& m : ctx.monads) {
    const auto& ce = ctx.for_monad(m);
    PURIFY_CHECK(compare_runs(m, eval(e, Label::Tgt, m, ce), eval(n, Label::Tgt, m, ce), t, seed,
                              "normal form"));
  }
  return std::nullopt;
}

Detail prop_laws(const Context& ctx, const TermPtr&, std::uint64_t seed) {
  for (const auto& m : ctx.monads) {
    LawReport r = check_laws(m, 1, seed);
    for (const auto& l : r.laws) {
      if (l.failures > 0) return m->name + " violates " + l.law + ": " + l.counterexample;
    }
  }
  return std::nullopt;
}

TermPtr gen_tgt_argument(const GenConfig& cfg, std::uint64_t seed, const Ty& ty, bool as_pure) {
  if (as_pure) {
    try {
      return mk::pure(gen_at(cfg, splitmix(seed), Label::Com, ty.inner()));
    } catch (const Error&) {
      // fall through to a general target term
    }
  }
  return gen_at(cfg, seed, Label::Tgt, ty);
}

TermPtr gen_smart_tuple(const GenConfig& cfg, std::uint64_t seed) {
  TermGen g(cfg.signature, seed);
  GenConfig sub = cfg;
  sub.max_depth = std::max(1, cfg.max_depth - 1);
  if (g.pick(2) == 0) {
    Ty a = g.small_type(1), b = g.small_type(1);
    int shape = g.pick(4);
    TermPtr f = gen_tgt_argument(sub, splitmix(seed + 1), Ty::eff(Ty::arrow(a, b)), shape & 1);
    TermPtr x = gen_tgt_argument(sub, splitmix(seed + 2), Ty::eff(a), shape & 2);
    return mk::ap(f, x);
  }
  Ty t = g.pick(2) ? Ty::str() : Ty::unit();
  if (g.pick(3) == 0) t = g.small_type(1);
  return mk::join(gen_tgt_argument(sub, splitmix(seed + 3), Ty::eff(Ty::eff(t)), g.pick(2) == 0));
}

const std::map<std::string, Suite>& suites() {
  static const std::map<std::string, Suite> table = [] {
    std::map<std::string, Suite> s;
    auto src = [](const GenConfig& c, std::uint64_t seed) { return gen_at(c, seed, Label::Src); };
    auto com = [](const GenConfig& c, std::uint64_t seed) { return gen_at(c, seed, Label::Com); };
    s["types"] = {src, Label::Src, prop_types};
    s["semantics"] = {src, Label::Src, prop_semantics};
    s["span_work"] = {src, Label::Src, prop_span_work};
    s["baseline"] = {src, Label::Src, prop_baseline};
    s["smart_ctors"] = {gen_smart_tuple, Label::Tgt, prop_smart_ctors};
    s["relabel"] = {com, Label::Com, prop_relabel};
    s["effect_free"] = {com, Label::Com, prop_effect_free};
    s["normalize"] = {[](const GenConfig& c, std::uint64_t seed) {
                        return gen_at(c, seed, Label::Tgt, eff_goal(splitmix(seed ^ 0x5eed)));
                      },
                      Label::Tgt, prop_normalize};
    s["laws"] = {nullptr, Label::Src, prop_laws};
    return s;
  }();
  return table;
}

Detail run_property(const Suite& suite, const Context& ctx, const TermPtr& e, std::uint64_t seed) {
  try {
    return suite.property(ctx, e, seed);
  } catch (const std::exception& ex) {
    return std::string("exception: ") + ex.what();
  }
}

void descendants(const TermPtr& e, std::vector<TermPtr>& out) {
  for (const TermPtr& c : {e->lhs, e->rhs}) {
    if (!c) continue;
    out.push_back(c);
    descendants(c, out);
  }
}

/// Candidates that replace one node by one of its descendants or empty a
/// string literal. Larger reductions come first.
void shrink_candidates(const TermPtr& e, std::vector<TermPtr>& out) {
  descendants(e, out);
  if (e->node == Node::Lit && !e->text.empty()) out.push_back(mk::lit("", e->label));
  if (e->lhs) {
    std::vector<TermPtr> inner;
    shrink_candidates(e->lhs, inner);
    for (const auto& c : inner) out.push_back(rebuild(*e, c, e->rhs));
  }
  if (e->rhs) {
    std::vector<TermPtr> inner;
    shrink_candidates(e->rhs, inner);
    for (const auto& c : inner) out.push_back(rebuild(*e, e->lhs, c));
  }
}

bool well_typed(const TermPtr& e, Label label, const Context& ctx) {
  try {
    typecheck(e, label, ctx.env);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::pair<TermPtr, std::string> shrink(const Suite& suite, const Context& ctx, TermPtr e,
                                       std::string detail, std::uint64_t seed) {
  for (int step = 0; step < 200; ++step) {
    std::vector<TermPtr> candidates;
    shrink_candidates(e, candidates);
    bool improved = false;
    for (const auto& c : candidates) {
      if (!well_typed(c, suite.label, ctx)) continue;
      if (Detail d = run_property(suite, ctx, c, seed)) {
        e = c;
        detail = *d;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  return {e, detail};
}

Context make_context(const Signature& sig, const SuiteOptions& options) {
  Context ctx;
  ctx.sig = sig;
  ctx.env = TypeEnv(sig);
  std::vector<std::string> names = options.monads;
  if (names.empty()) names = {"option", "state", "writer", "trace"};
  for (const auto& n : names) {
    Monad m = monad_by_name(n);
    if (!m) throw Error(ErrorKind::ConfigError, "unknown monad '" + n + "'");
    ctx.monads.push_back(m);
    ctx.consts[n] = build_const_env(sig, m);
  }
  return ctx;
}

std::optional<SuiteFailure> run_trial(const Suite& suite, const Context& ctx, const GenConfig& cfg,
                                      int index) {
  std::uint64_t seed = splitmix(cfg.seed ^ splitmix(static_cast<std::uint64_t>(index) + 1));
  TermPtr e;
  if (suite.generate) {
    std::string last;
    for (int attempt = 0; attempt < 10 && !e; ++attempt) {
      try {
        e = suite.generate(cfg, splitmix(seed + static_cast<std::uint64_t>(attempt)));
      } catch (const Error& err) {
        last = err.what();
      }
    }
    if (!e) return SuiteFailure{seed, "", "generator: " + last};
  }
  Detail d = run_property(suite, ctx, e, seed);
  if (!d) return std::nullopt;
  std::string detail = *d;
  if (e) std::tie(e, detail) = shrink(suite, ctx, e, detail, seed);
  return SuiteFailure{seed, e ? pretty(e) : "", detail};
}

struct Prepared {
  const Suite* suite;
  Context ctx;
  GenConfig cfg;
};

Prepared prepare(const std::string& name, const GenConfig& cfg, const SuiteOptions& options) {
  auto it = suites().find(name);
  if (it == suites().end()) throw Error(ErrorKind::ConfigError, "unknown suite '" + name + "'");
  GenConfig c = cfg;
  if (c.signature.empty()) c.signature = default_signature();
  if (c.max_depth < 1) throw Error(ErrorKind::ConfigError, "max_depth must be at least 1");
  return {&it->second, make_context(c.signature, options), c};
}

SuiteReport merge(const std::string& name, const GenConfig& cfg,
                  const std::vector<std::optional<SuiteFailure>>& results, const SuiteOptions& options) {
  SuiteReport r;
  r.suite = name;
  r.seed = cfg.seed;
  r.trials = static_cast<int>(results.size());
  for (const auto& res : results) {
    if (!res) {
      ++r.passes;
    } else if (static_cast<int>(r.failures.size()) < options.max_failures) {
      r.failures.push_back(*res);
    }
  }
  return r;
}

}  // namespace

Signature default_signature() {
  Signature sig;
  Ty s = Ty::str(), u = Ty::unit();
  sig.add({"fetch", Ty::arrow(s, Ty::eff(s)), ConstKind::Effectful});
  sig.add({"tick", Ty::eff(u), ConstKind::Effectful});
  sig.add({"put", Ty::arrow(s, Ty::eff(u)), ConstKind::Effectful});
  sig.add({"post", Ty::arrow(s, Ty::arrow(s, Ty::eff(s))), ConstKind::Effectful});
  sig.add({"concat", Ty::arrow(s, Ty::arrow(s, s)), ConstKind::Pure});
  sig.add({"tag", Ty::arrow(s, s), ConstKind::Pure});
  return sig;
}

TermPtr gen_term(const GenConfig& cfg) {
  if (cfg.max_depth < 1) throw Error(ErrorKind::ConfigError, "max_depth must be at least 1");
  TermGen g(cfg.signature, cfg.seed);
  Ty goal = cfg.goal_type ? *cfg.goal_type : g.goal_type();
  return g.term(cfg.label, goal, cfg.max_depth);
}

std::string SuiteReport::to_json() const {
  nlohmann::json j;
  j["v"] = 1;
  j["suite"] = suite;
  j["seed"] = seed;
  j["trials"] = trials;
  j["passes"] = passes;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : failures) {
    j["failures"].push_back({{"seed", f.seed}, {"term_pretty", f.term_pretty}, {"detail", f.detail}});
  }
  return j.dump();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"types",       "semantics", "span_work",
                                                 "smart_ctors", "relabel",   "effect_free",
                                                 "laws",        "normalize", "baseline"};
  return names;
}

SuiteReport run_suite(const std::string& name, const GenConfig& cfg, int trials,
                      const SuiteOptions& options) {
  Prepared p = prepare(name, cfg, options);
  std::vector<std::optional<SuiteFailure>> results(static_cast<std::size_t>(std::max(trials, 0)));
#pragma omp parallel for schedule(dynamic, 16)
  for (int i = 0; i < trials; ++i) {
    results[static_cast<std::size_t>(i)] = run_trial(*p.suite, p.ctx, p.cfg, i);
  }
  return merge(name, p.cfg, results, options);
}

SuiteReport run_suite_serial(const std::string& name, const GenConfig& cfg, int trials,
                             const SuiteOptions& options) {
  Prepared p = prepare(name, cfg, options);
  std::vector<std::optional<SuiteFailure>> results;
  for (int i = 0; i < trials; ++i) results.push_back(run_trial(*p.suite, p.ctx, p.cfg, i));
  return merge(name, p.cfg, results, options);
}

}  // namespace purify
