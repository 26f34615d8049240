#include <random>

#include "purify/monad.hpp"

namespace purify {

namespace {

using Kleisli = std::function<Action(const Value&)>;

const EffectBehavior kAbsent{EffectBehavior::Kind::Absent, "", 1};
const EffectBehavior kIncr{EffectBehavior::Kind::StateIncr, "", 2};
const EffectBehavior kLog{EffectBehavior::Kind::Log, "logged", 1};
const EffectBehavior kFixed{EffectBehavior::Kind::Value, "fixed", 1};

class LawGen {
 public:
  LawGen(Monad m, std::uint64_t seed) : m_(std::move(m)), rng_(seed) {}

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  Ty type() {
    switch (pick(3)) {
      case 0: return Ty::unit();
      case 1: return Ty::str();
      default: return Ty::prod(Ty::str(), Ty::unit());
    }
  }

  Value data(const Ty& ty) {
    static const char* words[] = {"", "a", "b", "ab", "xyz"};
    switch (ty.kind()) {
      case Ty::Kind::Str: return Value::str(words[pick(5)]);
      case Ty::Kind::Prod: return Value::pair(data(ty.left()), data(ty.right()));
      default: return Value::unit();
    }
  }

  Value::Fn fn(const Ty& dom, const Ty& cod) {
    int variant = pick(dom == cod ? 3 : 2);
    if (variant == 0) {
      Value c = data(cod);
      return [c](const Value&) { return c; };
    }
    if (variant == 1) {
      std::string tag = "f" + std::to_string(pick(100));
      return [tag, cod](const Value& x) { return default_value(cod, tag + "<" + show_value(x) + ">"); };
    }
    return [](const Value& x) { return x; };
  }

  Action primitive(const std::string& arg, const Ty& result) {
    static const char* names[] = {"p", "q", "r"};
    static const EffectBehavior* behaviors[] = {nullptr, nullptr, &kAbsent, &kIncr, &kLog, &kFixed};
    EffectCall call;
    call.name = names[pick(3)];
    call.args = arg;
    call.rendered = call.name + "(" + arg + ")";
    call.result = result;
    call.behavior = behaviors[pick(6)];
    return m_->primitive(call);
  }

  Kleisli kleisli(const Ty& dom, const Ty& cod) {
    switch (pick(3)) {
      case 0: {
        auto f = fn(dom, cod);
        auto m = m_;
        return [f, m](const Value& x) { return m->pure(f(x)); };
      }
      case 1: {
        // Fixes the primitive shape now so the function is deterministic.
        auto seed = static_cast<std::uint64_t>(rng_());
        auto m = m_;
        return [seed, m, cod](const Value& x) {
          LawGen inner(m, seed);
          return inner.primitive(show_value(x), cod);
        };
      }
      default: {
        Ty mid = type();
        auto f = fn(mid, cod);
        auto seed = static_cast<std::uint64_t>(rng_());
        auto m = m_;
        return [seed, m, f, mid](const Value& x) {
          LawGen inner(m, seed);
          return m->map(f, inner.primitive(show_value(x), mid));
        };
      }
    }
  }

  Action action(const Ty& ty, int depth) {
    int variant = depth <= 0 ? pick(2) : pick(5);
    switch (variant) {
      case 0: return m_->pure(data(ty));
      case 1: return primitive(show_value(data(Ty::str())), ty);
      case 2: {
        Ty b = type();
        return m_->map(fn(b, ty), action(b, depth - 1));
      }
      case 3: {
        Ty b = type();
        return m_->bind(kleisli(b, ty), action(b, depth - 1));
      }
      default: {
        Ty b = type();
        return m_->ap(fun_action(b, ty, depth - 1), action(b, depth - 1));
      }
    }
  }

  /// Action producing a function from `dom` to `cod`.
  Action fun_action(const Ty& dom, const Ty& cod, int depth) {
    if (pick(2) == 0) return m_->pure(Value::fun(fn(dom, cod)));
    Ty c = type();
    return m_->map(
        [cod](const Value& v) {
          std::string tag = show_value(v);
          return Value::fun([tag, cod](const Value& x) {
            return default_value(cod, "g<" + tag + "," + show_value(x) + ">");
          });
        },
        action(c, depth));
  }

 private:
  Monad m_;
  std::mt19937_64 rng_;
};

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Instance {
  Action lhs;
  Action rhs;
};

using LawFn = std::function<Instance(LawGen&, const Monad&)>;

}  // namespace

bool LawReport::all_pass() const {
  for (const auto& l : laws) {
    if (l.failures > 0) return false;
  }
  return true;
}

LawReport check_laws(const Monad& m, int trials, std::uint64_t seed) {
  const int depth = 2;
  const std::vector<std::pair<std::string, LawFn>> laws = {
      {"idl",
       [](LawGen& g, const Monad& m) {
         Ty a = g.type(), b = g.type();
         auto f = g.kleisli(a, b);
         Value x = g.data(a);
         return Instance{m->bind(f, m->pure(x)), f(x)};
       }},
      {"idr",
       [](LawGen& g, const Monad& m) {
         Action x = g.action(g.type(), depth);
         return Instance{m->bind(m->pure, x), x};
       }},
      {"asc",
       [](LawGen& g, const Monad& m) {
         Ty a = g.type(), b = g.type(), c = g.type();
         Action x = g.action(a, depth);
         auto f = g.kleisli(a, b);
         auto h = g.kleisli(b, c);
         Kleisli composed = [m, f, h](const Value& v) { return m->bind(h, f(v)); };
         return Instance{m->bind(h, m->bind(f, x)), m->bind(composed, x)};
       }},
      {"apl",
       [](LawGen& g, const Monad& m) {
         Ty a = g.type(), b = g.type();
         auto f = g.fn(a, b);
         Action x = g.action(a, depth);
         return Instance{m->ap(m->pure(Value::fun(f)), x), m->map(f, x)};
       }},
      {"apr",
       [](LawGen& g, const Monad& m) {
         Ty a = g.type(), b = g.type();
         Action f = g.fun_action(a, b, depth);
         Value x = g.data(a);
         Value::Fn apply = [x](const Value& fv) { return fv(x); };
         return Instance{m->ap(f, m->pure(x)), m->map(apply, f)};
       }},
      {"aplr",
       [](LawGen& g, const Monad& m) {
         Ty a = g.type(), b = g.type();
         auto f = g.fn(a, b);
         Value x = g.data(a);
         return Instance{m->map(f, m->pure(x)), m->pure(f(x))};
       }},
      {"map_map",
       [](LawGen& g, const Monad& m) {
         Ty a = g.type(), b = g.type(), c = g.type();
         auto h = g.fn(a, b);
         auto f = g.fn(b, c);
         Action x = g.action(a, depth);
         Value::Fn both = [f, h](const Value& v) { return f(h(v)); };
         return Instance{m->map(f, m->map(h, x)), m->map(both, x)};
       }},
  };

  LawReport report;
  report.monad = m->name;
  report.seed = seed;
  for (std::size_t li = 0; li < laws.size(); ++li) {
    LawResult result;
    result.law = laws[li].first;
    for (int t = 0; t < trials; ++t) {
      LawGen g(m, splitmix(seed ^ splitmix(li * 1000003ULL + static_cast<std::uint64_t>(t))));
      Instance inst = laws[li].second(g, m);
      ++result.trials;
      if (!m->run_eq(inst.lhs, inst.rhs, data_equal)) {
        ++result.failures;
        if (result.counterexample.empty()) {
          result.counterexample = "trial " + std::to_string(t) + ": lhs " + m->describe(inst.lhs) +
                                  " vs rhs " + m->describe(inst.rhs);
        }
      }
    }
    report.laws.push_back(std::move(result));
  }
  return report;
}

}  // namespace purify
