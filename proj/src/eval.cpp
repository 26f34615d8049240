#include "purify/eval.hpp"

#include <stdexcept>

namespace purify {

namespace {

struct Frame {
  std::string name;
  Value value;
  std::shared_ptr<const Frame> next;
};
using Scope = std::shared_ptr<const Frame>;

class Evaluator : public std::enable_shared_from_this<Evaluator> {
 public:
  Evaluator(Monad m, const ConstEnv& env) : m_(std::move(m)), env_(env) {}

  Value direct(const TermPtr& e, const Scope& scope) const {
    switch (e->node) {
      case Node::Var: return lookup(e->text, scope);
      case Node::Const: return constant(e->text);
      case Node::Unt: return Value::unit();
      case Node::Lit: return Value::str(e->text);
      case Node::Prd: return Value::pair(direct(e->lhs, scope), direct(e->rhs, scope));
      case Node::Fst: return direct(e->lhs, scope).first();
      case Node::Snd: return direct(e->lhs, scope).second();
      case Node::App: {
        Value f = direct(e->lhs, scope);
        return f(direct(e->rhs, scope));
      }
      case Node::Lam: return closure(e, scope);
      case Node::Pure: return Value::eff(m_->pure(direct(e->lhs, scope)));
      case Node::Map: {
        Value f = direct(e->lhs, scope);
        Value x = direct(e->rhs, scope);
        return Value::eff(m_->map([f](const Value& v) { return f(v); }, x.as_action()));
      }
      case Node::Ap: {
        Value f = direct(e->lhs, scope);
        Value x = direct(e->rhs, scope);
        return Value::eff(m_->ap(f.as_action(), x.as_action()));
      }
      case Node::Join: {
        Value x = direct(e->lhs, scope);
        return Value::eff(m_->bind(flatten, x.as_action()));
      }
      case Node::Each: break;
    }
    throw std::logic_error("effect mark outside the source fragment");
  }

  Action src(const TermPtr& e, const Scope& scope) const {
    if (e->label != Label::Src) return m_->pure(direct(e, scope));
    switch (e->node) {
      case Node::Var:
      case Node::Const:
      case Node::Unt:
      case Node::Lit:
      case Node::Lam: return m_->pure(direct(e, scope));
      case Node::Fst:
        return m_->map([](const Value& p) { return p.first(); }, src(e->lhs, scope));
      case Node::Snd:
        return m_->map([](const Value& p) { return p.second(); }, src(e->lhs, scope));
      case Node::App: {
        Action f = src(e->lhs, scope);
        return m_->ap(f, src(e->rhs, scope));
      }
      case Node::Prd: {
        Action a = m_->map(
            [](const Value& x) {
              return Value::fun([x](const Value& y) { return Value::pair(x, y); });
            },
            src(e->lhs, scope));
        return m_->ap(a, src(e->rhs, scope));
      }
      case Node::Each: return m_->bind(flatten, src(e->lhs, scope));
      default: break;
    }
    throw std::logic_error("combinator inside the source fragment");
  }

 private:
  static Action flatten(const Value& v) { return v.as_action(); }

  static Value lookup(const std::string& name, const Scope& scope) {
    for (const Frame* f = scope.get(); f; f = f->next.get()) {
      if (f->name == name) return f->value;
    }
    throw Error(ErrorKind::UnboundVar, "unbound variable '" + name + "' at run time");
  }

  Value constant(const std::string& name) const {
    auto it = env_.values.find(name);
    if (it == env_.values.end()) {
      throw Error(ErrorKind::SignatureMismatch, "no interpretation for constant '" + name + "'");
    }
    return it->second;
  }

  Value closure(const TermPtr& lam, const Scope& scope) const {
    auto self = shared_from_this();
    return Value::fun([self, lam, scope](const Value& arg) {
      auto frame = std::make_shared<const Frame>(Frame{lam->text, arg, scope});
      return self->direct(lam->lhs, frame);
    });
  }

  Monad m_;
  ConstEnv env_;
};

Value effect_const(const Monad& m, const std::string& name, const Ty& ty, int arity,
                   const EffectBehavior* behavior, std::vector<std::string> args) {
  if (static_cast<int>(args.size()) == arity) {
    EffectCall call;
    call.name = name;
    for (std::size_t i = 0; i < args.size(); ++i) call.args += (i ? ", " : "") + args[i];
    call.rendered = name + "(" + call.args + ")";
    call.result = ty.inner();
    call.behavior = behavior;
    return Value::eff(m->primitive(call));
  }
  return Value::fun([=](const Value& v) {
    auto more = args;
    more.push_back(show_value(v));
    return effect_const(m, name, ty.cod(), arity, behavior, std::move(more));
  });
}

}  // namespace

ConstEnv build_const_env(const Signature& sig, const Monad& m, EffectBehaviors behaviors) {
  ConstEnv env;
  auto owned = std::make_shared<const EffectBehaviors>(std::move(behaviors));
  env.behaviors = owned;
  const Ty str2 = Ty::arrow(Ty::str(), Ty::arrow(Ty::str(), Ty::str()));
  for (const auto& d : sig.consts()) {
    if (d.kind == ConstKind::Pure) {
      if (d.name == "concat" && d.ty == str2) {
        env.values[d.name] = Value::fun([](const Value& a) {
          return Value::fun([a](const Value& b) { return Value::str(a.as_str() + b.as_str()); });
        });
      } else {
        env.values[d.name] = default_value(d.ty, d.name);
      }
      continue;
    }
    auto it = owned->find(d.name);
    const EffectBehavior* behavior = it == owned->end() ? nullptr : &it->second;
    env.values[d.name] =
        effect_const(m, d.name, d.ty, Signature::effect_arity(d.ty), behavior, {});
  }
  return env;
}

Value eval(const TermPtr& e, Label label, const Monad& m, const ConstEnv& env) {
  auto ev = std::make_shared<Evaluator>(m, env);
  if (label == Label::Src) return Value::eff(ev->src(e, nullptr));
  return ev->direct(e, nullptr);
}

Value gen_value(const Ty& ty, const Monad& m, std::mt19937_64& rng) {
  static const char* words[] = {"", "a", "b", "ab", "zz"};
  auto pick = [&rng](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  switch (ty.kind()) {
    case Ty::Kind::Unit: return Value::unit();
    case Ty::Kind::Str: return Value::str(words[pick(5)]);
    case Ty::Kind::Prod: {
      Value a = gen_value(ty.left(), m, rng);
      return Value::pair(a, gen_value(ty.right(), m, rng));
    }
    case Ty::Kind::Arrow: {
      if (ty.cod().effect_free()) {
        return default_value(ty, "g" + std::to_string(pick(1000)));
      }
      auto seed = static_cast<std::uint64_t>(rng());
      Ty cod = ty.cod();
      return Value::fun([seed, cod, m](const Value& x) {
        std::mt19937_64 inner(seed ^ std::hash<std::string>{}(show_value(x)));
        return gen_value(cod, m, inner);
      });
    }
    case Ty::Kind::Eff: {
      if (pick(2) == 0) return Value::eff(m->pure(gen_value(ty.inner(), m, rng)));
      if (!ty.inner().effect_free()) return Value::eff(m->pure(gen_value(ty.inner(), m, rng)));
      EffectCall call;
      call.name = "gen";
      call.args = std::to_string(pick(1000));
      call.rendered = "gen(" + call.args + ")";
      call.result = ty.inner();
      return Value::eff(m->primitive(call));
    }
  }
  return Value::unit();
}

bool observe_equal(const Value& a, const Value& b, const Ty& ty, const Monad& m,
                   std::uint64_t seed) {
  switch (ty.kind()) {
    case Ty::Kind::Unit:
    case Ty::Kind::Str: return data_equal(a, b);
    case Ty::Kind::Prod:
      return observe_equal(a.first(), b.first(), ty.left(), m, seed * 31 + 1) &&
             observe_equal(a.second(), b.second(), ty.right(), m, seed * 31 + 2);
    case Ty::Kind::Arrow: {
      std::mt19937_64 rng(seed);
      for (int i = 0; i < 5; ++i) {
        Value arg = gen_value(ty.dom(), m, rng);
        if (!observe_equal(a(arg), b(arg), ty.cod(), m, seed + 101 * (i + 1))) return false;
      }
      return true;
    }
    case Ty::Kind::Eff: {
      Ty inner = ty.inner();
      ValueEq eq = [inner, m, seed](const Value& x, const Value& y) {
        return observe_equal(x, y, inner, m, seed + 7);
      };
      return m->run_eq(a.as_action(), b.as_action(), eq);
    }
  }
  return false;
}

}  // namespace purify
