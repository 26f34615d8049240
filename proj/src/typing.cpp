#include "purify/typing.hpp"

#include <unordered_map>

namespace purify {

namespace {

constexpr int kVar = -1;

// Types with unification variables, stored in an arena.
class Unifier {
 public:
  int fresh() { return push({kVar, -1, -1}); }

  int lift(const Ty& t) {
    switch (t.kind()) {
      case Ty::Kind::Unit:
      case Ty::Kind::Str: return push({static_cast<int>(t.kind()), -1, -1});
      case Ty::Kind::Eff: return push({static_cast<int>(t.kind()), lift(t.inner()), -1});
      case Ty::Kind::Prod:
      case Ty::Kind::Arrow:
        return push({static_cast<int>(t.kind()), lift(t.left()), lift(t.right())});
    }
    return fresh();
  }

  int make(Ty::Kind k, int a = -1, int b = -1) { return push({static_cast<int>(k), a, b}); }

  int find(int t) {
    while (nodes_[t].kind == kVar && binding_[t] >= 0) t = binding_[t];
    return t;
  }

  bool unify(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return true;
    if (nodes_[x].kind == kVar) return bind(x, y);
    if (nodes_[y].kind == kVar) return bind(y, x);
    if (nodes_[x].kind != nodes_[y].kind) return false;
    const Node nx = nodes_[x];
    const Node ny = nodes_[y];
    if (nx.a >= 0 && !unify(nx.a, ny.a)) return false;
    if (nx.b >= 0 && !unify(nx.b, ny.b)) return false;
    return true;
  }

  // Structure of `t` if it has the given constructor, binding a variable if needed.
  bool expect(int t, Ty::Kind k, int& a, int& b) {
    t = find(t);
    if (nodes_[t].kind == kVar) {
      a = fresh();
      b = (k == Ty::Kind::Eff) ? -1 : fresh();
      return unify(t, make(k, a, b));
    }
    if (nodes_[t].kind != static_cast<int>(k)) return false;
    a = nodes_[t].a;
    b = nodes_[t].b;
    return true;
  }

  // Ground type, or nullopt when a variable remains (or defaults to Unit).
  std::optional<Ty> resolve(int t, bool default_unit) {
    t = find(t);
    const Node n = nodes_[t];
    if (n.kind == kVar) return default_unit ? std::optional<Ty>(Ty::unit()) : std::nullopt;
    auto k = static_cast<Ty::Kind>(n.kind);
    switch (k) {
      case Ty::Kind::Unit: return Ty::unit();
      case Ty::Kind::Str: return Ty::str();
      case Ty::Kind::Eff: {
        auto i = resolve(n.a, default_unit);
        if (!i) return std::nullopt;
        return Ty::eff(*i);
      }
      case Ty::Kind::Prod:
      case Ty::Kind::Arrow: {
        auto l = resolve(n.a, default_unit);
        auto r = resolve(n.b, default_unit);
        if (!l || !r) return std::nullopt;
        return k == Ty::Kind::Prod ? Ty::prod(*l, *r) : Ty::arrow(*l, *r);
      }
    }
    return std::nullopt;
  }

  std::string show(int t) {
    t = find(t);
    const Node n = nodes_[t];
    if (n.kind == kVar) return "?" + std::to_string(t);
    auto wrap = [&](int c) {
      c = find(c);
      int ck = nodes_[c].kind;
      std::string s = show(c);
      if (ck == static_cast<int>(Ty::Kind::Arrow) || ck == static_cast<int>(Ty::Kind::Eff)) {
        return "(" + s + ")";
      }
      return s;
    };
    switch (static_cast<Ty::Kind>(n.kind)) {
      case Ty::Kind::Unit: return "Unit";
      case Ty::Kind::Str: return "Str";
      case Ty::Kind::Eff: return "Eff " + wrap(n.a);
      case Ty::Kind::Prod: return "(" + show(n.a) + ", " + show(n.b) + ")";
      case Ty::Kind::Arrow: return wrap(n.a) + " -> " + show(n.b);
    }
    return "?";
  }

 private:
  struct Node {
    int kind;
    int a;
    int b;
  };

  int push(Node n) {
    nodes_.push_back(n);
    binding_.push_back(-1);
    return static_cast<int>(nodes_.size()) - 1;
  }

  bool occurs(int v, int t) {
    t = find(t);
    if (t == v) return true;
    const Node n = nodes_[t];
    return (n.a >= 0 && occurs(v, n.a)) || (n.b >= 0 && occurs(v, n.b));
  }

  bool bind(int v, int t) {
    if (occurs(v, t)) return false;
    binding_[v] = t;
    return true;
  }

  std::vector<Node> nodes_;
  std::vector<int> binding_;
};

class Checker {
 public:
  Checker(const TypeEnv& env, CheckOptions options) : env_(env), options_(options) {
    for (const auto& [name, ty] : env.vars) scope_.emplace_back(name, u_.lift(ty));
  }

  int infer(const TermPtr& e, Label label) {
    if (e->label != label) {
      throw Error(ErrorKind::LabelMismatch,
                  std::string(to_string(e->node)) + " is labeled " + to_string(e->label) +
                      " but " + to_string(label) + " is required",
                  e->pos);
    }
    int t = infer_node(e, label);
    if (e->ascribed) unify_or_throw(e, t, u_.lift(*e->ascribed));
    types_[e.get()] = t;
    return t;
  }

  TermPtr stamp(const TermPtr& e) {
    auto out = std::make_shared<Term>(*e);
    out->ty = u_.resolve(types_.at(e.get()), true);
    if (e->lhs) out->lhs = stamp(e->lhs);
    if (e->rhs) out->rhs = stamp(e->rhs);
    return out;
  }

  Unifier& unifier() { return u_; }

 private:
  void require_label(const TermPtr& e, Label label, Label required) {
    if (label != required) {
      throw Error(ErrorKind::LabelMismatch,
                  std::string(to_string(e->node)) + " is only available at " +
                      to_string(required) + ", found at " + to_string(label),
                  e->pos);
    }
  }

  void unify_or_throw(const TermPtr& e, int found, int expected) {
    std::string f = u_.show(found);
    std::string x = u_.show(expected);
    if (!u_.unify(found, expected)) {
      throw Error(ErrorKind::TypeMismatch,
                  std::string(to_string(e->node)) + ": found " + f + ", expected " + x, e->pos);
    }
  }

  void expect_shape(const TermPtr& e, int t, Ty::Kind k, int& a, int& b, const char* what) {
    std::string shown = u_.show(t);
    if (!u_.expect(t, k, a, b)) {
      throw Error(ErrorKind::TypeMismatch,
                  std::string(to_string(e->node)) + ": found " + shown + ", expected " + what,
                  e->pos);
    }
  }

  int infer_node(const TermPtr& e, Label label) {
    int a = -1, b = -1;
    switch (e->node) {
      case Node::Var:
        for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
          if (it->first == e->text) return it->second;
        }
        throw Error(ErrorKind::UnboundVar, "variable '" + e->text + "' is not bound", e->pos);
      case Node::Const: {
        const ConstDecl* d = env_.sig.find(e->text);
        if (!d) {
          throw Error(ErrorKind::UnknownConst, "constant '" + e->text + "' is not declared",
                      e->pos);
        }
        return u_.lift(d->ty);
      }
      case Node::Unt: return u_.make(Ty::Kind::Unit);
      case Node::Lit: return u_.make(Ty::Kind::Str);
      case Node::Prd: {
        int l = infer(e->lhs, label);
        int r = infer(e->rhs, label);
        return u_.make(Ty::Kind::Prod, l, r);
      }
      case Node::Fst:
      case Node::Snd: {
        int p = infer(e->lhs, label);
        expect_shape(e, p, Ty::Kind::Prod, a, b, "a pair");
        return e->node == Node::Fst ? a : b;
      }
      case Node::App: {
        int f = infer(e->lhs, label);
        expect_shape(e, f, Ty::Kind::Arrow, a, b, "a function");
        int x = infer(e->rhs, label);
        unify_or_throw(e->rhs, x, a);
        return b;
      }
      case Node::Lam: {
        Label body = Label::Com;
        if (options_.extended_target && label == Label::Tgt && e->lhs->label == Label::Tgt) {
          body = Label::Tgt;
        }
        int param = u_.fresh();
        scope_.emplace_back(e->text, param);
        int r = infer(e->lhs, body);
        scope_.pop_back();
        return u_.make(Ty::Kind::Arrow, param, r);
      }
      case Node::Each: {
        require_label(e, label, Label::Src);
        int t = infer(e->lhs, Label::Src);
        expect_shape(e, t, Ty::Kind::Eff, a, b, "an effect Eff _");
        return a;
      }
      case Node::Pure: {
        require_label(e, label, Label::Tgt);
        int t = infer(e->lhs, Label::Com);
        return u_.make(Ty::Kind::Eff, t);
      }
      case Node::Join: {
        require_label(e, label, Label::Tgt);
        int t = infer(e->lhs, Label::Tgt);
        expect_shape(e, t, Ty::Kind::Eff, a, b, "Eff (Eff _)");
        int inner = a;
        expect_shape(e, inner, Ty::Kind::Eff, a, b, "Eff (Eff _)");
        return inner;
      }
      case Node::Map: {
        require_label(e, label, Label::Tgt);
        int f = infer(e->lhs, Label::Tgt);
        expect_shape(e->lhs, f, Ty::Kind::Arrow, a, b, "a function");
        int s = a, t = b;
        int x = infer(e->rhs, Label::Tgt);
        unify_or_throw(e->rhs, x, u_.make(Ty::Kind::Eff, s));
        return u_.make(Ty::Kind::Eff, t);
      }
      case Node::Ap: {
        require_label(e, label, Label::Tgt);
        int f = infer(e->lhs, Label::Tgt);
        int s = u_.fresh(), t = u_.fresh();
        unify_or_throw(e->lhs, f, u_.make(Ty::Kind::Eff, u_.make(Ty::Kind::Arrow, s, t)));
        int x = infer(e->rhs, Label::Tgt);
        unify_or_throw(e->rhs, x, u_.make(Ty::Kind::Eff, s));
        return u_.make(Ty::Kind::Eff, t);
      }
    }
    throw Error(ErrorKind::TypeMismatch, "unknown node", e->pos);
  }

  const TypeEnv& env_;
  CheckOptions options_;
  Unifier u_;
  std::vector<std::pair<std::string, int>> scope_;
  std::unordered_map<const Term*, int> types_;
};

}  // namespace

Checked typecheck(const TermPtr& e, Label expected_label, const TypeEnv& env,
                  CheckOptions options) {
  Checker c(env, options);
  int t = c.infer(e, expected_label);
  auto ty = c.unifier().resolve(t, false);
  if (!ty) {
    throw Error(ErrorKind::AmbiguousType,
                "type " + c.unifier().show(t) + " is not determined; add an annotation (e : T)",
                e->pos);
  }
  return {*ty, c.stamp(e)};
}

Ty type_of(const TermPtr& e, Label expected_label, const TypeEnv& env, CheckOptions options) {
  return typecheck(e, expected_label, env, options).ty;
}

}  // namespace purify
