#include "purify/term.hpp"

#include <algorithm>
#include <cstdlib>

namespace purify {

const char* to_string(Label label) {
  switch (label) {
    case Label::Src: return "src";
    case Label::Tgt: return "tgt";
    case Label::Com: return "com";
  }
  return "?";
}

const char* to_string(Node node) {
  switch (node) {
    case Node::Var: return "Var";
    case Node::Const: return "Const";
    case Node::Unt: return "Unt";
    case Node::Lit: return "Lit";
    case Node::Prd: return "Prd";
    case Node::Fst: return "Fst";
    case Node::Snd: return "Snd";
    case Node::App: return "App";
    case Node::Lam: return "Lam";
    case Node::Each: return "Each";
    case Node::Pure: return "Pure";
    case Node::Map: return "Map";
    case Node::Ap: return "Ap";
    case Node::Join: return "Join";
  }
  return "?";
}

int Term::arity() const {
  switch (node) {
    case Node::Var:
    case Node::Const:
    case Node::Unt:
    case Node::Lit: return 0;
    case Node::Fst:
    case Node::Snd:
    case Node::Lam:
    case Node::Each:
    case Node::Pure:
    case Node::Join: return 1;
    case Node::Prd:
    case Node::App:
    case Node::Map:
    case Node::Ap: return 2;
  }
  return 0;
}

namespace {

TermPtr make(Node node, Label label, std::string text = {}, TermPtr lhs = nullptr,
             TermPtr rhs = nullptr) {
  auto t = std::make_shared<Term>();
  t->node = node;
  t->label = label;
  t->text = std::move(text);
  t->lhs = std::move(lhs);
  t->rhs = std::move(rhs);
  return t;
}

}  // namespace

namespace mk {
TermPtr var(std::string name, Label label) { return make(Node::Var, label, std::move(name)); }
TermPtr cnst(std::string name, Label label) { return make(Node::Const, label, std::move(name)); }
TermPtr unt(Label label) { return make(Node::Unt, label); }
TermPtr lit(std::string value, Label label) { return make(Node::Lit, label, std::move(value)); }
TermPtr prd(TermPtr fst, TermPtr snd, Label label) {
  return make(Node::Prd, label, {}, std::move(fst), std::move(snd));
}
TermPtr fst(TermPtr pair, Label label) { return make(Node::Fst, label, {}, std::move(pair)); }
TermPtr snd(TermPtr pair, Label label) { return make(Node::Snd, label, {}, std::move(pair)); }
TermPtr app(TermPtr fun, TermPtr arg, Label label) {
  return make(Node::App, label, {}, std::move(fun), std::move(arg));
}
TermPtr lam(std::string param, TermPtr body, Label label) {
  return make(Node::Lam, label, std::move(param), std::move(body));
}
TermPtr each(TermPtr eff) { return make(Node::Each, Label::Src, {}, std::move(eff)); }
TermPtr pure(TermPtr inner) { return make(Node::Pure, Label::Tgt, {}, std::move(inner)); }
TermPtr map(TermPtr fun, TermPtr arg) {
  return make(Node::Map, Label::Tgt, {}, std::move(fun), std::move(arg));
}
TermPtr ap(TermPtr fun, TermPtr arg) {
  return make(Node::Ap, Label::Tgt, {}, std::move(fun), std::move(arg));
}
TermPtr join(TermPtr nested) { return make(Node::Join, Label::Tgt, {}, std::move(nested)); }
}  // namespace mk

TermPtr rebuild(const Term& t, TermPtr lhs, TermPtr rhs) {
  auto out = std::make_shared<Term>(t);
  out->lhs = std::move(lhs);
  out->rhs = std::move(rhs);
  out->ty.reset();
  return out;
}

TermPtr with_label(const Term& t, Label label) {
  auto out = std::make_shared<Term>(t);
  out->label = label;
  return out;
}

void Signature::add(ConstDecl decl) {
  if (find(decl.name)) {
    throw Error(ErrorKind::DuplicateDecl, "constant '" + decl.name + "' declared twice");
  }
  if (!decl.name.empty() && decl.name.front() == kFreshPrefix) {
    throw Error(ErrorKind::ReservedName, "'" + decl.name + "' uses the reserved prefix '$'");
  }
  if (decl.kind == ConstKind::Pure && !decl.ty.effect_free()) {
    throw Error(ErrorKind::BadSignature,
                "prim '" + decl.name + "' mentions Eff; declare it as an effect");
  }
  if (decl.kind == ConstKind::Effectful && effect_arity(decl.ty) < 0) {
    throw Error(ErrorKind::BadSignature, "effect '" + decl.name + "' must have type A1 -> ... -> Eff R "
                                         "with Eff-free arguments and result, got " + decl.ty.show());
  }
  consts_.push_back(std::move(decl));
}

const ConstDecl* Signature::find(const std::string& name) const {
  auto it = std::find_if(consts_.begin(), consts_.end(),
                         [&](const ConstDecl& d) { return d.name == name; });
  return it == consts_.end() ? nullptr : &*it;
}

int Signature::effect_arity(const Ty& ty) {
  int n = 0;
  const Ty* t = &ty;
  while (t->is(Ty::Kind::Arrow)) {
    if (!t->dom().effect_free()) return -1;
    ++n;
    t = &t->cod();
  }
  if (!t->is(Ty::Kind::Eff) || !t->inner().effect_free()) return -1;
  return n;
}

namespace {

void require_common(const TermPtr& e) {
  if (e->label != Label::Com) {
    throw Error(ErrorKind::NotCommon,
                std::string(to_string(e->node)) + " node is labeled " + to_string(e->label), e->pos);
  }
  if (e->lhs) require_common(e->lhs);
  if (e->rhs) require_common(e->rhs);
}

TermPtr relabel_spine(const TermPtr& e, Label target) {
  if (e->node == Node::Lam) {
    auto out = with_label(*e, target);
    return out;
  }
  TermPtr lhs = e->lhs ? relabel_spine(e->lhs, target) : nullptr;
  TermPtr rhs = e->rhs ? relabel_spine(e->rhs, target) : nullptr;
  auto out = std::make_shared<Term>(*e);
  out->label = target;
  out->lhs = std::move(lhs);
  out->rhs = std::move(rhs);
  return out;
}

TermPtr relabel_all(const TermPtr& e, Label target) {
  auto out = std::make_shared<Term>(*e);
  out->label = target;
  if (e->lhs) out->lhs = relabel_all(e->lhs, target);
  if (e->rhs) out->rhs = relabel_all(e->rhs, target);
  return out;
}

}  // namespace

TermPtr relabel(const TermPtr& e, Label target) {
  require_common(e);
  if (target == Label::Com) return e;
  return relabel_spine(e, target);
}

TermPtr to_common(const TermPtr& e) {
  if (!is_combinator_free(e)) {
    throw Error(ErrorKind::NotCommon, "term contains effect marks or combinators", e->pos);
  }
  return relabel_all(e, Label::Com);
}

bool is_effect_free(const TermPtr& e) {
  if (e->node == Node::Each || e->node == Node::Join) return false;
  return (!e->lhs || is_effect_free(e->lhs)) && (!e->rhs || is_effect_free(e->rhs));
}

bool is_combinator_free(const TermPtr& e) {
  if (e->node == Node::Each || e->is_combinator()) return false;
  return (!e->lhs || is_combinator_free(e->lhs)) && (!e->rhs || is_combinator_free(e->rhs));
}

namespace {

using Binders = std::vector<std::string>;

// Distance from the innermost binder, or -1 when free.
int binder_index(const Binders& scope, const std::string& name) {
  for (int i = static_cast<int>(scope.size()) - 1; i >= 0; --i) {
    if (scope[i] == name) return static_cast<int>(scope.size()) - 1 - i;
  }
  return -1;
}

bool alpha_impl(const TermPtr& a, const TermPtr& b, Binders& sa, Binders& sb, bool labels) {
  if (a->node != b->node) return false;
  if (labels && a->label != b->label) return false;
  switch (a->node) {
    case Node::Var: {
      int ia = binder_index(sa, a->text);
      int ib = binder_index(sb, b->text);
      if (ia != ib) return false;
      return ia >= 0 || a->text == b->text;
    }
    case Node::Const:
    case Node::Lit: return a->text == b->text;
    case Node::Unt: return true;
    case Node::Lam: {
      sa.push_back(a->text);
      sb.push_back(b->text);
      bool eq = alpha_impl(a->lhs, b->lhs, sa, sb, labels);
      sa.pop_back();
      sb.pop_back();
      return eq;
    }
    default: break;
  }
  if (!alpha_impl(a->lhs, b->lhs, sa, sb, labels)) return false;
  return !a->rhs || alpha_impl(a->rhs, b->rhs, sa, sb, labels);
}

void free_vars_impl(const TermPtr& e, Binders& scope, std::set<std::string>& out) {
  if (e->node == Node::Var) {
    if (binder_index(scope, e->text) < 0) out.insert(e->text);
    return;
  }
  if (e->node == Node::Lam) {
    scope.push_back(e->text);
    free_vars_impl(e->lhs, scope, out);
    scope.pop_back();
    return;
  }
  if (e->lhs) free_vars_impl(e->lhs, scope, out);
  if (e->rhs) free_vars_impl(e->rhs, scope, out);
}

}  // namespace

bool alpha_eq(const TermPtr& a, const TermPtr& b) {
  Binders sa, sb;
  return alpha_impl(a, b, sa, sb, true);
}

bool same_shape(const TermPtr& a, const TermPtr& b) {
  Binders sa, sb;
  return alpha_impl(a, b, sa, sb, false);
}

std::set<std::string> free_vars(const TermPtr& e) {
  std::set<std::string> out;
  Binders scope;
  free_vars_impl(e, scope, out);
  return out;
}

std::size_t size(const TermPtr& e) {
  std::size_t n = 1;
  if (e->lhs) n += size(e->lhs);
  if (e->rhs) n += size(e->rhs);
  return n;
}

long max_fresh_index(const TermPtr& e) {
  long best = 0;
  if ((e->node == Node::Var || e->node == Node::Lam) && e->text.size() > 1 &&
      e->text.front() == kFreshPrefix) {
    char* end = nullptr;
    long n = std::strtol(e->text.c_str() + 1, &end, 10);
    if (end && *end == '\0') best = n;
  }
  if (e->lhs) best = std::max(best, max_fresh_index(e->lhs));
  if (e->rhs) best = std::max(best, max_fresh_index(e->rhs));
  return best;
}

}  // namespace purify
