#include "purify/translate.hpp"

namespace purify {

namespace {

constexpr Label C = Label::Com;
constexpr Label T = Label::Tgt;

// Leaves and lambdas move into a Pure payload unchanged except for their own
// label; lambda bodies are already Com.
TermPtr as_payload(const TermPtr& e) { return with_label(*e, C); }

bool is_value_form(const TermPtr& e) {
  switch (e->node) {
    case Node::Var:
    case Node::Const:
    case Node::Unt:
    case Node::Lit:
    case Node::Lam: return true;
    default: return false;
  }
}

// Pure (fun a -> a.1) and friends.
TermPtr projector(Node proj, FreshNames& fresh) {
  std::string a = fresh.next();
  auto body = proj == Node::Fst ? mk::fst(mk::var(a, C), C) : mk::snd(mk::var(a, C), C);
  return mk::pure(mk::lam(a, body, C));
}

// Pure (fun a -> fun b -> (a, b))
TermPtr pairer(FreshNames& fresh) {
  std::string a = fresh.next();
  std::string b = fresh.next();
  auto body = mk::lam(b, mk::prd(mk::var(a, C), mk::var(b, C), C), C);
  return mk::pure(mk::lam(a, body, C));
}

template <typename Ap, typename Join>
TermPtr translate(const TermPtr& e, FreshNames& fresh, Ap&& ap, Join&& join) {
  auto rec = [&](const TermPtr& x) { return translate(x, fresh, ap, join); };
  if (is_value_form(e)) return mk::pure(as_payload(e));
  switch (e->node) {
    case Node::Fst:
    case Node::Snd: {
      auto f = projector(e->node, fresh);
      return ap(f, rec(e->lhs));
    }
    case Node::Prd: {
      auto f = pairer(fresh);
      auto partial = ap(f, rec(e->lhs));
      return ap(partial, rec(e->rhs));
    }
    case Node::App: {
      auto f = rec(e->lhs);
      return ap(f, rec(e->rhs));
    }
    case Node::Each: return join(rec(e->lhs));
    default: break;
  }
  throw Error(ErrorKind::LabelMismatch,
              std::string(to_string(e->node)) + " cannot occur in a source term", e->pos);
}

// fs <*> xs  ==>  bind (fun f -> bind (fun x -> pure (f x)) xs) fs
TermPtr sequential_ap(const TermPtr& fs, const TermPtr& xs, FreshNames& fresh) {
  std::string f = fresh.next();
  std::string x = fresh.next();
  auto apply = mk::pure(mk::app(mk::var(f, C), mk::var(x, C), C));
  auto inner = mk::join(mk::map(mk::lam(x, apply, T), xs));
  return mk::join(mk::map(mk::lam(f, inner, T), fs));
}

}  // namespace

TermPtr smart_ap(const TermPtr& f, const TermPtr& e, FreshNames& fresh) {
  const bool pf = f->node == Node::Pure;
  const bool pe = e->node == Node::Pure;
  if (pf && pe) return mk::pure(mk::app(f->lhs, e->lhs, C));
  if (pf) {
    std::string x = fresh.next();
    return mk::map(mk::lam(x, mk::app(f->lhs, mk::var(x, C), C), T), e);
  }
  if (pe) {
    std::string x = fresh.next();
    return mk::map(mk::lam(x, mk::app(mk::var(x, C), e->lhs, C), T), f);
  }
  return mk::ap(f, e);
}

TermPtr smart_join(const TermPtr& e) {
  if (e->node == Node::Pure) return relabel(e->lhs, T);
  return mk::join(e);
}

TermPtr pure_translate(const TermPtr& src, FreshNames& fresh) {
  return translate(
      src, fresh, [&](const TermPtr& f, const TermPtr& e) { return smart_ap(f, e, fresh); },
      smart_join);
}

TermPtr pure_translate(const TermPtr& src) {
  auto fresh = FreshNames::avoiding(src);
  return pure_translate(src, fresh);
}

TermPtr naive_translate(const TermPtr& src) {
  auto fresh = FreshNames::avoiding(src);
  return translate(src, fresh, mk::ap, mk::join);
}

TermPtr seq_translate(const TermPtr& src) {
  auto fresh = FreshNames::avoiding(src);
  return translate(
      src, fresh, [&](const TermPtr& f, const TermPtr& e) { return sequential_ap(f, e, fresh); },
      mk::join);
}

// --- normalizer ------------------------------------------------------------

namespace {

class Normalizer {
 public:
  Normalizer(const TermPtr& e, NormalizeOptions options)
      : fresh_(FreshNames::avoiding(e)), options_(options),
        fuel_(4 * static_cast<long>(size(e))) {}

  TermPtr run(TermPtr e) {
    for (;;) {
      bool changed = false;
      e = pass(e, changed);
      if (!changed) return e;
    }
  }

 private:
  TermPtr pass(const TermPtr& e, bool& changed) {
    TermPtr lhs = e->lhs ? pass(e->lhs, changed) : nullptr;
    TermPtr rhs = e->rhs ? pass(e->rhs, changed) : nullptr;
    TermPtr cur = (lhs == e->lhs && rhs == e->rhs) ? e : rebuild(*e, lhs, rhs);
    if (cur->label != T) return cur;
    if (TermPtr next = step(cur)) {
      if (--fuel_ < 0) {
        throw Error(ErrorKind::FuelExhausted, "normalizer did not reach a fixed point");
      }
      changed = true;
      return next;
    }
    return cur;
  }

  // fun x -> f (g x), built at Com when both functions are plain code.
  TermPtr compose(const TermPtr& f, const TermPtr& g) {
    std::string x = fresh_.next();
    if (is_combinator_free(f) && is_combinator_free(g)) {
      auto body = mk::app(to_common(f), mk::app(to_common(g), mk::var(x, C), C), C);
      return mk::lam(x, body, T);
    }
    auto body = mk::app(f, mk::app(g, mk::var(x, T), T), T);
    return mk::lam(x, body, T);
  }

  static bool is_identity(const TermPtr& f) {
    return f->node == Node::Lam && f->lhs->node == Node::Var && f->lhs->text == f->text;
  }

  // fun x -> pure x
  static bool is_pure_lambda(const TermPtr& f) {
    if (f->node != Node::Lam || f->lhs->node != Node::Pure) return false;
    const auto& v = f->lhs->lhs;
    return v->node == Node::Var && v->text == f->text;
  }

  static bool is_bind(const TermPtr& e) {
    return e->node == Node::Join && e->lhs->node == Node::Map;
  }

  TermPtr step(const TermPtr& e) {
    switch (e->node) {
      case Node::Map: {
        const auto& f = e->lhs;
        const auto& arg = e->rhs;
        if (is_identity(f)) return arg;
        if (arg->node == Node::Map) return mk::map(compose(f, arg->lhs), arg->rhs);
        return nullptr;
      }
      case Node::Ap: {
        const auto& f = e->lhs;
        const auto& arg = e->rhs;
        if (f->node == Node::Pure || arg->node == Node::Pure) return smart_ap(f, arg, fresh_);
        if (options_.reassoc && arg->node == Node::Ap) {
          std::string u = fresh_.next(), v = fresh_.next(), x = fresh_.next();
          auto body = mk::app(mk::var(u, C), mk::app(mk::var(v, C), mk::var(x, C), C), C);
          auto dot = mk::lam(u, mk::lam(v, mk::lam(x, body, C), C), T);
          return mk::ap(mk::ap(mk::map(dot, f), arg->lhs), arg->rhs);
        }
        return nullptr;
      }
      case Node::Join: {
        const auto& inner = e->lhs;
        if (inner->node == Node::Pure) return relabel(inner->lhs, T);
        if (inner->node != Node::Map) return nullptr;
        const auto& g = inner->lhs;
        const auto& m = inner->rhs;
        // bind g (pure v) => g v
        if (m->node == Node::Pure) return mk::app(g, relabel(m->lhs, T), T);
        // bind pure m => m
        if (is_pure_lambda(g)) return m;
        // bind g (bind f m) => bind (fun x -> bind g (f x)) m
        if (is_bind(m)) {
          const auto& f = m->lhs->lhs;
          const auto& m0 = m->lhs->rhs;
          std::string x = fresh_.next();
          auto body = mk::join(mk::map(g, mk::app(f, mk::var(x, T), T)));
          return mk::join(mk::map(mk::lam(x, body, T), m0));
        }
        return nullptr;
      }
      default: return nullptr;
    }
  }

  FreshNames fresh_;
  NormalizeOptions options_;
  long fuel_;
};

}  // namespace

TermPtr normalize(const TermPtr& tgt, NormalizeOptions options) {
  return Normalizer(tgt, options).run(tgt);
}

}  // namespace purify
