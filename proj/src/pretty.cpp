#include "purify/pretty.hpp"

#include <sstream>

namespace purify {

namespace {

// Binding strength of a rendering; higher binds tighter.
enum Level { kExpr = 0, kApp = 1, kPost = 2, kAtom = 3 };

struct Rendered {
  std::string text;
  Level level;
};

Rendered render(const TermPtr& e);

std::string at_least(const TermPtr& e, Level need) {
  Rendered r = render(e);
  if (r.level >= need) return r.text;
  return "(" + r.text + ")";
}

// Argument of a call suffix: tuples and unit already carry their parentheses.
std::string call_arg(const TermPtr& a) {
  if (!a->ascribed && (a->node == Node::Prd || a->node == Node::Unt)) return render(a).text;
  return "(" + render(a).text + ")";
}

Rendered render_bare(const TermPtr& e) {
  switch (e->node) {
    case Node::Var:
    case Node::Const: return {e->text, kAtom};
    case Node::Unt: return {"()", kAtom};
    case Node::Lit: return {quote_string(e->text), kAtom};
    case Node::Prd: return {"(" + render(e->lhs).text + ", " + render(e->rhs).text + ")", kAtom};
    case Node::Fst: return {at_least(e->lhs, kPost) + ".1", kPost};
    case Node::Snd: return {at_least(e->lhs, kPost) + ".2", kPost};
    case Node::Each: return {at_least(e->lhs, kPost) + "!", kPost};
    case Node::App: return {at_least(e->lhs, kPost) + call_arg(e->rhs), kPost};
    case Node::Lam: return {"fun " + e->text + " -> " + render(e->lhs).text, kExpr};
    case Node::Pure: return {"pure " + at_least(e->lhs, kPost), kApp};
    case Node::Join: return {"join " + at_least(e->lhs, kPost), kApp};
    case Node::Map:
      return {"map " + at_least(e->lhs, kPost) + " " + at_least(e->rhs, kPost), kApp};
    case Node::Ap:
      return {"ap " + at_least(e->lhs, kPost) + " " + at_least(e->rhs, kPost), kApp};
  }
  return {"?", kAtom};
}

Rendered render(const TermPtr& e) {
  Rendered r = render_bare(e);
  if (e->ascribed) return {"(" + r.text + " : " + e->ascribed->show() + ")", kAtom};
  return r;
}

}  // namespace

std::string quote_string(const std::string& raw) {
  std::string out = "\"";
  for (char c : raw) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

std::string pretty(const TermPtr& e) { return render(e).text; }

std::string pretty_program(const Signature& sig, const TermPtr& body, Block block) {
  std::ostringstream out;
  for (const auto& d : sig.consts()) {
    out << (d.kind == ConstKind::Effectful ? "effect " : "prim ") << d.name << " : " << d.ty.show()
        << "\n";
  }
  out << (block == Block::Purify ? "purify" : "target") << " { " << pretty(body) << " }\n";
  return out.str();
}

}  // namespace purify
