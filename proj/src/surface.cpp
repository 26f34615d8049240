#include "purify/surface.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace purify {

namespace {

enum class Tok {
  Ident, String, LParen, RParen, LBrace, RBrace, Comma, Colon, Arrow, Bang, Dot1, Dot2,
  Equals, PlusPlus, End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourcePos pos;
  bool adjacent = false;  // no whitespace or comment before this token
};

const std::set<std::string, std::less<>> kKeywords = {
    "effect", "prim", "purify", "target", "fun", "let", "in",
    "pure", "map", "ap", "join", "Unit", "Str", "Eff"};

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == kFreshPrefix;
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      bool skipped = skip_space();
      Token t;
      t.pos = {line_, col_};
      t.adjacent = !skipped && !out.empty();
      if (at_end()) {
        t.kind = Tok::End;
        out.push_back(t);
        return out;
      }
      char c = peek();
      if (is_ident_start(c)) {
        std::string s(1, advance());
        while (!at_end() && is_ident_char(peek())) s += advance();
        if (s.size() == 1 && s[0] == kFreshPrefix) fail(t.pos, "identifier after '$'");
        t.kind = Tok::Ident;
        t.text = std::move(s);
      } else if (c == '"') {
        t.kind = Tok::String;
        t.text = string_literal(t.pos);
      } else if (c == '-' && peek(1) == '>') {
        advance(), advance();
        t.kind = Tok::Arrow;
      } else if (c == '+' && peek(1) == '+') {
        advance(), advance();
        t.kind = Tok::PlusPlus;
      } else if (c == '.' && (peek(1) == '1' || peek(1) == '2')) {
        advance();
        t.kind = advance() == '1' ? Tok::Dot1 : Tok::Dot2;
      } else {
        advance();
        switch (c) {
          case '(': t.kind = Tok::LParen; break;
          case ')': t.kind = Tok::RParen; break;
          case '{': t.kind = Tok::LBrace; break;
          case '}': t.kind = Tok::RBrace; break;
          case ',': t.kind = Tok::Comma; break;
          case ':': t.kind = Tok::Colon; break;
          case '!': t.kind = Tok::Bang; break;
          case '=': t.kind = Tok::Equals; break;
          default: fail(t.pos, "a token", std::string("'") + c + "'");
        }
      }
      out.push_back(std::move(t));
    }
  }

 private:
  [[noreturn]] static void fail(SourcePos pos, const std::string& expected,
                                const std::string& found = {}) {
    std::string msg = "expected " + expected;
    if (!found.empty()) msg += ", found " + found;
    throw Error(ErrorKind::ParseError, msg, pos);
  }

  bool at_end() const { return i_ >= src_.size(); }
  char peek(std::size_t k = 0) const { return i_ + k < src_.size() ? src_[i_ + k] : '\0'; }

  char advance() {
    char c = src_[i_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  bool skip_space() {
    bool skipped = false;
    while (!at_end()) {
      if (std::isspace(static_cast<unsigned char>(peek()))) {
        advance();
      } else if (peek() == '-' && peek(1) == '-') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        break;
      }
      skipped = true;
    }
    return skipped;
  }

  std::string string_literal(SourcePos start) {
    advance();
    std::string s;
    for (;;) {
      if (at_end() || peek() == '\n') fail(start, "closing '\"'");
      char c = advance();
      if (c == '"') return s;
      if (c != '\\') {
        s += c;
        continue;
      }
      if (at_end()) fail(start, "escape sequence");
      char e = advance();
      switch (e) {
        case 'n': s += '\n'; break;
        case 't': s += '\t'; break;
        case '"': s += '"'; break;
        case '\\': s += '\\'; break;
        default: fail({line_, col_ - 1}, "one of \\n \\t \\\" \\\\", std::string("\\") + e);
      }
    }
  }

  std::string_view src_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

const char* describe(Tok k) {
  switch (k) {
    case Tok::Ident: return "identifier";
    case Tok::String: return "string";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Arrow: return "'->'";
    case Tok::Bang: return "'!'";
    case Tok::Dot1: return "'.1'";
    case Tok::Dot2: return "'.2'";
    case Tok::Equals: return "'='";
    case Tok::PlusPlus: return "'++'";
    case Tok::End: return "end of input";
  }
  return "?";
}

using K = SurfaceExpr::Kind;

SurfaceExprPtr node(K kind, SourcePos pos, std::vector<SurfaceExprPtr> kids = {},
                    std::string text = {}) {
  auto e = std::make_shared<SurfaceExpr>();
  e->kind = kind;
  e->pos = pos;
  e->kids = std::move(kids);
  e->text = std::move(text);
  return e;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(Lexer(src).run()) {}

  SurfaceProgram program() {
    SurfaceProgram p;
    std::set<std::string> seen;
    while (is_kw("effect") || is_kw("prim")) {
      SurfaceDecl d;
      d.kind = next().text == "effect" ? ConstKind::Effectful : ConstKind::Pure;
      d.pos = cur().pos;
      d.name = ident("constant name");
      if (!seen.insert(d.name).second) {
        throw Error(ErrorKind::DuplicateDecl, "constant '" + d.name + "' declared twice", d.pos);
      }
      expect(Tok::Colon);
      d.ty = type();
      p.decls.push_back(std::move(d));
    }
    if (is_kw("purify")) {
      p.block = Block::Purify;
    } else if (is_kw("target")) {
      p.block = Block::Target;
    } else {
      fail("'effect', 'prim', 'purify' or 'target'");
    }
    next();
    expect(Tok::LBrace);
    p.body = expr();
    expect(Tok::RBrace);
    expect(Tok::End);
    return p;
  }

  Ty type() {
    Ty left;
    if (is_kw("Eff")) {
      next();
      left = Ty::eff(atype());
    } else {
      left = atype();
    }
    if (cur().kind == Tok::Arrow) {
      next();
      return Ty::arrow(left, type());
    }
    return left;
  }

  SurfaceExprPtr expr() {
    SourcePos pos = cur().pos;
    if (is_kw("fun")) {
      next();
      std::string x = ident("parameter name");
      expect(Tok::Arrow);
      return node(K::Fun, pos, {expr()}, std::move(x));
    }
    if (is_kw("let")) {
      next();
      std::string x = ident("bound name");
      expect(Tok::Equals);
      auto bound = expr();
      expect_kw("in");
      return node(K::Let, pos, {bound, expr()}, std::move(x));
    }
    auto lhs = app();
    while (cur().kind == Tok::PlusPlus) {
      SourcePos op = next().pos;
      lhs = node(K::Concat, op, {lhs, app()});
    }
    return lhs;
  }

  void expect_end() { expect(Tok::End); }

 private:
  const Token& cur() const { return toks_[i_]; }
  const Token& next() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }

  bool is_kw(std::string_view kw) const { return cur().kind == Tok::Ident && cur().text == kw; }

  [[noreturn]] void fail(const std::string& expected) const {
    std::string found = describe(cur().kind);
    if (cur().kind == Tok::Ident) found = "'" + cur().text + "'";
    throw Error(ErrorKind::ParseError, "expected " + expected + ", found " + found, cur().pos);
  }

  void expect(Tok k) {
    if (cur().kind != k) fail(describe(k));
    next();
  }

  void expect_kw(std::string_view kw) {
    if (!is_kw(kw)) fail("'" + std::string(kw) + "'");
    next();
  }

  std::string ident(const std::string& what) {
    if (cur().kind != Tok::Ident || kKeywords.count(cur().text)) fail(what);
    return next().text;
  }

  Ty atype() {
    if (is_kw("Unit")) return next(), Ty::unit();
    if (is_kw("Str")) return next(), Ty::str();
    if (cur().kind != Tok::LParen) fail("a type");
    next();
    Ty first = type();
    if (cur().kind == Tok::Comma) {
      next();
      Ty second = type();
      expect(Tok::RParen);
      return Ty::prod(first, second);
    }
    expect(Tok::RParen);
    return first;
  }

  bool starts_atom() const {
    const Token& t = cur();
    if (t.kind == Tok::Ident) return !kKeywords.count(t.text);
    return t.kind == Tok::String || t.kind == Tok::LParen;
  }

  SurfaceExprPtr app() {
    SourcePos pos = cur().pos;
    if (is_kw("pure") || is_kw("join")) {
      K k = next().text == "pure" ? K::Pure : K::Join;
      return node(k, pos, {post()});
    }
    if (is_kw("map") || is_kw("ap")) {
      K k = next().text == "map" ? K::Map : K::Ap;
      auto f = post();
      return node(k, pos, {f, post()});
    }
    auto lhs = post();
    while (starts_atom()) {
      SourcePos at = cur().pos;
      lhs = node(K::Apply, at, {lhs, post()});
    }
    return lhs;
  }

  SurfaceExprPtr post() {
    auto e = atom();
    for (;;) {
      const Token& t = cur();
      if (t.kind == Tok::LParen && t.adjacent) {
        SourcePos at = t.pos;
        e = node(K::Apply, at, {e, parenthesized()});
      } else if (t.kind == Tok::Bang) {
        e = node(K::Mark, next().pos, {e});
      } else if (t.kind == Tok::Dot1) {
        e = node(K::Proj1, next().pos, {e});
      } else if (t.kind == Tok::Dot2) {
        e = node(K::Proj2, next().pos, {e});
      } else {
        return e;
      }
    }
  }

  SurfaceExprPtr atom() {
    const Token& t = cur();
    if (t.kind == Tok::Ident && !kKeywords.count(t.text)) {
      SourcePos pos = t.pos;
      return node(K::Name, pos, {}, next().text);
    }
    if (t.kind == Tok::String) {
      SourcePos pos = t.pos;
      return node(K::Str, pos, {}, next().text);
    }
    if (t.kind == Tok::LParen) return parenthesized();
    fail("an expression");
  }

  // "()" | "(" expr ")" | "(" expr "," expr ")" | "(" expr ":" type ")"
  SurfaceExprPtr parenthesized() {
    SourcePos pos = cur().pos;
    expect(Tok::LParen);
    if (cur().kind == Tok::RParen) {
      next();
      return node(K::Unit, pos);
    }
    auto first = expr();
    if (cur().kind == Tok::Comma) {
      next();
      auto second = expr();
      expect(Tok::RParen);
      return node(K::Tuple, pos, {first, second});
    }
    if (cur().kind == Tok::Colon) {
      next();
      auto e = std::make_shared<SurfaceExpr>();
      e->kind = K::Ascribe;
      e->pos = pos;
      e->kids = {first};
      e->type = type();
      expect(Tok::RParen);
      return e;
    }
    expect(Tok::RParen);
    return first;
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

// --- elaboration -----------------------------------------------------------

bool has_mark(const SurfaceExprPtr& e) {
  if (e->kind == K::Mark) return true;
  return std::any_of(e->kids.begin(), e->kids.end(), has_mark);
}

SourcePos first_mark(const SurfaceExprPtr& e) {
  if (e->kind == K::Mark) return e->pos;
  for (const auto& k : e->kids) {
    if (has_mark(k)) return first_mark(k);
  }
  return e->pos;
}

bool has_combinator(const SurfaceExprPtr& e) {
  if (e->kind == K::Pure || e->kind == K::Map || e->kind == K::Ap || e->kind == K::Join) {
    return true;
  }
  return std::any_of(e->kids.begin(), e->kids.end(), has_combinator);
}

class Elaborator {
 public:
  Elaborator(const Signature& sig, Block block) : sig_(sig), block_(block) {}

  TermPtr run(const SurfaceExprPtr& e, Label label) { return go(e, label); }

 private:
  TermPtr at(TermPtr t, SourcePos pos) {
    std::const_pointer_cast<Term>(t)->pos = pos;
    return t;
  }

  TermPtr name(const SurfaceExprPtr& e, Label label) {
    if (block_ == Block::Purify && e->text.front() == kFreshPrefix) {
      throw Error(ErrorKind::ReservedName, "'" + e->text + "' uses the reserved prefix '$'",
                  e->pos);
    }
    if (std::find(scope_.rbegin(), scope_.rend(), e->text) != scope_.rend()) {
      return at(mk::var(e->text, label), e->pos);
    }
    if (sig_.find(e->text)) return at(mk::cnst(e->text, label), e->pos);
    throw Error(ErrorKind::UnboundName, "'" + e->text + "' is not bound", e->pos);
  }

  // Label of a lambda body: Com, unless a target-fragment lambda builds
  // effect combinators in its body.
  Label body_label(const SurfaceExprPtr& body, Label lam_label) const {
    if (block_ == Block::Target && lam_label == Label::Tgt && has_combinator(body)) {
      return Label::Tgt;
    }
    return Label::Com;
  }

  TermPtr lambda(const std::string& x, const SurfaceExprPtr& body, Label label, SourcePos pos) {
    if (block_ == Block::Purify && x.front() == kFreshPrefix) {
      throw Error(ErrorKind::ReservedName, "'" + x + "' uses the reserved prefix '$'", pos);
    }
    if (has_mark(body)) {
      throw Error(ErrorKind::MarkUnderLambda,
                  "effect mark '!' inside a function body; marks may only appear outside "
                  "lambdas",
                  first_mark(body));
    }
    scope_.push_back(x);
    TermPtr b = go(body, body_label(body, label));
    scope_.pop_back();
    return at(mk::lam(x, std::move(b), label), pos);
  }

  void require_target(const SurfaceExprPtr& e, Label label, const char* what) {
    if (block_ == Block::Purify) {
      throw Error(ErrorKind::ParseError,
                  std::string("target combinator '") + what + "' is not allowed in a purify block",
                  e->pos);
    }
    if (label != Label::Tgt) {
      throw Error(ErrorKind::LabelMismatch,
                  std::string("'") + what + "' inside effect-free code", e->pos);
    }
  }

  TermPtr go(const SurfaceExprPtr& e, Label label) {
    const auto& k = e->kids;
    switch (e->kind) {
      case K::Name: return name(e, label);
      case K::Unit: return at(mk::unt(label), e->pos);
      case K::Str: return at(mk::lit(e->text, label), e->pos);
      case K::Tuple: return at(mk::prd(go(k[0], label), go(k[1], label), label), e->pos);
      case K::Apply: return at(mk::app(go(k[0], label), go(k[1], label), label), e->pos);
      case K::Proj1: return at(mk::fst(go(k[0], label), label), e->pos);
      case K::Proj2: return at(mk::snd(go(k[0], label), label), e->pos);
      case K::Mark:
        if (label != Label::Src) {
          throw Error(block_ == Block::Target ? ErrorKind::LabelMismatch
                                              : ErrorKind::MarkUnderLambda,
                      "effect mark '!' outside direct-style code", e->pos);
        }
        return at(mk::each(go(k[0], Label::Src)), e->pos);
      case K::Fun: return lambda(e->text, k[0], label, e->pos);
      case K::Let: return let(e, label);
      case K::Concat: {
        if (!sig_.find("concat")) {
          throw Error(ErrorKind::UnboundName, "'++' needs a declaration of 'concat'", e->pos);
        }
        auto c = at(mk::cnst("concat", label), e->pos);
        auto partial = at(mk::app(c, go(k[0], label), label), e->pos);
        return at(mk::app(partial, go(k[1], label), label), e->pos);
      }
      case K::Ascribe: {
        auto t = std::const_pointer_cast<Term>(go(k[0], label));
        auto copy = std::make_shared<Term>(*t);
        copy->ascribed = e->type;
        return copy;
      }
      case K::Pure:
        require_target(e, label, "pure");
        return at(mk::pure(go(k[0], Label::Com)), e->pos);
      case K::Join:
        require_target(e, label, "join");
        return at(mk::join(go(k[0], Label::Tgt)), e->pos);
      case K::Map:
        require_target(e, label, "map");
        return at(mk::map(go(k[0], Label::Tgt), go(k[1], Label::Tgt)), e->pos);
      case K::Ap:
        require_target(e, label, "ap");
        return at(mk::ap(go(k[0], Label::Tgt), go(k[1], Label::Tgt)), e->pos);
    }
    throw Error(ErrorKind::ParseError, "unknown expression", e->pos);
  }

  // let x = e in b  ==>  (fun x -> b)(e), or ((fun x -> b')(e))! when b = b'!
  TermPtr let(const SurfaceExprPtr& e, Label label) {
    const auto& bound = e->kids[0];
    const auto& body = e->kids[1];
    const char* hint =
        "'let' binds effect-free expressions only; express sequencing with nested marks, "
        "e.g. g(f(x)!)!";
    if (has_mark(bound)) {
      if (label != Label::Src) {
        throw Error(ErrorKind::MarkUnderLambda, "effect mark '!' inside a function body",
                    first_mark(bound));
      }
      throw Error(ErrorKind::LetTooEffectful, hint, e->pos);
    }
    if (!has_mark(body)) {
      auto fn = lambda(e->text, body, label, e->pos);
      return at(mk::app(fn, go(bound, label), label), e->pos);
    }
    if (label == Label::Src && body->kind == K::Mark && !has_mark(body->kids[0])) {
      auto fn = lambda(e->text, body->kids[0], Label::Src, e->pos);
      auto call = at(mk::app(fn, go(bound, Label::Src), Label::Src), e->pos);
      return at(mk::each(call), body->pos);
    }
    if (label != Label::Src) {
      throw Error(ErrorKind::MarkUnderLambda, "effect mark '!' inside a function body",
                  first_mark(body));
    }
    throw Error(ErrorKind::LetTooEffectful, hint, e->pos);
  }

  const Signature& sig_;
  Block block_;
  std::vector<std::string> scope_;
};

}  // namespace

SurfaceProgram parse(std::string_view input) { return Parser(input).program(); }

Ty parse_type(std::string_view input) {
  Parser p(input);
  Ty t = p.type();
  p.expect_end();
  return t;
}

Program elaborate(const SurfaceProgram& p) {
  Program out;
  out.block = p.block;
  for (const auto& d : p.decls) {
    try {
      out.sig.add({d.name, d.ty, d.kind});
    } catch (const Error& err) {
      throw Error(err.kind(), err.message(), d.pos);
    }
  }
  Label top = p.block == Block::Purify ? Label::Src : Label::Tgt;
  out.term = Elaborator(out.sig, p.block).run(p.body, top);
  return out;
}

Program load_program(std::string_view input) { return elaborate(parse(input)); }

TermPtr parse_term(std::string_view input, const Signature& sig, Label label) {
  Parser p(input);
  auto e = p.expr();
  p.expect_end();
  Block block = label == Label::Src ? Block::Purify : Block::Target;
  return Elaborator(sig, block).run(e, label);
}

}  // namespace purify
