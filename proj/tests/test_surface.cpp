#include <gtest/gtest.h>

#include "purify/pretty.hpp"
#include "purify/surface.hpp"
#include "purify/typing.hpp"
#include "support.hpp"

using namespace purify;
using purify::test::fetch_sig;

namespace {

ErrorKind error_of(const std::string& program) {
  try {
    load_program(program);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for: " << program;
  return ErrorKind::ConfigError;
}

TermPtr src(const std::string& text) { return parse_term(text, fetch_sig(), Label::Src); }

}  // namespace

TEST(Parse, MinimalProgram) {
  Program p = load_program("effect f : Str -> Eff Str\npurify { f(\"a\")! }");
  ASSERT_EQ(p.sig.consts().size(), 1u);
  EXPECT_EQ(p.sig.consts()[0].kind, ConstKind::Effectful);
  TermPtr want = mk::each(mk::app(mk::cnst("f", Label::Src), mk::lit("a", Label::Src), Label::Src));
  EXPECT_TRUE(alpha_eq(p.term, want));
}

TEST(Parse, NestedMarksOfTwoChains) {
  Program p = load_program(test::sample("two_chain.pfy"));
  auto chain = [](const char* url) {
    auto call = [](TermPtr arg) {
      return mk::each(mk::app(mk::cnst("fetch", Label::Src), std::move(arg), Label::Src));
    };
    return call(call(mk::cnst(url, Label::Src)));
  };
  TermPtr concat = mk::cnst("concat", Label::Src);
  TermPtr want = mk::app(mk::app(concat, chain("urlXX"), Label::Src), chain("urlYY"), Label::Src);
  EXPECT_TRUE(alpha_eq(p.term, want)) << pretty(p.term);
}

TEST(Parse, AdjacentParenIsCallSpacedParenIsArgument) {
  Signature sig = test::sig_of("prim g : Str -> Str -> Str");
  TermPtr call = parse_term("g(\"a\")(\"b\")", sig, Label::Com);
  TermPtr juxt = parse_term("g (\"a\") (\"b\")", sig, Label::Com);
  EXPECT_TRUE(alpha_eq(call, juxt));
  TermPtr marked = parse_term("fetch(\"a\")!", fetch_sig(), Label::Src);
  EXPECT_EQ(marked->node, Node::Each);
}

TEST(Parse, CommentsProjectionsAndAscription) {
  Program p = load_program(
      "-- a comment\nprim c : (Str, Unit)\npurify { (c.1, c.2) -- trailing\n }");
  EXPECT_EQ(type_of(p.term, Label::Src, TypeEnv(p.sig)), Ty::prod(Ty::str(), Ty::unit()));
  Program q = load_program("purify { (fun x -> x : Str -> Str) }");
  EXPECT_EQ(type_of(q.term, Label::Src, TypeEnv(q.sig)), Ty::arrow(Ty::str(), Ty::str()));
}

TEST(Parse, Errors) {
  EXPECT_EQ(error_of("purify { ( }"), ErrorKind::ParseError);
  EXPECT_EQ(error_of("effect f : Str\npurify { () }"), ErrorKind::BadSignature);
  EXPECT_EQ(error_of("prim a : Str\nprim a : Str\npurify { () }"), ErrorKind::DuplicateDecl);
  EXPECT_EQ(error_of("purify { () } extra"), ErrorKind::ParseError);
  EXPECT_EQ(error_of("purify { \"open }"), ErrorKind::ParseError);
  EXPECT_EQ(error_of("purify { pure () }"), ErrorKind::ParseError);
}

TEST(Parse, ErrorCarriesPosition) {
  try {
    load_program("purify {\n  (\"a\" \"b\", ) }");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_EQ(e.pos().line, 2);
    EXPECT_GT(e.pos().col, 1);
  }
}

TEST(Elaborate, MarkUnderLambdaIsRejected) {
  EXPECT_EQ(error_of("effect f : Str -> Eff Str\npurify { fun x -> f(x)! }"),
            ErrorKind::MarkUnderLambda);
  EXPECT_EQ(error_of("effect g : Str -> Eff Str\npurify { fun y -> g(y)! }"),
            ErrorKind::MarkUnderLambda);
}

TEST(Elaborate, LetWithMarkedBody) {
  Program p = load_program("effect f : Str -> Eff Str\npurify { let x = \"a\" in f(x)! }");
  TermPtr lam = mk::lam("x", mk::app(mk::cnst("f", Label::Com), mk::var("x", Label::Com), Label::Com),
                        Label::Src);
  TermPtr want = mk::each(mk::app(lam, mk::lit("a", Label::Src), Label::Src));
  EXPECT_TRUE(alpha_eq(p.term, want)) << pretty(p.term);
  EXPECT_EQ(type_of(p.term, Label::Src, TypeEnv(p.sig)), Ty::str());
}

TEST(Elaborate, LetWithPureBody) {
  Program p = load_program("prim concat : Str -> Str -> Str\npurify { let x = \"a\" in x ++ x }");
  EXPECT_EQ(p.term->node, Node::App);
  EXPECT_EQ(p.term->lhs->node, Node::Lam);
  EXPECT_EQ(p.term->lhs->lhs->label, Label::Com);
}

TEST(Elaborate, LetTooEffectful) {
  EXPECT_EQ(error_of("effect f : Str -> Eff Str\npurify { let x = f(\"a\")! in x }"),
            ErrorKind::LetTooEffectful);
  EXPECT_EQ(error_of("effect f : Str -> Eff Str\npurify { let x = \"a\" in (f(x)!, f(x)!) }"),
            ErrorKind::LetTooEffectful);
}

TEST(Elaborate, NamesAndReservedPrefix) {
  EXPECT_EQ(error_of("purify { nope }"), ErrorKind::UnboundName);
  EXPECT_EQ(error_of("purify { \"a\" ++ \"b\" }"), ErrorKind::UnboundName);
  EXPECT_EQ(error_of("purify { fun $1 -> $1 }"), ErrorKind::ReservedName);
}

TEST(Elaborate, NeverProducesCombinators) {
  TermPtr e = src("(fetch(\"a\")!, fetch(fetch(urlXX)!)!)");
  std::function<bool(const TermPtr&)> any = [&](const TermPtr& t) -> bool {
    if (!t) return false;
    return t->is_combinator() || any(t->lhs) || any(t->rhs);
  };
  EXPECT_FALSE(any(e));
  EXPECT_EQ(type_of(e, Label::Src, TypeEnv(fetch_sig())), Ty::prod(Ty::str(), Ty::str()));
}

TEST(RoundTrip, SourceProgramsReparse) {
  for (const char* text : {"(fetch(\"a\")!, fetch(fetch(urlXX)!)!)", "(fun x -> (x, x))(urlXX)",
                           "concat(fetch(\"q\\\"uote\")!)(\"\")", "((urlXX, ()).1, none!)"}) {
    TermPtr e = src(text);
    EXPECT_TRUE(alpha_eq(src(pretty(e)), e)) << text << " -> " << pretty(e);
  }
}

TEST(RoundTrip, TargetProgramIsFixedPoint) {
  Program p = load_program(test::sample("two_fetch.pfy"));
  std::string text = pretty_program(p.sig, mk::ap(mk::pure(mk::lam("$1", mk::var("$1", Label::Com),
                                                                   Label::Com)),
                                                  mk::app(mk::cnst("fetch", Label::Tgt),
                                                          mk::lit("x", Label::Tgt), Label::Tgt)),
                                    Block::Target);
  Program q = load_program(text);
  EXPECT_EQ(q.block, Block::Target);
  EXPECT_EQ(pretty_program(q.sig, q.term, q.block), text);
}

TEST(ParseType, Grammar) {
  EXPECT_EQ(parse_type("Str -> Eff Str"), Ty::arrow(Ty::str(), Ty::eff(Ty::str())));
  EXPECT_EQ(parse_type("(Str, Unit) -> Unit"),
            Ty::arrow(Ty::prod(Ty::str(), Ty::unit()), Ty::unit()));
  EXPECT_EQ(parse_type("Eff (Str -> Str)"), Ty::eff(Ty::arrow(Ty::str(), Ty::str())));
  EXPECT_THROW(parse_type("Str ->"), Error);
}
