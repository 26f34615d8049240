#include <gtest/gtest.h>

#include "purify/eval.hpp"
#include "purify/metrics.hpp"
#include "purify/pretty.hpp"
#include "purify/surface.hpp"
#include "purify/translate.hpp"
#include "purify/typing.hpp"
#include "support.hpp"

using namespace purify;
using purify::test::fetch_sig;

namespace {

constexpr Label S = Label::Src, T = Label::Tgt, C = Label::Com;

TermPtr src(const std::string& text, const Signature& sig = fetch_sig()) {
  return parse_term(text, sig, S);
}

TermPtr tgt(const std::string& text, const Signature& sig = fetch_sig()) {
  return parse_term(text, sig, T);
}

bool contains(const TermPtr& e, Node n) {
  if (!e) return false;
  return e->node == n || contains(e->lhs, n) || contains(e->rhs, n);
}

bool same_everywhere(const TermPtr& a, const TermPtr& b, const Ty& ty, const Signature& sig) {
  for (const auto& m : builtin_monads()) {
    ConstEnv env = build_const_env(sig, m);
    if (!observe_equal(eval(a, T, m, env), eval(b, T, m, env), ty, m)) return false;
  }
  return true;
}

int count(const TermPtr& e, Node n) {
  if (!e) return 0;
  return (e->node == n) + count(e->lhs, n) + count(e->rhs, n);
}

}  // namespace

TEST(Pure, VariableBecomesPure) {
  TermPtr out = pure_translate(mk::var("x", S));
  EXPECT_TRUE(alpha_eq(out, mk::pure(mk::var("x", C))));
}

TEST(Pure, TwoFetchPairMatchesGolden) {
  Program p = load_program(test::sample("two_fetch.pfy"));
  TermPtr out = pure_translate(p.term);
  TermPtr want = tgt(test::golden("two_fetch")["opt_term"], p.sig);
  EXPECT_TRUE(alpha_eq(out, want)) << pretty(out);
  EXPECT_EQ(out->node, Node::Ap);
  EXPECT_EQ(out->lhs->node, Node::Map);
}

TEST(Pure, TwoChainMatchesGolden) {
  Program p = load_program(test::sample("two_chain.pfy"));
  TermPtr out = pure_translate(p.term);
  TermPtr want = tgt(test::golden("two_chain")["opt_term"], p.sig);
  EXPECT_TRUE(alpha_eq(out, want)) << pretty(out);
  EXPECT_EQ(type_of(out, T, TypeEnv(p.sig)), Ty::eff(Ty::str()));
}

TEST(Pure, EmitsNoMarksAndCommonLambdaBodies) {
  TermPtr out = pure_translate(src("(fetch(urlXX)!.1, (fun x -> x)(fetch(\"a\")!))",
                                   test::sig_of("effect fetch : Str -> Eff (Str, Str)\nprim urlXX : Str")));
  EXPECT_FALSE(contains(out, Node::Each));
  std::function<void(const TermPtr&)> walk = [&](const TermPtr& t) {
    if (!t) return;
    if (t->node == Node::Lam) {
      EXPECT_EQ(t->lhs->label, C);
    }
    walk(t->lhs);
    walk(t->rhs);
  };
  walk(out);
}

TEST(Pure, FreshNamesAvoidExistingOnes) {
  TermPtr e = mk::app(mk::lam("$7", mk::var("$7", C), S),
                      mk::each(mk::app(mk::cnst("fetch", S), mk::lit("a", S), S)), S);
  TermPtr out = pure_translate(e);
  EXPECT_GT(max_fresh_index(out), 7);
  EXPECT_EQ(type_of(out, T, TypeEnv(fetch_sig())), Ty::eff(Ty::str()));
}

TEST(SmartAp, BothPure) {
  FreshNames fresh;
  TermPtr id = mk::lam("x", mk::var("x", C), C);
  TermPtr out = smart_ap(mk::pure(id), mk::pure(mk::unt(C)), fresh);
  EXPECT_TRUE(alpha_eq(out, mk::pure(mk::app(id, mk::unt(C), C))));
}

TEST(SmartAp, PureFunction) {
  FreshNames fresh;
  TermPtr g = mk::var("g", C);
  TermPtr out = smart_ap(mk::pure(g), mk::cnst("ff", T), fresh);
  TermPtr want = mk::map(mk::lam("$1", mk::app(g, mk::var("$1", C), C), T), mk::cnst("ff", T));
  EXPECT_TRUE(alpha_eq(out, want)) << pretty(out);
}

TEST(SmartAp, PureArgument) {
  FreshNames fresh;
  TermPtr out = smart_ap(mk::cnst("gf", T), mk::pure(mk::unt(C)), fresh);
  TermPtr want =
      mk::map(mk::lam("$1", mk::app(mk::var("$1", C), mk::unt(C), C), T), mk::cnst("gf", T));
  EXPECT_TRUE(alpha_eq(out, want)) << pretty(out);
}

TEST(SmartAp, FallsThroughToAp) {
  FreshNames fresh;
  TermPtr out = smart_ap(mk::cnst("gf", T), mk::cnst("ff", T), fresh);
  EXPECT_TRUE(alpha_eq(out, mk::ap(mk::cnst("gf", T), mk::cnst("ff", T))));
}

TEST(SmartJoin, PurePayloadIsRelabeled) {
  TermPtr out = smart_join(mk::pure(mk::cnst("ff", C)));
  EXPECT_TRUE(alpha_eq(out, mk::cnst("ff", T)));
}

TEST(SmartJoin, FallsThroughToJoin) {
  TermPtr m = mk::map(mk::lam("x", mk::var("x", C), T), mk::cnst("ff", T));
  EXPECT_TRUE(alpha_eq(smart_join(m), mk::join(m)));
}

TEST(SmartJoin, NestedPureCollapsesWithoutJoin) {
  // x : Eff (Eff Str); JOIN (JOIN (pure (pure x)-shaped payload)) keeps only x.
  TermPtr x = mk::var("x", C);
  TermPtr inner = smart_join(mk::pure(x));
  EXPECT_FALSE(contains(inner, Node::Join));
  EXPECT_TRUE(alpha_eq(inner, mk::var("x", T)));
}

TEST(Naive, Examples) {
  EXPECT_TRUE(alpha_eq(naive_translate(mk::var("x", S)), mk::pure(mk::var("x", C))));
  TermPtr app = mk::app(mk::var("f", S), mk::var("x", S), S);
  EXPECT_TRUE(alpha_eq(naive_translate(app),
                       mk::ap(mk::pure(mk::var("f", C)), mk::pure(mk::var("x", C)))));
  TermPtr each = mk::each(mk::cnst("ff", S));
  EXPECT_TRUE(alpha_eq(naive_translate(each), mk::join(mk::pure(mk::cnst("ff", C)))));
}

TEST(Seq, Examples) {
  EXPECT_TRUE(alpha_eq(seq_translate(mk::var("x", S)), mk::pure(mk::var("x", C))));
  Program p = load_program(test::sample("two_fetch.pfy"));
  TermPtr s = seq_translate(p.term);
  EXPECT_FALSE(contains(s, Node::Ap));
  Cost c = effect_cost(s, T, p.sig);
  EXPECT_EQ(c.span, 2);
  EXPECT_EQ(c.work, 2);
  EXPECT_EQ(type_of(s, T, TypeEnv(p.sig), CheckOptions{true}), Ty::eff(Ty::prod(Ty::str(), Ty::str())));
}

TEST(Seq, AgreesWithPureOnMarkFreeTerms) {
  TermPtr e = src("(concat(urlXX)(\"b\"), (fun x -> (x, x))(urlYY).2)");
  Ty t = type_of(e, S, TypeEnv(fetch_sig()));
  EXPECT_TRUE(same_everywhere(seq_translate(e), pure_translate(e), Ty::eff(t), fetch_sig()));
}

TEST(Normalize, LeftUnitOfJoin) {
  TermPtr out = normalize(mk::join(mk::pure(mk::cnst("ff", C))));
  EXPECT_TRUE(alpha_eq(out, mk::cnst("ff", T)));
}

TEST(Normalize, MapIdentity) {
  TermPtr e = mk::app(mk::cnst("fetch", T), mk::lit("a", T), T);
  EXPECT_TRUE(alpha_eq(normalize(mk::map(mk::lam("x", mk::var("x", C), T), e)), e));
}

TEST(Normalize, BindRules) {
  const Signature& sig = fetch_sig();
  TermPtr m = tgt("fetch(urlXX)");
  // right unit
  TermPtr ru = tgt("join (map (fun x -> pure x) fetch(urlXX))");
  EXPECT_TRUE(alpha_eq(normalize(ru), m));
  // bind g (pure v) => g v
  TermPtr lu = tgt("join (map (fun x -> fetch(x)) (pure urlXX))");
  EXPECT_TRUE(alpha_eq(normalize(lu), tgt("(fun x -> fetch(x))(urlXX)")));
  // associativity
  TermPtr nested = tgt("join (map (fun a -> fetch(a)) (join (map (fun b -> fetch(b)) fetch(urlXX))))");
  TermPtr out = normalize(nested);
  EXPECT_EQ(out->node, Node::Join);
  EXPECT_EQ(out->lhs->rhs->node, Node::App);
  EXPECT_TRUE(same_everywhere(out, nested, Ty::eff(Ty::str()), sig));
  EXPECT_LE(span(out), span(nested));
}

TEST(Normalize, ReassocIsFlagGated) {
  Signature sig = test::sig_of("effect fetch : Str -> Eff Str\n"
                               "effect fetch2 : Str -> Eff (Str -> Str)");
  TermPtr e = tgt("ap fetch2(\"w\") (ap fetch2(\"u\") fetch(\"v\"))", sig);
  TermPtr plain = normalize(e);
  TermPtr re = normalize(e, NormalizeOptions{true});
  EXPECT_TRUE(alpha_eq(plain, e));
  EXPECT_EQ(re->node, Node::Ap);
  EXPECT_EQ(re->lhs->node, Node::Ap);
  EXPECT_EQ(re->rhs->node, Node::App);
  EXPECT_EQ(span(re), span(e));
  EXPECT_TRUE(same_everywhere(re, e, Ty::eff(Ty::str()), sig));
}

// The one-pass translation is not always a normal form: nested pure
// applications leave a map over a map.
TEST(Normalize, PureOutputIsNotAlwaysNormal) {
  Signature sig = test::sig_of("effect fetch : Str -> Eff Str\nprim tag : Str -> Str");
  TermPtr e = src("tag(tag(fetch(\"a\")!))", sig);
  TermPtr p = pure_translate(e);
  TermPtr n = normalize(p);
  EXPECT_FALSE(alpha_eq(n, p));
  EXPECT_EQ(count(p, Node::Map), 2);
  EXPECT_EQ(count(n, Node::Map), 1);
  EXPECT_TRUE(same_everywhere(n, p, Ty::eff(Ty::str()), sig));
}

TEST(Normalize, TwoChainOutputIsNormal) {
  Program prog = load_program(test::sample("two_chain.pfy"));
  TermPtr p = pure_translate(prog.term);
  EXPECT_TRUE(alpha_eq(normalize(p), p));
}
