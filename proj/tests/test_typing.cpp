#include <gtest/gtest.h>

#include "purify/surface.hpp"
#include "purify/typing.hpp"
#include "support.hpp"

using namespace purify;
using purify::test::fetch_sig;

namespace {

ErrorKind check_error(const TermPtr& e, Label label, const TypeEnv& env) {
  try {
    typecheck(e, label, env);
  } catch (const Error& err) {
    return err.kind();
  }
  ADD_FAILURE() << "expected a type error";
  return ErrorKind::ConfigError;
}

}  // namespace

TEST(Typecheck, FstOfPairAtCommon) {
  TermPtr e = mk::fst(mk::prd(mk::unt(Label::Com), mk::unt(Label::Com), Label::Com), Label::Com);
  EXPECT_EQ(type_of(e, Label::Com, TypeEnv{}), Ty::unit());
}

TEST(Typecheck, EachEliminatesOneEffect) {
  TypeEnv env(fetch_sig());
  TermPtr e = mk::each(mk::cnst("none", Label::Src));
  EXPECT_EQ(type_of(e, Label::Src, env), Ty::str());
}

TEST(Typecheck, EachOutsideSourceIsLabelMismatch) {
  TypeEnv env(fetch_sig());
  TermPtr e = mk::each(mk::cnst("none", Label::Src));
  EXPECT_EQ(check_error(e, Label::Tgt, env), ErrorKind::LabelMismatch);
  EXPECT_EQ(check_error(e, Label::Com, env), ErrorKind::LabelMismatch);
}

TEST(Typecheck, CombinatorRules) {
  TypeEnv env(fetch_sig());
  TermPtr none = mk::cnst("none", Label::Tgt);
  TermPtr id = mk::lam("x", mk::var("x", Label::Com), Label::Tgt);
  EXPECT_EQ(type_of(mk::map(id, none), Label::Tgt, env), Ty::eff(Ty::str()));
  EXPECT_EQ(type_of(mk::join(mk::pure(mk::cnst("none", Label::Com))), Label::Tgt, env),
            Ty::eff(Ty::str()));
  TermPtr fs = mk::pure(mk::lam("x", mk::var("x", Label::Com), Label::Com));
  EXPECT_EQ(type_of(mk::ap(fs, none), Label::Tgt, env), Ty::eff(Ty::str()));
  EXPECT_EQ(check_error(mk::join(none), Label::Tgt, env), ErrorKind::TypeMismatch);
  EXPECT_EQ(check_error(mk::pure(mk::unt(Label::Com)), Label::Src, env), ErrorKind::LabelMismatch);
  EXPECT_EQ(check_error(mk::map(id, mk::lit("a", Label::Tgt)), Label::Tgt, env),
            ErrorKind::TypeMismatch);
}

TEST(Typecheck, LambdaBodiesAreCommon) {
  TypeEnv env(fetch_sig());
  TermPtr bad = mk::lam("x", mk::each(mk::var("x", Label::Src)), Label::Src);
  EXPECT_EQ(check_error(bad, Label::Src, env), ErrorKind::LabelMismatch);
  TermPtr tgt_body = mk::lam("x", mk::pure(mk::var("x", Label::Com)), Label::Tgt);
  TermPtr use = mk::join(mk::map(tgt_body, mk::cnst("none", Label::Tgt)));
  EXPECT_EQ(check_error(use, Label::Tgt, env), ErrorKind::LabelMismatch);
  EXPECT_EQ(type_of(use, Label::Tgt, env, CheckOptions{true}), Ty::eff(Ty::str()));
}

TEST(Typecheck, UnboundAndUnknown) {
  EXPECT_EQ(check_error(mk::var("x", Label::Com), Label::Com, TypeEnv{}), ErrorKind::UnboundVar);
  EXPECT_EQ(check_error(mk::cnst("k", Label::Com), Label::Com, TypeEnv{}), ErrorKind::UnknownConst);
}

TEST(Typecheck, AmbiguousTopLevelNeedsAscription) {
  TermPtr k = mk::lam("x", mk::unt(Label::Com), Label::Com);
  EXPECT_EQ(check_error(k, Label::Com, TypeEnv{}), ErrorKind::AmbiguousType);
  auto annotated = std::make_shared<Term>(*k);
  annotated->ascribed = Ty::arrow(Ty::str(), Ty::unit());
  EXPECT_EQ(type_of(annotated, Label::Com, TypeEnv{}), Ty::arrow(Ty::str(), Ty::unit()));
}

TEST(Typecheck, StampsEveryNode) {
  TypeEnv env(fetch_sig());
  TermPtr e = parse_term("(fetch(urlXX)!, ())", fetch_sig(), Label::Src);
  Checked c = typecheck(e, Label::Src, env);
  std::function<void(const TermPtr&)> walk = [&](const TermPtr& t) {
    if (!t) return;
    EXPECT_TRUE(t->ty.has_value()) << to_string(t->node);
    walk(t->lhs);
    walk(t->rhs);
  };
  walk(c.term);
  EXPECT_EQ(*c.term->lhs->ty, Ty::str());
}

TEST(Typecheck, ShadowingAndWeakening) {
  TermPtr e = mk::app(
      mk::lam("x", mk::lam("x", mk::var("x", Label::Com), Label::Com), Label::Com),
      mk::unt(Label::Com), Label::Com);
  auto annotated = std::make_shared<Term>(*e);
  annotated->ascribed = Ty::arrow(Ty::str(), Ty::str());
  TypeEnv env;
  EXPECT_EQ(type_of(annotated, Label::Com, env), Ty::arrow(Ty::str(), Ty::str()));
  env.vars.emplace_back("unused", Ty::unit());
  EXPECT_EQ(type_of(annotated, Label::Com, env), Ty::arrow(Ty::str(), Ty::str()));
}
