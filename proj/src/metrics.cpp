#include "purify/metrics.hpp"

#include <algorithm>

#include "purify/eval.hpp"

namespace purify {

namespace {

template <typename Combine>
long measure(const TermPtr& e, Combine combine) {
  switch (e->node) {
    case Node::Var:
    case Node::Const:
    case Node::Unt:
    case Node::Lit:
    case Node::Lam:
    case Node::Pure: return 0;
    case Node::Fst:
    case Node::Snd: return measure(e->lhs, combine);
    case Node::Prd:
    case Node::App:
    case Node::Map:
    case Node::Ap: return combine(measure(e->lhs, combine), measure(e->rhs, combine));
    case Node::Each:
    case Node::Join: return 1 + measure(e->lhs, combine);
  }
  return 0;
}

}  // namespace

long span(const TermPtr& e) {
  return measure(e, [](long a, long b) { return std::max(a, b); });
}

long work(const TermPtr& e) {
  return measure(e, [](long a, long b) { return a + b; });
}

Cost effect_cost(const TermPtr& e, Label label, const Signature& sig) {
  Monad m = cost_monad();
  Value v = eval(e, label, m, build_const_env(sig, m));
  if (v.kind() != Value::Kind::Eff) return {};
  return as_cost(v.as_action()).value_or(Cost{});
}

}  // namespace purify
