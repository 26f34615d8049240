#include "purify/types.hpp"

#include <cassert>

namespace purify {

struct Ty::Children {
  Ty first;
  Ty second;
};

Ty::Ty() : kind_(Kind::Unit) {}

Ty::Ty(Kind kind, std::shared_ptr<const Children> children)
    : kind_(kind), children_(std::move(children)) {}

Ty Ty::unit() { return Ty(); }
Ty Ty::str() { return Ty(Kind::Str, nullptr); }

Ty Ty::prod(Ty left, Ty right) {
  return Ty(Kind::Prod, std::make_shared<const Children>(Children{std::move(left), std::move(right)}));
}

Ty Ty::arrow(Ty dom, Ty cod) {
  return Ty(Kind::Arrow, std::make_shared<const Children>(Children{std::move(dom), std::move(cod)}));
}

Ty Ty::eff(Ty inner) {
  return Ty(Kind::Eff, std::make_shared<const Children>(Children{std::move(inner), Ty()}));
}

const Ty& Ty::left() const {
  assert(children_);
  return children_->first;
}

const Ty& Ty::right() const {
  assert(children_ && kind_ != Kind::Eff);
  return children_->second;
}

bool Ty::effect_free() const {
  switch (kind_) {
    case Kind::Unit:
    case Kind::Str: return true;
    case Kind::Eff: return false;
    case Kind::Prod:
    case Kind::Arrow: return left().effect_free() && right().effect_free();
  }
  return true;
}

std::string Ty::show() const {
  // Arrows are right-associative; an arrow or Eff on the left of an arrow,
  // or under Eff, needs parentheses.
  auto atom = [](const Ty& t) {
    if (t.is(Kind::Arrow) || t.is(Kind::Eff)) return "(" + t.show() + ")";
    return t.show();
  };
  switch (kind_) {
    case Kind::Unit: return "Unit";
    case Kind::Str: return "Str";
    case Kind::Prod: return "(" + left().show() + ", " + right().show() + ")";
    case Kind::Arrow: return atom(dom()) + " -> " + cod().show();
    case Kind::Eff: return "Eff " + atom(inner());
  }
  return "?";
}

bool operator==(const Ty& a, const Ty& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.children_ == b.children_) return true;
  switch (a.kind_) {
    case Ty::Kind::Unit:
    case Ty::Kind::Str: return true;
    case Ty::Kind::Eff: return a.inner() == b.inner();
    case Ty::Kind::Prod:
    case Ty::Kind::Arrow: return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

}  // namespace purify
