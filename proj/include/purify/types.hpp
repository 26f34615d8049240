#pragma once

#include <memory>
#include <string>

namespace purify {

/// Guest types. Immutable; copies share structure.
class Ty {
 public:
  enum class Kind { Unit, Str, Prod, Arrow, Eff };

  Ty();  // Unit

  static Ty unit();
  static Ty str();
  static Ty prod(Ty left, Ty right);
  static Ty arrow(Ty dom, Ty cod);
  static Ty eff(Ty inner);

  Kind kind() const { return kind_; }
  bool is(Kind k) const { return kind_ == k; }

  // Children. Prod: left/right. Arrow: dom/cod. Eff: inner.
  const Ty& left() const;
  const Ty& right() const;
  const Ty& dom() const { return left(); }
  const Ty& cod() const { return right(); }
  const Ty& inner() const { return left(); }

  /// True if no Eff occurs anywhere in the type.
  bool effect_free() const;

  /// Renders in the surface type grammar, e.g. `Str -> Eff Str`.
  std::string show() const;

  friend bool operator==(const Ty& a, const Ty& b);
  friend bool operator!=(const Ty& a, const Ty& b) { return !(a == b); }

 private:
  struct Children;
  Ty(Kind kind, std::shared_ptr<const Children> children);

  Kind kind_;
  std::shared_ptr<const Children> children_;
};

}  // namespace purify
