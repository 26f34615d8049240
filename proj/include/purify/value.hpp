#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <variant>

#include "purify/types.hpp"

namespace purify {

/// Opaque monadic action. Each monad derives its own representation.
struct ActionRep {
  virtual ~ActionRep() = default;
};
using Action = std::shared_ptr<const ActionRep>;

/// Runtime value of the guest language.
class Value {
 public:
  using Fn = std::function<Value(const Value&)>;

  enum class Kind { Unit, Str, Pair, Fun, Eff };

  Value() = default;  // unit

  static Value unit() { return {}; }
  static Value str(std::string s);
  static Value pair(Value a, Value b);
  static Value fun(Fn f);
  static Value eff(Action a);

  Kind kind() const { return static_cast<Kind>(rep_.index()); }

  const std::string& as_str() const;
  const Value& first() const;
  const Value& second() const;
  Value operator()(const Value& arg) const;
  const Action& as_action() const;

 private:
  using Pair = std::pair<Value, Value>;
  std::variant<std::monostate, std::string, std::shared_ptr<const Pair>, std::shared_ptr<const Fn>,
               Action>
      rep_;
};

/// `()`, `"text"`, `(a, b)`, `<fun>`, `<action>`.
std::string show_value(const Value& v);

/// Structural equality of first-order values; false if either side holds a
/// function or an action.
bool data_equal(const Value& a, const Value& b);

/// Deterministic inhabitant of an Eff-free type derived from `seed`:
/// strings become `seed`, functions return a seed-tagged result.
Value default_value(const Ty& ty, const std::string& seed);

}  // namespace purify
