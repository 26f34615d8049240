#include "purify/value.hpp"

#include <stdexcept>

#include "purify/pretty.hpp"

namespace purify {

Value Value::str(std::string s) {
  Value v;
  v.rep_ = std::move(s);
  return v;
}

Value Value::pair(Value a, Value b) {
  Value v;
  v.rep_ = std::make_shared<const Pair>(std::move(a), std::move(b));
  return v;
}

Value Value::fun(Fn f) {
  Value v;
  v.rep_ = std::make_shared<const Fn>(std::move(f));
  return v;
}

Value Value::eff(Action a) {
  Value v;
  v.rep_ = std::move(a);
  return v;
}

const std::string& Value::as_str() const { return std::get<std::string>(rep_); }
const Value& Value::first() const { return std::get<2>(rep_)->first; }
const Value& Value::second() const { return std::get<2>(rep_)->second; }
Value Value::operator()(const Value& arg) const { return (*std::get<3>(rep_))(arg); }
const Action& Value::as_action() const { return std::get<4>(rep_); }

std::string show_value(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::Unit: return "()";
    case Value::Kind::Str: return quote_string(v.as_str());
    case Value::Kind::Pair: return "(" + show_value(v.first()) + ", " + show_value(v.second()) + ")";
    case Value::Kind::Fun: return "<fun>";
    case Value::Kind::Eff: return "<action>";
  }
  return "?";
}

bool data_equal(const Value& a, const Value& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Value::Kind::Unit: return true;
    case Value::Kind::Str: return a.as_str() == b.as_str();
    case Value::Kind::Pair: return data_equal(a.first(), b.first()) && data_equal(a.second(), b.second());
    case Value::Kind::Fun:
    case Value::Kind::Eff: return false;
  }
  return false;
}

Value default_value(const Ty& ty, const std::string& seed) {
  switch (ty.kind()) {
    case Ty::Kind::Unit: return Value::unit();
    case Ty::Kind::Str: return Value::str(seed);
    case Ty::Kind::Prod:
      return Value::pair(default_value(ty.left(), seed + ".1"), default_value(ty.right(), seed + ".2"));
    case Ty::Kind::Arrow: {
      Ty cod = ty.cod();
      return Value::fun([cod, seed](const Value& x) {
        return default_value(cod, seed + "(" + show_value(x) + ")");
      });
    }
    case Ty::Kind::Eff: break;
  }
  throw std::logic_error("default_value: no default for " + ty.show());
}

}  // namespace purify
