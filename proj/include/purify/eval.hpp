#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>

#include "purify/monad.hpp"
#include "purify/term.hpp"

namespace purify {

/// Interpretation of every declared constant for one monad. Pure constants
/// are plain values; effectful ones are curried functions ending in an action.
struct ConstEnv {
  std::map<std::string, Value> values;
  std::shared_ptr<const EffectBehaviors> behaviors;  // owns the scripted behaviours
};

/// `concat : Str -> Str -> Str` concatenates; other pure constants get
/// deterministic defaults tagged with their name. Effect calls go through
/// `m->primitive` with the matching behaviour, if any.
ConstEnv build_const_env(const Signature& sig, const Monad& m, EffectBehaviors behaviors = {});

/// Src: returns an Eff value holding the computed action. Com/Tgt: direct
/// value, combinators mapped onto the monad. Throws SignatureMismatch when a
/// constant is missing from `env`.
Value eval(const TermPtr& e, Label label, const Monad& m, const ConstEnv& env);

/// Random inhabitant of `ty`. Eff types yield pure values or primitive calls.
Value gen_value(const Ty& ty, const Monad& m, std::mt19937_64& rng);

/// Observational equality at type `ty`. Functions are compared on 5
/// generated arguments derived from `seed`; actions via `m->run_eq`.
bool observe_equal(const Value& a, const Value& b, const Ty& ty, const Monad& m,
                   std::uint64_t seed = 0);

}  // namespace purify
