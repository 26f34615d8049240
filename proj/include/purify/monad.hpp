#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "purify/trace_dag.hpp"
#include "purify/value.hpp"

namespace purify {

/// Scripted behaviour of one effect name. Kinds that make no sense for the
/// active monad fall back to that monad's default behaviour.
struct EffectBehavior {
  enum class Kind { Value, Absent, StateIncr, Log };
  Kind kind = Kind::Value;
  std::string payload;  // Value: returned string; Log: log entry
  long amount = 1;      // StateIncr
};

using EffectBehaviors = std::map<std::string, EffectBehavior>;

/// One invocation of an effectful constant.
struct EffectCall {
  std::string name;
  std::string rendered;  // `name(arg, ...)`
  std::string args;      // `arg, ...`
  Ty result;             // Eff-free result type
  const EffectBehavior* behavior = nullptr;
};

using ValueEq = std::function<bool(const Value&, const Value&)>;

/// A monad over guest values, given as a dictionary of operations.
struct MonadDict {
  std::string name;
  std::function<Action(const Value&)> pure;
  std::function<Action(const Value::Fn&, const Action&)> map;
  std::function<Action(const Action&, const Action&)> ap;  // action of functions, action of args
  std::function<Action(const std::function<Action(const Value&)>&, const Action&)> bind;
  /// Observational equality of two actions; `eq` compares produced values.
  std::function<bool(const Action&, const Action&, const ValueEq& eq)> run_eq;
  std::function<Action(const EffectCall&)> primitive;
  /// Human-readable summary of running an action.
  std::function<std::string(const Action&)> describe;
  /// The dictionary asserts that ap coincides with left-to-right bind
  /// sequencing, i.e. that do-notation is a faithful compilation.
  bool sequential_ap = true;
};

using Monad = std::shared_ptr<const MonadDict>;

Monad option_monad();
Monad state_monad();
Monad writer_monad();
Monad trace_monad();

/// Writer whose ap runs the argument's log before the function's while bind
/// stays left-to-right. Satisfies every law checked by check_laws.
Monad broken_writer_monad();

/// (span, work) summary: ap takes (max, +), bind (+, +), primitives (1, 1).
Monad cost_monad();

/// Option, State, Writer, TraceDag.
std::vector<Monad> builtin_monads();

/// Looks up option/state/writer/trace/writer-rtl/cost by name.
Monad monad_by_name(const std::string& name);

/// Introspection for the trace and cost monads; nullopt for other monads.
struct TraceResult {
  TraceDag dag;
  Value result;
};
std::optional<TraceResult> as_trace(const Action& a);

struct Cost {
  long span = 0;
  long work = 0;
};
std::optional<Cost> as_cost(const Action& a);

/// Value produced by an Option action, if any.
std::optional<std::optional<Value>> as_option(const Action& a);

/// Runs a State action from `state`.
std::optional<std::pair<Value, long>> run_state(const Action& a, long state);

/// Value and log of a Writer action.
std::optional<std::pair<Value, std::vector<std::string>>> as_writer(const Action& a);

struct LawResult {
  std::string law;
  int trials = 0;
  int failures = 0;
  std::string counterexample;
};

struct LawReport {
  std::string monad;
  std::uint64_t seed = 0;
  std::vector<LawResult> laws;  // idl, idr, asc, apl, apr, aplr, map_map
  bool all_pass() const;
};

/// Checks the seven lawful-monad equations on random values, functions and
/// actions over Unit, Str and pairs.
LawReport check_laws(const Monad& m, int trials, std::uint64_t seed);

}  // namespace purify
