#include "purify/monad.hpp"

#include <stdexcept>

#include "purify/pretty.hpp"

namespace purify {

namespace {

template <typename Rep>
const Rep& rep(const Action& a) {
  auto* r = dynamic_cast<const Rep*>(a.get());
  if (!r) throw std::logic_error("action belongs to a different monad");
  return *r;
}

template <typename Rep, typename... Args>
Action make_action(Args&&... args) {
  return std::make_shared<const Rep>(std::forward<Args>(args)...);
}

Value returned_value(const EffectCall& call) {
  if (call.behavior && call.behavior->kind == EffectBehavior::Kind::Value) {
    return default_value(call.result, call.behavior->payload);
  }
  return default_value(call.result, call.rendered);
}

bool is(const EffectCall& call, EffectBehavior::Kind k) {
  return call.behavior && call.behavior->kind == k;
}

// --- Option ---------------------------------------------------------------

struct OptionRep : ActionRep {
  explicit OptionRep(std::optional<Value> v) : value(std::move(v)) {}
  std::optional<Value> value;
};

Monad make_option() {
  auto m = std::make_shared<MonadDict>();
  m->name = "option";
  m->pure = [](const Value& v) { return make_action<OptionRep>(std::optional<Value>(v)); };
  m->map = [](const Value::Fn& f, const Action& a) {
    const auto& r = rep<OptionRep>(a);
    if (!r.value) return make_action<OptionRep>(std::optional<Value>());
    return make_action<OptionRep>(std::optional<Value>(f(*r.value)));
  };
  m->ap = [](const Action& fs, const Action& xs) {
    const auto& f = rep<OptionRep>(fs);
    const auto& x = rep<OptionRep>(xs);
    if (!f.value || !x.value) return make_action<OptionRep>(std::optional<Value>());
    return make_action<OptionRep>(std::optional<Value>((*f.value)(*x.value)));
  };
  m->bind = [](const std::function<Action(const Value&)>& k, const Action& a) {
    const auto& r = rep<OptionRep>(a);
    if (!r.value) return make_action<OptionRep>(std::optional<Value>());
    return k(*r.value);
  };
  m->run_eq = [](const Action& a, const Action& b, const ValueEq& eq) {
    const auto& x = rep<OptionRep>(a);
    const auto& y = rep<OptionRep>(b);
    if (!x.value || !y.value) return !x.value && !y.value;
    return eq(*x.value, *y.value);
  };
  m->primitive = [](const EffectCall& call) {
    if (is(call, EffectBehavior::Kind::Absent)) {
      return make_action<OptionRep>(std::optional<Value>());
    }
    return make_action<OptionRep>(std::optional<Value>(returned_value(call)));
  };
  m->describe = [](const Action& a) {
    const auto& r = rep<OptionRep>(a);
    return r.value ? "present " + show_value(*r.value) : std::string("absent");
  };
  return m;
}

// --- State ----------------------------------------------------------------

struct StateRep : ActionRep {
  explicit StateRep(std::function<std::pair<Value, long>(long)> f) : run(std::move(f)) {}
  std::function<std::pair<Value, long>(long)> run;
};

Action state_action(std::function<std::pair<Value, long>(long)> f) {
  return make_action<StateRep>(std::move(f));
}

Monad make_state() {
  auto m = std::make_shared<MonadDict>();
  m->name = "state";
  m->pure = [](const Value& v) {
    return state_action([v](long s) { return std::make_pair(v, s); });
  };
  m->map = [](const Value::Fn& f, const Action& a) {
    return state_action([f, a](long s) {
      auto [v, s1] = rep<StateRep>(a).run(s);
      return std::make_pair(f(v), s1);
    });
  };
  m->ap = [](const Action& fs, const Action& xs) {
    return state_action([fs, xs](long s) {
      auto [f, s1] = rep<StateRep>(fs).run(s);
      auto [x, s2] = rep<StateRep>(xs).run(s1);
      return std::make_pair(f(x), s2);
    });
  };
  m->bind = [](const std::function<Action(const Value&)>& k, const Action& a) {
    return state_action([k, a](long s) {
      auto [v, s1] = rep<StateRep>(a).run(s);
      return rep<StateRep>(k(v)).run(s1);
    });
  };
  m->run_eq = [](const Action& a, const Action& b, const ValueEq& eq) {
    for (long s0 : {0L, 1L, 2L}) {
      auto [va, sa] = rep<StateRep>(a).run(s0);
      auto [vb, sb] = rep<StateRep>(b).run(s0);
      if (sa != sb || !eq(va, vb)) return false;
    }
    return true;
  };
  m->primitive = [](const EffectCall& call) {
    if (is(call, EffectBehavior::Kind::Value)) {
      Value v = returned_value(call);
      return state_action([v](long s) { return std::make_pair(v, s); });
    }
    long step = is(call, EffectBehavior::Kind::StateIncr) ? call.behavior->amount : 1;
    Ty result = call.result;
    std::string rendered = call.rendered;
    return state_action([=](long s) {
      return std::make_pair(default_value(result, rendered + "#" + std::to_string(s)), s + step);
    });
  };
  m->describe = [](const Action& a) {
    auto [v, s] = rep<StateRep>(a).run(0);
    return show_value(v) + " (state 0 -> " + std::to_string(s) + ")";
  };
  return m;
}

// --- Writer ---------------------------------------------------------------

struct WriterRep : ActionRep {
  WriterRep(Value v, std::vector<std::string> l) : value(std::move(v)), log(std::move(l)) {}
  Value value;
  std::vector<std::string> log;
};

Action writer_action(Value v, std::vector<std::string> log) {
  return make_action<WriterRep>(std::move(v), std::move(log));
}

std::vector<std::string> concat_logs(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Monad make_writer(bool right_to_left_ap) {
  auto m = std::make_shared<MonadDict>();
  m->name = right_to_left_ap ? "writer-rtl" : "writer";
  m->pure = [](const Value& v) { return writer_action(v, {}); };
  m->map = [](const Value::Fn& f, const Action& a) {
    const auto& r = rep<WriterRep>(a);
    return writer_action(f(r.value), r.log);
  };
  m->ap = [right_to_left_ap](const Action& fs, const Action& xs) {
    const auto& f = rep<WriterRep>(fs);
    const auto& x = rep<WriterRep>(xs);
    auto log = right_to_left_ap ? concat_logs(x.log, f.log) : concat_logs(f.log, x.log);
    return writer_action(f.value(x.value), std::move(log));
  };
  m->bind = [](const std::function<Action(const Value&)>& k, const Action& a) {
    const auto& r = rep<WriterRep>(a);
    Action after = k(r.value);
    const auto& next = rep<WriterRep>(after);
    return writer_action(next.value, concat_logs(r.log, next.log));
  };
  m->run_eq = [](const Action& a, const Action& b, const ValueEq& eq) {
    const auto& x = rep<WriterRep>(a);
    const auto& y = rep<WriterRep>(b);
    return x.log == y.log && eq(x.value, y.value);
  };
  m->primitive = [](const EffectCall& call) {
    if (is(call, EffectBehavior::Kind::Value)) return writer_action(returned_value(call), {});
    std::string entry = call.rendered;
    if (is(call, EffectBehavior::Kind::Log) && !call.behavior->payload.empty()) {
      entry = call.behavior->payload;
    }
    return writer_action(returned_value(call), {entry});
  };
  m->describe = [](const Action& a) {
    const auto& r = rep<WriterRep>(a);
    std::string out = show_value(r.value) + " log [";
    for (std::size_t i = 0; i < r.log.size(); ++i) out += (i ? ", " : "") + quote_string(r.log[i]);
    return out + "]";
  };
  m->sequential_ap = true;
  return m;
}

// --- TraceDag -------------------------------------------------------------

struct TraceRep : ActionRep {
  TraceRep(TraceDag d, Value v) : dag(std::move(d)), value(std::move(v)) {}
  TraceDag dag;
  Value value;
};

Action trace_action(TraceDag d, Value v) { return make_action<TraceRep>(std::move(d), std::move(v)); }

Monad make_trace() {
  auto m = std::make_shared<MonadDict>();
  m->name = "trace";
  m->pure = [](const Value& v) { return trace_action({}, v); };
  m->map = [](const Value::Fn& f, const Action& a) {
    const auto& r = rep<TraceRep>(a);
    return trace_action(r.dag, f(r.value));
  };
  m->ap = [](const Action& fs, const Action& xs) {
    const auto& f = rep<TraceRep>(fs);
    const auto& x = rep<TraceRep>(xs);
    return trace_action(TraceDag::parallel(f.dag, x.dag), f.value(x.value));
  };
  m->bind = [](const std::function<Action(const Value&)>& k, const Action& a) {
    const auto& r = rep<TraceRep>(a);
    Action after = k(r.value);
    const auto& next = rep<TraceRep>(after);
    return trace_action(TraceDag::sequential(r.dag, next.dag), next.value);
  };
  m->run_eq = [](const Action& a, const Action& b, const ValueEq& eq) {
    const auto& x = rep<TraceRep>(a);
    const auto& y = rep<TraceRep>(b);
    return eq(x.value, y.value) && isomorphic(x.dag, y.dag);
  };
  m->primitive = [](const EffectCall& call) {
    return trace_action(TraceDag::single(call.name, call.args), returned_value(call));
  };
  m->describe = [](const Action& a) {
    const auto& r = rep<TraceRep>(a);
    return show_value(r.value) + " span " + std::to_string(dyn_span(r.dag)) + " work " +
           std::to_string(dyn_work(r.dag));
  };
  m->sequential_ap = false;
  return m;
}

// --- Cost -----------------------------------------------------------------

struct CostRep : ActionRep {
  CostRep(Cost c, Value v) : cost(c), value(std::move(v)) {}
  Cost cost;
  Value value;
};

Action cost_action(Cost c, Value v) { return make_action<CostRep>(c, std::move(v)); }

Monad make_cost() {
  auto m = std::make_shared<MonadDict>();
  m->name = "cost";
  m->pure = [](const Value& v) { return cost_action({}, v); };
  m->map = [](const Value::Fn& f, const Action& a) {
    const auto& r = rep<CostRep>(a);
    return cost_action(r.cost, f(r.value));
  };
  m->ap = [](const Action& fs, const Action& xs) {
    const auto& f = rep<CostRep>(fs);
    const auto& x = rep<CostRep>(xs);
    Cost c{std::max(f.cost.span, x.cost.span), f.cost.work + x.cost.work};
    return cost_action(c, f.value(x.value));
  };
  m->bind = [](const std::function<Action(const Value&)>& k, const Action& a) {
    const auto& r = rep<CostRep>(a);
    Action after = k(r.value);
    const auto& next = rep<CostRep>(after);
    Cost c{r.cost.span + next.cost.span, r.cost.work + next.cost.work};
    return cost_action(c, next.value);
  };
  m->run_eq = [](const Action& a, const Action& b, const ValueEq& eq) {
    const auto& x = rep<CostRep>(a);
    const auto& y = rep<CostRep>(b);
    return x.cost.span == y.cost.span && x.cost.work == y.cost.work && eq(x.value, y.value);
  };
  m->primitive = [](const EffectCall& call) { return cost_action({1, 1}, returned_value(call)); };
  m->describe = [](const Action& a) {
    const auto& r = rep<CostRep>(a);
    return show_value(r.value) + " span " + std::to_string(r.cost.span) + " work " +
           std::to_string(r.cost.work);
  };
  m->sequential_ap = false;
  return m;
}

}  // namespace

Monad option_monad() {
  static const Monad m = make_option();
  return m;
}
Monad state_monad() {
  static const Monad m = make_state();
  return m;
}
Monad writer_monad() {
  static const Monad m = make_writer(false);
  return m;
}
Monad broken_writer_monad() {
  static const Monad m = make_writer(true);
  return m;
}
Monad trace_monad() {
  static const Monad m = make_trace();
  return m;
}
Monad cost_monad() {
  static const Monad m = make_cost();
  return m;
}

std::vector<Monad> builtin_monads() {
  return {option_monad(), state_monad(), writer_monad(), trace_monad()};
}

Monad monad_by_name(const std::string& name) {
  for (const auto& m : {option_monad(), state_monad(), writer_monad(), trace_monad(),
                        broken_writer_monad(), cost_monad()}) {
    if (m->name == name) return m;
  }
  return nullptr;
}

std::optional<TraceResult> as_trace(const Action& a) {
  auto* r = dynamic_cast<const TraceRep*>(a.get());
  if (!r) return std::nullopt;
  return TraceResult{r->dag, r->value};
}

std::optional<Cost> as_cost(const Action& a) {
  auto* r = dynamic_cast<const CostRep*>(a.get());
  if (!r) return std::nullopt;
  return r->cost;
}

std::optional<std::optional<Value>> as_option(const Action& a) {
  auto* r = dynamic_cast<const OptionRep*>(a.get());
  if (!r) return std::nullopt;
  return r->value;
}

std::optional<std::pair<Value, long>> run_state(const Action& a, long state) {
  auto* r = dynamic_cast<const StateRep*>(a.get());
  if (!r) return std::nullopt;
  return r->run(state);
}

std::optional<std::pair<Value, std::vector<std::string>>> as_writer(const Action& a) {
  auto* r = dynamic_cast<const WriterRep*>(a.get());
  if (!r) return std::nullopt;
  return std::make_pair(r->value, r->log);
}

}  // namespace purify
