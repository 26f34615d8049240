#pragma once

#include <map>
#include <string>
#include <string_view>

#include "purify/monad.hpp"
#include "purify/term.hpp"

namespace purify {

/// Per-effect latencies and scripted behaviours for `run`.
struct EffectConfig {
  std::map<std::string, double> latency_ms;
  EffectBehaviors behavior;
};

/// Parses `{"latency_ms": {name: ms}, "behavior": {name: {"kind": ..., "payload": ...}}}`.
/// `kind` is value, absent, state_incr or log; state_incr reads an integer
/// payload as the increment. Throws ConfigError.
EffectConfig parse_effect_config(std::string_view json_text);

/// Throws ConfigError if a name is not an effect of `sig`.
void validate_effect_config(const EffectConfig& cfg, const Signature& sig);

}  // namespace purify
