#include "purify/config.hpp"

#include <nlohmann/json.hpp>

namespace purify {

namespace {

EffectBehavior parse_behavior(const std::string& name, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw Error(ErrorKind::ConfigError, "behavior for '" + name + "' needs a string \"kind\"");
  }
  EffectBehavior b;
  const std::string kind = j["kind"];
  if (kind == "value") {
    b.kind = EffectBehavior::Kind::Value;
  } else if (kind == "absent") {
    b.kind = EffectBehavior::Kind::Absent;
  } else if (kind == "state_incr") {
    b.kind = EffectBehavior::Kind::StateIncr;
  } else if (kind == "log") {
    b.kind = EffectBehavior::Kind::Log;
  } else {
    throw Error(ErrorKind::ConfigError, "unknown behavior kind '" + kind + "' for '" + name + "'");
  }
  if (j.contains("payload")) {
    const auto& p = j["payload"];
    if (b.kind == EffectBehavior::Kind::StateIncr) {
      if (p.is_number_integer()) {
        b.amount = p.get<long>();
      } else if (p.is_string()) {
        try {
          b.amount = std::stol(p.get<std::string>());
        } catch (const std::exception&) {
          throw Error(ErrorKind::ConfigError, "state_incr payload for '" + name + "' is not an integer");
        }
      } else {
        throw Error(ErrorKind::ConfigError, "state_incr payload for '" + name + "' is not an integer");
      }
    } else if (p.is_string()) {
      b.payload = p.get<std::string>();
    } else {
      b.payload = p.dump();
    }
  }
  return b;
}

}  // namespace

EffectConfig parse_effect_config(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ConfigError, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::ConfigError, "config must be a JSON object");
  EffectConfig cfg;
  for (const auto& [key, value] : j.items()) {
    if (key == "latency_ms") {
      if (!value.is_object()) throw Error(ErrorKind::ConfigError, "\"latency_ms\" must be an object");
      for (const auto& [name, ms] : value.items()) {
        if (!ms.is_number() || ms.get<double>() < 0) {
          throw Error(ErrorKind::ConfigError, "latency of '" + name + "' must be a number >= 0");
        }
        cfg.latency_ms[name] = ms.get<double>();
      }
    } else if (key == "behavior") {
      if (!value.is_object()) throw Error(ErrorKind::ConfigError, "\"behavior\" must be an object");
      for (const auto& [name, b] : value.items()) cfg.behavior[name] = parse_behavior(name, b);
    } else if (key != "v") {
      throw Error(ErrorKind::ConfigError, "unknown config key '" + key + "'");
    }
  }
  return cfg;
}

void validate_effect_config(const EffectConfig& cfg, const Signature& sig) {
  auto check = [&sig](const std::string& name) {
    const ConstDecl* d = sig.find(name);
    if (!d || d->kind != ConstKind::Effectful) {
      throw Error(ErrorKind::ConfigError, "'" + name + "' is not a declared effect");
    }
  };
  for (const auto& [name, ms] : cfg.latency_ms) check(name);
  for (const auto& [name, b] : cfg.behavior) check(name);
}

}  // namespace purify
