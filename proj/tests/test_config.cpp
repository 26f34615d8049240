#include <gtest/gtest.h>

#include "purify/config.hpp"
#include "support.hpp"

using namespace purify;

namespace {

ErrorKind error_of(const std::string& text) {
  try {
    parse_effect_config(text);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::ParseError;
}

}  // namespace

TEST(Config, ParsesLatencyAndBehaviour) {
  EffectConfig c = parse_effect_config(R"({"v":1,"latency_ms":{"fetch":100},
    "behavior":{"fetch":{"kind":"value","payload":"page"},"none":{"kind":"absent"},
                "tick":{"kind":"state_incr","payload":3},"put":{"kind":"log","payload":"p"}}})");
  EXPECT_DOUBLE_EQ(c.latency_ms.at("fetch"), 100);
  EXPECT_EQ(c.behavior.at("fetch").kind, EffectBehavior::Kind::Value);
  EXPECT_EQ(c.behavior.at("fetch").payload, "page");
  EXPECT_EQ(c.behavior.at("none").kind, EffectBehavior::Kind::Absent);
  EXPECT_EQ(c.behavior.at("tick").amount, 3);
  EXPECT_EQ(c.behavior.at("put").payload, "p");
}

TEST(Config, Errors) {
  EXPECT_EQ(error_of("{"), ErrorKind::ConfigError);
  EXPECT_EQ(error_of("[]"), ErrorKind::ConfigError);
  EXPECT_EQ(error_of(R"({"latency_ms":{"fetch":-1}})"), ErrorKind::ConfigError);
  EXPECT_EQ(error_of(R"({"behavior":{"fetch":{"kind":"explode"}}})"), ErrorKind::ConfigError);
  EXPECT_EQ(error_of(R"({"colour":1})"), ErrorKind::ConfigError);
}

TEST(Config, ValidateAgainstSignature) {
  EffectConfig c = parse_effect_config(R"({"latency_ms":{"urlXX":1}})");
  EXPECT_THROW(validate_effect_config(c, test::fetch_sig()), Error);
  EffectConfig ok = parse_effect_config(R"({"latency_ms":{"fetch":1}})");
  EXPECT_NO_THROW(validate_effect_config(ok, test::fetch_sig()));
}
