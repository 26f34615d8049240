#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "purify/surface.hpp"

namespace purify::test {

inline Signature sig_of(const std::string& decls) {
  return load_program(decls + "\npurify { () }").sig;
}

inline const Signature& fetch_sig() {
  static const Signature sig = sig_of(
      "effect fetch : Str -> Eff Str\n"
      "effect none : Eff Str\n"
      "prim concat : Str -> Str -> Str\n"
      "prim urlXX : Str\nprim urlYY : Str\neffect ff : Eff Str\n");
  return sig;
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

inline std::string sample(const std::string& name) {
  return read_file(std::string(PURIFY_SAMPLES_DIR) + "/" + name);
}

inline nlohmann::json golden(const std::string& name) {
  return nlohmann::json::parse(read_file(std::string(PURIFY_GOLDEN_DIR) + "/" + name + ".json"));
}

}  // namespace purify::test
