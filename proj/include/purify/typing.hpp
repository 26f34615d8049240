#pragma once

#include <string>
#include <utility>
#include <vector>

#include "purify/term.hpp"

namespace purify {

/// Variable scope plus the constant signature. Later bindings shadow earlier ones.
struct TypeEnv {
  std::vector<std::pair<std::string, Ty>> vars;
  Signature sig;

  TypeEnv() = default;
  explicit TypeEnv(Signature s) : sig(std::move(s)) {}
};

struct CheckOptions {
  // Admit target-labeled lambdas whose body is itself target code. The
  // sequential baseline and the associativity rewrite produce such terms.
  bool extended_target = false;
};

struct Checked {
  Ty ty;
  TermPtr term;  // copy of the input with every node's `ty` stamped
};

/// Checks the labeling discipline and infers the type of `e` at
/// `expected_label`. Lambda parameters need no annotation; a result type that
/// stays undetermined raises AmbiguousType. Also throws LabelMismatch,
/// TypeMismatch, UnboundVar, UnknownConst.
Checked typecheck(const TermPtr& e, Label expected_label, const TypeEnv& env,
                  CheckOptions options = {});

/// Convenience: the type only.
Ty type_of(const TermPtr& e, Label expected_label, const TypeEnv& env, CheckOptions options = {});

}  // namespace purify
