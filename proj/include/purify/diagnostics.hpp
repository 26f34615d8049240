#pragma once

#include <stdexcept>
#include <string>

namespace purify {

enum class ErrorKind {
  ParseError,
  DuplicateDecl,
  ReservedName,
  UnboundName,
  MarkUnderLambda,
  LetTooEffectful,
  BadSignature,
  NotCommon,
  LabelMismatch,
  TypeMismatch,
  UnboundVar,
  UnknownConst,
  AmbiguousType,
  SignatureMismatch,
  FuelExhausted,
  Unsatisfiable,
  CyclicDag,
  UnknownEffect,
  ConfigError,
};

const char* to_string(ErrorKind kind);

struct SourcePos {
  int line = 0;
  int col = 0;
  bool known() const { return line > 0; }
};

// Every diagnostic the library raises. `kind` is stable, `what()` is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, SourcePos pos = {});

  ErrorKind kind() const { return kind_; }
  SourcePos pos() const { return pos_; }
  /// The message without the kind/position prefix.
  const std::string& message() const { return message_; }

 private:
  ErrorKind kind_;
  SourcePos pos_;
  std::string message_;
};

}  // namespace purify
