#include "purify/diagnostics.hpp"

namespace purify {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DuplicateDecl: return "DuplicateDecl";
    case ErrorKind::ReservedName: return "ReservedName";
    case ErrorKind::UnboundName: return "UnboundName";
    case ErrorKind::MarkUnderLambda: return "MarkUnderLambda";
    case ErrorKind::LetTooEffectful: return "LetTooEffectful";
    case ErrorKind::BadSignature: return "BadSignature";
    case ErrorKind::NotCommon: return "NotCommon";
    case ErrorKind::LabelMismatch: return "LabelMismatch";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::UnboundVar: return "UnboundVar";
    case ErrorKind::UnknownConst: return "UnknownConst";
    case ErrorKind::AmbiguousType: return "AmbiguousType";
    case ErrorKind::SignatureMismatch: return "SignatureMismatch";
    case ErrorKind::FuelExhausted: return "FuelExhausted";
    case ErrorKind::Unsatisfiable: return "Unsatisfiable";
    case ErrorKind::CyclicDag: return "CyclicDag";
    case ErrorKind::UnknownEffect: return "UnknownEffect";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Error";
}

static std::string decorate(ErrorKind kind, const std::string& message, SourcePos pos) {
  std::string out = to_string(kind);
  if (pos.known()) {
    out += " at " + std::to_string(pos.line) + ":" + std::to_string(pos.col);
  }
  return out + ": " + message;
}

Error::Error(ErrorKind kind, const std::string& message, SourcePos pos)
    : std::runtime_error(decorate(kind, message, pos)), kind_(kind), pos_(pos), message_(message) {}

}  // namespace purify
