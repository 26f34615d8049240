#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "purify/pretty.hpp"
#include "purify/term.hpp"

namespace purify {

/// Parsed but unresolved expression tree. Names are not yet split into
/// variables and constants; `let` and `++` are still sugar.
struct SurfaceExpr {
  enum class Kind {
    Name, Unit, Str, Tuple, Apply, Mark, Proj1, Proj2,
    Fun, Let, Concat, Ascribe, Pure, Map, Ap, Join,
  };
  Kind kind = Kind::Unit;
  std::string text;  // Name, Str value, Fun/Let binder
  std::vector<std::shared_ptr<const SurfaceExpr>> kids;
  std::optional<Ty> type;  // Ascribe
  SourcePos pos;
};

using SurfaceExprPtr = std::shared_ptr<const SurfaceExpr>;

struct SurfaceDecl {
  std::string name;
  Ty ty;
  ConstKind kind = ConstKind::Pure;
  SourcePos pos;
};

struct SurfaceProgram {
  std::vector<SurfaceDecl> decls;
  SurfaceExprPtr body;
  Block block = Block::Purify;
};

/// Throws ParseError (with line/column and what was expected) or DuplicateDecl.
SurfaceProgram parse(std::string_view input);

Ty parse_type(std::string_view input);

struct Program {
  Signature sig;
  TermPtr term;
  Block block = Block::Purify;
};

/// Resolves names and desugars. A `purify` block yields a Src term (lambda
/// bodies Com); a `target` block yields a Tgt term.
Program elaborate(const SurfaceProgram& p);

/// parse + elaborate.
Program load_program(std::string_view input);

/// Parses a single expression against `sig`, elaborated at `label` (Src for
/// purify syntax, Tgt for combinator syntax, Com for effect-free code).
TermPtr parse_term(std::string_view input, const Signature& sig, Label label);

}  // namespace purify
