#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "purify/diagnostics.hpp"
#include "purify/types.hpp"

namespace purify {

/// Language fragment a node belongs to.
enum class Label { Src, Tgt, Com };

const char* to_string(Label label);

enum class Node { Var, Const, Unt, Lit, Prd, Fst, Snd, App, Lam, Each, Pure, Map, Ap, Join };

const char* to_string(Node node);

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// One immutable AST node. Unary nodes keep their child in `lhs`.
/// `text` is the identifier for Var/Const/Lam (the parameter) and the
/// contents for Lit.
struct Term {
  Node node = Node::Unt;
  Label label = Label::Com;
  std::string text;
  TermPtr lhs;
  TermPtr rhs;
  std::optional<Ty> ty;        // stamped by typecheck
  std::optional<Ty> ascribed;  // `(e : T)` from the surface syntax
  SourcePos pos;

  int arity() const;
  bool is_combinator() const {
    return node == Node::Pure || node == Node::Map || node == Node::Ap || node == Node::Join;
  }
};

namespace mk {
TermPtr var(std::string name, Label label);
TermPtr cnst(std::string name, Label label);
TermPtr unt(Label label);
TermPtr lit(std::string value, Label label);
TermPtr prd(TermPtr fst, TermPtr snd, Label label);
TermPtr fst(TermPtr pair, Label label);
TermPtr snd(TermPtr pair, Label label);
TermPtr app(TermPtr fun, TermPtr arg, Label label);
TermPtr lam(std::string param, TermPtr body, Label label);
TermPtr each(TermPtr eff);
TermPtr pure(TermPtr inner);
TermPtr map(TermPtr fun, TermPtr arg);
TermPtr ap(TermPtr fun, TermPtr arg);
TermPtr join(TermPtr nested);
}  // namespace mk

/// Copy of `t` with new children; label, text, ascription and position kept,
/// the stamped type dropped.
TermPtr rebuild(const Term& t, TermPtr lhs, TermPtr rhs);

/// Copy of `t` with only the node's own label replaced.
TermPtr with_label(const Term& t, Label label);

enum class ConstKind { Pure, Effectful };

struct ConstDecl {
  std::string name;
  Ty ty;
  ConstKind kind = ConstKind::Pure;
};

/// Declared constants in declaration order.
class Signature {
 public:
  /// Throws DuplicateDecl, ReservedName or BadSignature.
  void add(ConstDecl decl);
  const ConstDecl* find(const std::string& name) const;
  const std::vector<ConstDecl>& consts() const { return consts_; }
  bool empty() const { return consts_.empty(); }

  /// Number of arguments an effectful constant takes before yielding an action.
  static int effect_arity(const Ty& ty);

 private:
  std::vector<ConstDecl> consts_;
};

/// Reserved prefix for translator-generated binders.
inline constexpr char kFreshPrefix = '$';

/// Replaces the label of every spine node of a Com term by `target`.
/// Lambda bodies stay Com. Throws NotCommon if any node is not Com-labeled.
TermPtr relabel(const TermPtr& e, Label target);

/// Relabels every node of a term that contains no Each or combinator to Com.
/// Throws NotCommon otherwise.
TermPtr to_common(const TermPtr& e);

/// No Each and no Join anywhere in the tree.
bool is_effect_free(const TermPtr& e);

/// No Each, Pure, Map, Ap or Join anywhere in the tree.
bool is_combinator_free(const TermPtr& e);

/// Equality up to consistent renaming of bound variables. Labels, constants
/// and literals compare exactly; stamped types and ascriptions are ignored.
bool alpha_eq(const TermPtr& a, const TermPtr& b);

/// Structural equality ignoring labels (and bound-variable names).
bool same_shape(const TermPtr& a, const TermPtr& b);

std::set<std::string> free_vars(const TermPtr& e);

/// Number of nodes.
std::size_t size(const TermPtr& e);

/// Greatest n such that `$n` occurs as a name in `e`, or 0.
long max_fresh_index(const TermPtr& e);

}  // namespace purify
