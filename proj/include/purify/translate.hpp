#pragma once

#include <string>

#include "purify/term.hpp"

namespace purify {

/// Generator of binder names `$1`, `$2`, ... in the reserved namespace.
class FreshNames {
 public:
  explicit FreshNames(long last_used = 0) : last_(last_used) {}

  /// Starts above every `$n` already present in `e`.
  static FreshNames avoiding(const TermPtr& e) { return FreshNames(max_fresh_index(e)); }

  std::string next() { return std::string(1, kFreshPrefix) + std::to_string(++last_); }

 private:
  long last_;
};

/// Optimising one-pass translation of a Src term of type t into a Tgt term
/// of type Eff t. Recursive cases go through smart_ap/smart_join.
TermPtr pure_translate(const TermPtr& src);
TermPtr pure_translate(const TermPtr& src, FreshNames& fresh);

/// Smart applicative application: folds Pure operands into Pure/Map.
TermPtr smart_ap(const TermPtr& f, const TermPtr& e, FreshNames& fresh);

/// Smart join: Join(Pure e) collapses to e embedded in the target fragment.
TermPtr smart_join(const TermPtr& e);

/// Same equations as pure_translate with raw Pure/Ap/Join constructors.
TermPtr naive_translate(const TermPtr& src);

/// Sequential (do-notation) baseline: like naive_translate, with every
/// applicative composition replaced by left-to-right bind. Output contains no
/// Ap and lives in the extended target fragment.
TermPtr seq_translate(const TermPtr& src);

struct NormalizeOptions {
  bool reassoc = false;  // enable u <*> (v <*> w) => map (.) u <*> v <*> w
};

/// Rewrites a Tgt term with the functor/applicative/monad laws to a fixed
/// point, innermost first. Throws FuelExhausted after 4 x size rewrites.
TermPtr normalize(const TermPtr& tgt, NormalizeOptions options = {});

}  // namespace purify
