#pragma once

#include "purify/monad.hpp"
#include "purify/term.hpp"

namespace purify {

/// Syntactic span: Join/Each count one plus their argument, binary nodes take
/// the max, values are free.
long span(const TermPtr& e);

/// Syntactic work: like span with sums instead of maxima.
long work(const TermPtr& e);

/// Span and work of the effects a term performs when run: evaluation in the
/// cost monad, where ap costs (max, +), bind (+, +) and each primitive (1, 1).
/// Equals span/work on source terms whose marks wrap primitive calls, and
/// counts effects hidden under pure combinators that the syntactic measure
/// treats as values. Returns (0, 0) when the term is not an action.
Cost effect_cost(const TermPtr& e, Label label, const Signature& sig);

}  // namespace purify
