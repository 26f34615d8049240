#pragma once

#include <string>

#include "purify/term.hpp"

namespace purify {

/// Renders a term in the concrete syntax. Source and common fragments use
/// the surface grammar; target combinators print as `pure`, `map`, `ap`,
/// `join`. The output re-parses to an alpha-equivalent term.
std::string pretty(const TermPtr& e);

enum class Block { Purify, Target };

/// Declarations followed by a `purify { ... }` or `target { ... }` block.
std::string pretty_program(const Signature& sig, const TermPtr& body, Block block);

std::string quote_string(const std::string& raw);

}  // namespace purify
