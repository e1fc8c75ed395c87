#pragma once

#include <string_view>

#include "ptl/formula.hpp"

namespace ptl {

// Parses the concrete syntax
//
//   formula := iff
//   iff     := imp ("<->" imp)*           left associative
//   imp     := or ("->" imp)?             right associative
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := "!" unary | "*" unary | atom | "T" | "F" | "(" formula ")"
//
// Atoms match [a-z][a-z0-9_]*. The unicode spellings ¬ ∧ ∨ → ↔ • ⊤ ⊥ are
// accepted as aliases for ! & | -> <-> * T F. Throws ParseError with a
// 1-based line and column on malformed input.
Formula parse(std::string_view text);

}  // namespace ptl
