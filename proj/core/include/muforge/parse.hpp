#pragma once

#include <string_view>

#include "muforge/formula.hpp"

namespace muforge {

// Concrete syntax:
//   formula := disj
//   disj    := conj ("|" conj)*
//   conj    := unit ("&" unit)*
//   unit    := "tt" | "ff" | PROP | "~" PROP | VAR
//            | "->" "{" [formula ("," formula)*] "}"
//            | ("mu" | "nu") VAR "." disj
//            | "(" formula ")"
// PROP starts lowercase, VAR uppercase.  "#" starts a comment running to end
// of line.  "|" and "&" associate to the right; a binder body extends as far
// right as possible.  The result has alpha-unique binders: the first use of a
// name keeps it, later clashes get the smallest unused "<name><n>".
//
// Throws ParseError (with offset, line, column) on malformed input.
FormulaRef parse_formula(std::string_view text);

} // namespace muforge
