#pragma once

#include <string>

#include "muforge/formula.hpp"

namespace muforge {

// Inverse of parse_formula up to alpha-renaming: parse(print(f)) is
// structurally equal to f whenever f has alpha-unique binders, and printing
// is idempotent.  Binders are parenthesized except in tail position, where
// the maximal-right body rule makes the bare form unambiguous.
std::string print_formula(const FormulaRef& f);

} // namespace muforge
