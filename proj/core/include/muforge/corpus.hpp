#pragma once

#include <string>
#include <utility>
#include <vector>

#include "muforge/formula.hpp"

namespace muforge {

// Built-in example formulas shared by the command line tool and the tests.

// Nested alternating loops: each level picks between regenerating its own
// mu variable, its nu variable, or (inner levels only) stopping, and every
// step also advances all enclosing levels.  Level count is n + 1; n runs
// from 1 to 4.  gen_alpha() is gen_alpha_n(1).
FormulaRef gen_alpha();
FormulaRef gen_alpha_n(int n);

// Same choices as gen_alpha flattened into one four-binder chain whose
// disjuncts name the regenerated variable directly.  Passes is_disjunctive.
FormulaRef gen_beta();

// A small equivalent pair: first in disjunctive shape with one alternation,
// second plain and alternation free.  Both say "all paths are infinite and a
// holds infinitely often on each".
std::pair<FormulaRef, FormulaRef> gen_simple_pair();

// psi conjoined with "some finite path ends here": every model of the result
// can stop after finitely many steps, which rules out nu cycles on that
// conjunct.
FormulaRef gen_finite(const FormulaRef& psi);

struct CorpusEntry {
  std::string name;
  FormulaRef formula;
};

// The named formulas batch commands and corpus-wide tests run over.
const std::vector<CorpusEntry>& corpus();

} // namespace muforge
