#pragma once

#include <map>
#include <vector>

#include "muforge/arena.hpp"
#include "muforge/formula.hpp"
#include "muforge/kripke.hpp"
#include "muforge/priority.hpp"

namespace muforge {

// Positions of the model-checking game.  Plain evaluates the formula at the
// state; Diamond is the intermediate obligation "some successor satisfies
// it" spawned by a member of a modality.
enum class McTag { Plain, Diamond };

struct McKey {
  int state = -1;
  McTag tag = McTag::Plain;
  FormulaRef formula;
};

// Position 0 is (m.init, Plain, f).  The even player owns disjunctions,
// binders, variables and Diamond positions; the odd player owns
// conjunctions and modalities.  Variable positions carry omega's priority,
// everything else gets a neutral filler value.  Settled literals are dead
// ends whose priority parity decides them.
Arena build_mc_game(const Kripke& m, const FormulaRef& f, const PriorityAssignment& omega,
                    std::vector<McKey>* keyOut = nullptr);

// Solves the game under the formula's minimal assignment.
bool models(const Kripke& m, const FormulaRef& f);

} // namespace muforge
