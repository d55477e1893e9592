#pragma once

#include "muforge/formula.hpp"
#include "muforge/twb.hpp"

namespace muforge {

// Disjunctive shape: conjunctions only join literals with at most one
// modality, so branching is carried entirely by disjunctions.
bool is_disjunctive(const FormulaRef& f);

// Syntax tree of a disjunctive formula as a tree with back edges: nested
// disjunctions flatten into one choice node, special conjunctions become
// modal nodes holding their literals, variables become childless sources
// backing to their binder's node.  Binder priorities come from the minimal
// assignment; a binder over a bare modal body collapses onto it, otherwise
// it gets its own single-child choice node.
Twb disjunctive_to_tree(const FormulaRef& f);

struct ReorderOptions {
  std::size_t maxNodes = 100000;
};

// Rebuilds the tree so that on the path from any back edge's target down to
// its source every priority is at most the target's: the target carries its
// cycles' dominant priority.  Copies are keyed by (original node, dominance
// class); entering a node of priority p invalidates pending targets of lower
// class, which forces the nesting to decrease.  The input must be valid in
// the sense that every cycle's parity is that of its highest priority.
Twb reorder_decreasing(const Twb& t, const ReorderOptions& opts = {});

// Reads a disjunctive formula back off a tree whose back-edge targets
// dominate their cycles (the shape reorder_decreasing produces).  Each
// target becomes a binder, mu when its priority is odd; sources become the
// bound variables.
FormulaRef tree_to_disjunctive(const Twb& t);

// Satisfiability of a disjunctive formula by the game on its tree: the even
// player resolves choices, the odd player attacks one modal successor;
// consistent dead ends favor even, contradictions favor odd.
bool disjunctive_sat(const FormulaRef& f);

} // namespace muforge
