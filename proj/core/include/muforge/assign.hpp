#pragma once

#include <set>

#include "muforge/label_graph.hpp"
#include "muforge/twb.hpp"

namespace muforge {

struct AssignOptions {
  int maxCopiesPerNode = 64; // unfolding copies per label graph node
  std::size_t maxNodes = 100000;
  std::size_t maxStates = 200000; // verdict search and validation budget
};

// Unfolds a label graph into a tree with back edges and puts a priority on
// every node so that each cycle's highest priority has the parity of its
// trace verdict: odd exactly when the cycle carries a mu-trace.
//
// The unfolding runs over (label node, live threads) states and closes a
// back edge whenever a state repeats along the current path; bookkeeping
// chains are then contracted, except for nodes that anchor a back edge.
// Priorities come from peeling: nodes whose cycles all agree on one verdict
// get the next value and are removed, inward.  When a component's cycles
// disagree everywhere, the component is rebuilt around a single hub as a
// flower whose petals drive a round-robin walk over the condition tree of
// the petal-set verdicts; the walk's emitted values become the priorities.
// The result is validated against the trace matrices before it is returned.
Twb assign_node_priorities(const LabelGraph& g, const AssignOptions& opts = {});

// Distinct node priorities of the minimized assignment for f's tableau.
std::set<int> tableau_alternation_depth(const FormulaRef& f);

} // namespace muforge
