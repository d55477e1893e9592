#pragma once

#include <optional>
#include <string>
#include <vector>

#include "muforge/label_graph.hpp"

namespace muforge {

// Label graph with the bookkeeping steps of each rule chain contracted away.
// Remaining nodes are modal nodes, inconsistent or literal-only leaves, and
// branching points; edges carry the composed trace matrices of the chain.
struct CoreEdge {
  int target = -1;
  TraceMatrix matrix;
};

struct CoreNode {
  NodeKind kind = NodeKind::Leaf; // Choice, Modal or Leaf
  std::vector<std::string> literals;
  bool consistent = true;
  int slots = 0;     // width of the underlying label
  std::string label; // display text
  std::vector<CoreEdge> out;
};

struct CoreGraph {
  std::vector<CoreNode> nodes;
  int root = 0;
  TraceMatrix rootPrefix; // from the formula's one root slot into root's slots
};

CoreGraph extract_core(const LabelGraph& g);

// A matched pair of lassos whose highest recurring trace priorities have
// different parities on the two sides.
struct LassoWitness {
  std::vector<int> stem1, cycle1; // core node ids, stems start at the roots
  std::vector<int> stem2, cycle2;
  bool muTrace1 = false, muTrace2 = false;
};

struct CoreEquivVerdict {
  bool equivalent = false;
  std::string reason;
  std::optional<LassoWitness> witness;
};

// Tableau equivalence: a challenger walks either core one step at a time and
// the defender must keep the walks matched on node kind, literals and
// consistency; the defender loses when a matched pumpable cycle certifies a
// mu-trace on exactly one side.  lassoBound caps the explored game states
// (0 picks a default; the MUFORGE_LASSO_BOUND environment variable overrides
// it).  Exceeding the cap throws BudgetError.
CoreEquivVerdict core_equivalent(const CoreGraph& a, const CoreGraph& b,
                                 std::size_t lassoBound = 0);

// Convenience: tableaux of two formulas.
CoreEquivVerdict tableau_equivalent(const FormulaRef& f, const FormulaRef& g,
                                    std::size_t lassoBound = 0);

} // namespace muforge
