#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "muforge/formula.hpp"
#include "muforge/priority.hpp"
#include "muforge/trace_matrix.hpp"

namespace muforge {

// Tie-break between the conjunction and disjunction rules.  Everything
// downstream is insensitive to it; tests rely on that.
enum class RuleOrder { AndBeforeOr, OrBeforeAnd };

// Kind of the rule applied at a node.  Binder, variable and conjunction
// steps are unary; disjunction branches; the modal rule crosses an edge of
// the structure; leaves carry only literals or are inconsistent.
enum class NodeKind { Unary, Choice, Modal, Leaf };

struct LabelNode {
  std::vector<FormulaRef> label; // sorted set
  NodeKind kind = NodeKind::Leaf;
  std::vector<std::string> literals; // "tt", "ff", "p", "~p"; sorted
  bool consistent = true;
  std::vector<int> succs; // unique, in creation order
};

struct LabelGraphOptions {
  RuleOrder order = RuleOrder::AndBeforeOr;
  std::size_t maxNodes = 100000;
};

// Nodes are deduplicated by label, so regeneration closes cycles.  Each edge
// carries the trace relation of the rule instances that produced it, as a
// matrix over the two labels' slots; weights are the variable priorities of
// the formula's minimal assignment (variable unfolding steps) or 0.
struct LabelGraph {
  std::vector<LabelNode> nodes;
  std::map<std::pair<int, int>, TraceMatrix> edges;
  int root = 0;
  PriorityAssignment omega;
  std::shared_ptr<FormulaIndex> index;

  const TraceMatrix& edge(int src, int dst) const;
};

LabelGraph build_label_graph(const FormulaRef& f, const LabelGraphOptions& opts = {});

// stem runs from the root to the cycle's entry; cycle starts there and its
// last node has an edge back to the entry.  True iff the infinite unrolling
// stem + cycle^w carries a trace whose highest infinitely recurring
// priority is odd.
bool lasso_has_mu_trace(const LabelGraph& g, const std::vector<int>& stem,
                        const std::vector<int>& cycle);

// Shared by the lasso checks: prefix says which slots are reachable at the
// cycle's entry, loop is the cycle's composed matrix.
bool lasso_mu_trace_from_matrices(const TraceMatrix& prefix, const TraceMatrix& loop);

std::vector<std::string> label_literals(const std::vector<FormulaRef>& label);
bool literals_consistent(const std::vector<std::string>& lits);

} // namespace muforge
