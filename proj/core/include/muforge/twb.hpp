#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "muforge/label_graph.hpp"

namespace muforge {

// Finite tree with back edges.  Back edges point from a node to one of its
// strict ancestors; the cycle graph (tree edges plus back edges) is what the
// priority machinery works on.  Childless choice nodes with a back edge play
// the role of bound variables.
//
// Text format, one directive per line, "#" comments:
//   root <id>
//   node <id> kind=modal|or|leaf [lits=a,~b] [prio=<n>] [children=<id,...>] [back=<id>]
// "choice" is accepted for "or".
struct TwbNode {
  NodeKind kind = NodeKind::Leaf; // Modal, Choice or Leaf
  std::vector<std::string> lits;
  int prio = 0;
  std::vector<int> children;
  int back = -1;
  int parent = -1; // derived, -1 at the root
  std::string id;  // print name; empty falls back to the index
};

struct Twb {
  std::vector<TwbNode> nodes;
  int root = 0;
};

Twb parse_twb(std::string_view text);
std::string print_twb(const Twb& t);

// Fills parent fields; throws ValidationError unless children form a tree
// rooted at t.root covering every node.
void refresh_parents(Twb& t);

// refresh_parents plus: every back edge targets a strict ancestor.
void validate_twb(Twb& t);

// Successors in the cycle graph.
std::vector<int> twb_succs(const Twb& t, int v);

// Nodes with an incoming back edge, in index order.
std::vector<int> back_targets(const Twb& t);

} // namespace muforge
