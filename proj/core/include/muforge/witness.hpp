#pragma once

#include <string>
#include <vector>

#include "muforge/twb.hpp"

namespace muforge {

// Nested family of closed walks c_1 contained in ... contained in c_q (edge
// sets), where c_i's highest node priority has parity i mod 2; c_1 is odd.
// q bounds from below the priorities any equivalent relabeling needs.
struct WitnessCycle {
  int parity = 0;
  std::vector<int> nodes; // closed walk; the last node has an edge to the first
};

struct WitnessReport {
  int q = 0;
  std::vector<WitnessCycle> cycles; // innermost first: cycles[i] is c_{i+1}
};

// Largest q such that a q-witness exists in the cycle graph.
WitnessReport find_max_witness(const Twb& t);

struct ReduceReport {
  bool reducible = false;
  Twb result;       // lowered copy when reducible, the input otherwise
  std::string note; // "irreducible" when no sound lowering exists
};

// One lowering step: drops by 2 the priorities along the top chain of
// priority classes that remain entangled in shared cycles, when the chain
// breaks off before reaching 1.
ReduceReport reduce_priorities(const Twb& t);

// Reassigns priorities so that every cycle keeps the parity of its highest
// priority while the co-domain becomes as small as possible for this tree.
Twb minimize_priorities(const Twb& t);

} // namespace muforge
