#pragma once

#include <map>
#include <set>
#include <vector>

namespace muforge {

// Max-parity game.  Player 0 (even) wins a play iff the highest priority
// seen infinitely often is even.  A position with no successors is won by
// the player matching the parity of its own priority, regardless of owner.
struct Arena {
  struct Position {
    int owner = 0; // 0 even player, 1 odd player
    int priority = 0;
    std::vector<int> succs;
  };

  std::vector<Position> positions;

  int add(int owner, int priority);
  void add_edge(int src, int dst);
};

struct ParitySolution {
  std::set<int> winEven, winOdd;
  // Defined exactly on owned positions that have a successor; the move keeps
  // the play inside the owner's winning region whenever one exists there.
  std::map<int, int> strategyEven, strategyOdd;

  bool even_wins(int pos) const { return winEven.count(pos) != 0; }
};

// Zielonka's recursive attractor decomposition.
ParitySolution solve_parity(const Arena& a);

} // namespace muforge
