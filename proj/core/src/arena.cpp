#include "muforge/arena.hpp"

#include <algorithm>

#include "muforge/diagnostics.hpp"

namespace muforge {

int Arena::add(int owner, int priority) {
  positions.push_back({owner, priority, {}});
  return static_cast<int>(positions.size()) - 1;
}

void Arena::add_edge(int src, int dst) {
  positions.at(dst);
  positions.at(src).succs.push_back(dst);
}

namespace {

struct Solver {
  int n;
  std::vector<std::vector<int>> succ, pred;
  std::vector<int> prio, owner;
  std::vector<int> winner, strat;

  explicit Solver(const Arena& a) : n(static_cast<int>(a.positions.size())) {
    succ.resize(n);
    pred.resize(n);
    prio.resize(n);
    owner.resize(n);
    winner.assign(n, -1);
    strat.assign(n, -1);
    for (int v = 0; v < n; ++v) {
      prio[v] = a.positions[v].priority;
      owner[v] = a.positions[v].owner;
      succ[v] = a.positions[v].succs;
      // The dead-end rule (parity of own priority wins) is a self-loop.
      if (succ[v].empty()) succ[v].push_back(v);
    }
    for (int v = 0; v < n; ++v)
      for (int w : succ[v]) pred[w].push_back(v);
  }

  // Attractor of targets for player rho within alive.  Fills strat for
  // rho-owned positions pulled in (not for the targets themselves).
  std::vector<char> attract(const std::vector<char>& alive, const std::vector<char>& targets,
                            int rho) {
    std::vector<char> in(n, 0);
    std::vector<int> cnt(n, 0), queue;
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      for (int w : succ[v])
        if (alive[w]) ++cnt[v];
      if (targets[v]) {
        in[v] = 1;
        queue.push_back(v);
      }
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int w = queue[qi];
      for (int v : pred[w]) {
        if (!alive[v] || in[v]) continue;
        if (owner[v] == rho) {
          in[v] = 1;
          strat[v] = w;
          queue.push_back(v);
        } else if (--cnt[v] == 0) {
          in[v] = 1;
          queue.push_back(v);
        }
      }
    }
    return in;
  }

  void zielonka(std::vector<char> alive) {
    int p = -1;
    for (int v = 0; v < n; ++v)
      if (alive[v]) p = std::max(p, prio[v]);
    if (p < 0) return;
    int pi = p & 1;

    std::vector<char> targets(n, 0);
    for (int v = 0; v < n; ++v)
      if (alive[v] && prio[v] == p) targets[v] = 1;
    std::vector<char> att = attract(alive, targets, pi);

    std::vector<char> rest = alive;
    for (int v = 0; v < n; ++v)
      if (att[v]) rest[v] = 0;
    zielonka(rest);

    std::vector<char> opp(n, 0);
    bool anyOpp = false;
    for (int v = 0; v < n; ++v)
      if (rest[v] && winner[v] == 1 - pi) {
        opp[v] = 1;
        anyOpp = true;
      }

    if (!anyOpp) {
      for (int v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        winner[v] = pi;
        if (targets[v] && owner[v] == pi)
          for (int w : succ[v])
            if (alive[w]) {
              strat[v] = w;
              break;
            }
      }
      return;
    }

    std::vector<char> att2 = attract(alive, opp, 1 - pi);
    std::vector<char> rest2 = alive;
    for (int v = 0; v < n; ++v) {
      if (att2[v]) {
        rest2[v] = 0;
        winner[v] = 1 - pi;
      }
    }
    zielonka(rest2);
  }
};

} // namespace

ParitySolution solve_parity(const Arena& a) {
  Solver s(a);
  s.zielonka(std::vector<char>(s.n, 1));

  ParitySolution out;
  for (int v = 0; v < s.n; ++v) {
    (s.winner[v] == 0 ? out.winEven : out.winOdd).insert(v);
    if (a.positions[v].succs.empty()) continue;
    int mv = s.strat[v];
    if (mv < 0 || (mv == v && std::find(a.positions[v].succs.begin(), a.positions[v].succs.end(),
                                        v) == a.positions[v].succs.end()))
      mv = a.positions[v].succs.front();
    (a.positions[v].owner == 0 ? out.strategyEven : out.strategyOdd)[v] = mv;
  }
  return out;
}

} // namespace muforge
