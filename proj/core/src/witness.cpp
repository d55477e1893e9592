#include "muforge/witness.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "muforge/diagnostics.hpp"

namespace muforge {

namespace {

// nontrivial strongly connected components of the cycle graph induced on
// keep; the graph has no self loops, so nontrivial means two or more nodes
std::vector<std::vector<int>> nontrivial_sccs(const Twb& t, const std::vector<int>& keep) {
  std::set<int> in(keep.begin(), keep.end());
  std::map<int, int> idx, low;
  std::set<int> onstk;
  std::vector<int> stack;
  std::vector<std::vector<int>> out;
  int counter = 0;
  std::function<void(int)> visit = [&](int v) {
    idx[v] = low[v] = counter++;
    stack.push_back(v);
    onstk.insert(v);
    for (int w : twb_succs(t, v)) {
      if (!in.count(w)) continue;
      if (!idx.count(w)) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (onstk.count(w)) {
        low[v] = std::min(low[v], idx[w]);
      }
    }
    if (low[v] == idx[v]) {
      std::vector<int> comp;
      for (;;) {
        int w = stack.back();
        stack.pop_back();
        onstk.erase(w);
        comp.push_back(w);
        if (w == v) break;
      }
      if (comp.size() > 1) {
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
      }
    }
  };
  for (int v : keep)
    if (!idx.count(v)) visit(v);
  return out;
}

int top_prio(const Twb& t, const std::vector<int>& nodes) {
  int p = 0;
  for (int v : nodes) p = std::max(p, t.nodes[static_cast<std::size_t>(v)].prio);
  return p;
}

// ---- witness chains

struct Chain {
  int len = 0;
  std::vector<std::vector<int>> members; // innermost first
};

Chain chain_from(const Twb& t, const std::vector<int>& nodes, int parity) {
  Chain best;
  for (const auto& comp : nontrivial_sccs(t, nodes)) {
    int p = top_prio(t, comp);
    std::vector<int> rest;
    for (int v : comp)
      if (t.nodes[static_cast<std::size_t>(v)].prio != p) rest.push_back(v);
    Chain cand;
    if (p % 2 == parity) {
      cand = chain_from(t, rest, 1 - parity);
      cand.len += 1;
      cand.members.push_back(comp);
    } else {
      cand = chain_from(t, rest, parity);
    }
    if (cand.len > best.len) best = std::move(cand);
  }
  return best;
}

// closed walk covering every induced edge of a strongly connected node set
std::vector<int> edge_covering_walk(const Twb& t, const std::vector<int>& nodes) {
  std::set<int> in(nodes.begin(), nodes.end());
  std::vector<std::pair<int, int>> edges;
  for (int u : nodes)
    for (int w : twb_succs(t, u))
      if (in.count(w)) edges.emplace_back(u, w);

  int base = nodes.front();
  auto path_to = [&](int from, int to) {
    // BFS inside the set; both ends are in the same SCC, so a path exists
    std::map<int, int> par;
    std::deque<int> q{from};
    par[from] = from;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      if (v == to) break;
      for (int w : twb_succs(t, v))
        if (in.count(w) && !par.count(w)) {
          par[w] = v;
          q.push_back(w);
        }
    }
    std::vector<int> rev;
    for (int v = to; v != from; v = par.at(v)) rev.push_back(v);
    std::reverse(rev.begin(), rev.end());
    return rev; // from excluded, to included (empty when from == to)
  };

  std::vector<int> walk{base};
  int cur = base;
  for (const auto& [u, w] : edges) {
    for (int x : path_to(cur, u)) walk.push_back(x);
    walk.push_back(w);
    cur = w;
  }
  for (int x : path_to(cur, base)) walk.push_back(x);
  if (walk.size() > 1 && walk.back() == base) walk.pop_back();
  return walk;
}

} // namespace

WitnessReport find_max_witness(const Twb& input) {
  Twb t = input;
  validate_twb(t);
  std::vector<int> all(t.nodes.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);

  WitnessReport best;
  for (int startParity : {1, 0}) {
    Chain c = chain_from(t, all, startParity);
    // an even innermost member cannot serve as c_1; it gets dropped
    int q = (c.len % 2 == startParity) ? c.len : c.len - 1;
    if (q <= best.q) continue;
    WitnessReport r;
    r.q = q;
    std::size_t skip = c.members.size() - static_cast<std::size_t>(q);
    for (std::size_t i = skip; i < c.members.size(); ++i) {
      WitnessCycle wc;
      wc.parity = top_prio(t, c.members[i]) % 2;
      wc.nodes = edge_covering_walk(t, c.members[i]);
      r.cycles.push_back(std::move(wc));
    }
    best = std::move(r);
  }
  return best;
}

ReduceReport reduce_priorities(const Twb& input) {
  ReduceReport rep;
  rep.result = input;
  validate_twb(rep.result);
  const Twb& t = rep.result;
  const int n = static_cast<int>(t.nodes.size());

  int maxP = 0;
  for (const auto& nd : t.nodes) maxP = std::max(maxP, nd.prio);
  if (maxP == 0) {
    rep.reducible = false;
    rep.note = "irreducible";
    return rep;
  }

  // S[i]: priority-i nodes still entangled with the class above through
  // cycles that avoid higher priorities
  std::map<int, std::set<int>> S;
  for (int v = 0; v < n; ++v)
    if (t.nodes[static_cast<std::size_t>(v)].prio == maxP) S[maxP].insert(v);
  for (int i = maxP; i >= 2; --i) {
    std::vector<int> H;
    for (int v = 0; v < n; ++v) {
      int p = t.nodes[static_cast<std::size_t>(v)].prio;
      if (p < i || S[i].count(v)) H.push_back(v);
    }
    for (const auto& comp : nontrivial_sccs(t, H)) {
      bool touches = false;
      for (int v : comp)
        if (S[i].count(v)) {
          touches = true;
          break;
        }
      if (!touches) continue;
      for (int v : comp)
        if (t.nodes[static_cast<std::size_t>(v)].prio == i - 1) S[i - 1].insert(v);
    }
  }

  if (!S[1].empty()) {
    rep.reducible = false;
    rep.note = "irreducible";
    return rep;
  }

  int lowered = 0;
  for (int i = 2; i <= maxP; ++i)
    for (int v : S[i]) {
      rep.result.nodes[static_cast<std::size_t>(v)].prio -= 2;
      ++lowered;
    }
  rep.reducible = true;
  rep.note = "lowered " + std::to_string(lowered) + " node(s) by 2";
  return rep;
}

namespace {

// parities of the highest old priority over closed walks through v inside
// comp
std::set<int> walk_parities(const Twb& t, const std::set<int>& comp, int v) {
  std::set<std::pair<int, int>> seen; // (node, max priority so far)
  std::deque<std::pair<int, int>> q;
  std::set<int> out;
  int p0 = t.nodes[static_cast<std::size_t>(v)].prio;
  seen.insert({v, p0});
  q.push_back({v, p0});
  while (!q.empty()) {
    auto [u, p] = q.front();
    q.pop_front();
    for (int w : twb_succs(t, u)) {
      if (!comp.count(w)) continue;
      int p2 = std::max(p, t.nodes[static_cast<std::size_t>(w)].prio);
      if (w == v) out.insert(p2 % 2);
      if (seen.insert({w, p2}).second) q.push_back({w, p2});
    }
  }
  return out;
}

int peel(const Twb& t, const std::vector<int>& comp, std::vector<int>& newPrio) {
  std::set<int> in(comp.begin(), comp.end());
  int rTop = top_prio(t, comp) % 2;
  std::vector<int> core, rest;
  for (int v : comp) {
    auto par = walk_parities(t, in, v);
    if (par.size() == 1 && *par.begin() == rTop)
      core.push_back(v);
    else
      rest.push_back(v);
  }
  // the highest-priority node only sees its own parity, so core is nonempty
  if (core.empty()) throw ValidationError("internal: priority peel failed to make progress");
  int maxInner = 0;
  for (const auto& sub : nontrivial_sccs(t, rest)) maxInner = std::max(maxInner, peel(t, sub, newPrio));
  int value = (maxInner % 2 == rTop) ? maxInner : maxInner + 1;
  for (int v : core) newPrio[static_cast<std::size_t>(v)] = value;
  return value;
}

// no cycle may pair an old maximum p with a new maximum q of the other
// parity; checked pairwise over the used values
void check_parity_equivalence(const Twb& t, const std::vector<int>& newPrio) {
  std::set<int> oldUsed, newUsed;
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    oldUsed.insert(t.nodes[i].prio);
    newUsed.insert(newPrio[i]);
  }
  for (int p : oldUsed)
    for (int q : newUsed) {
      if (p % 2 == q % 2) continue;
      std::vector<int> H;
      for (std::size_t i = 0; i < t.nodes.size(); ++i)
        if (t.nodes[i].prio <= p && newPrio[i] <= q) H.push_back(static_cast<int>(i));
      for (const auto& comp : nontrivial_sccs(t, H)) {
        bool oldHit = false, newHit = false;
        for (int v : comp) {
          if (t.nodes[static_cast<std::size_t>(v)].prio == p) oldHit = true;
          if (newPrio[static_cast<std::size_t>(v)] == q) newHit = true;
        }
        if (oldHit && newHit)
          throw ValidationError("internal: priority reassignment flipped a cycle parity");
      }
    }
}

} // namespace

Twb minimize_priorities(const Twb& input) {
  Twb t = input;
  validate_twb(t);
  std::vector<int> all(t.nodes.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);

  std::vector<int> newPrio(t.nodes.size(), 0);
  for (const auto& comp : nontrivial_sccs(t, all)) peel(t, comp, newPrio);

  // compact unused positive levels (kept for safety; peel values are dense)
  for (;;) {
    std::set<int> used(newPrio.begin(), newPrio.end());
    int maxV = *used.rbegin();
    int gap = -1;
    for (int p = 1; p <= maxV; ++p)
      if (!used.count(p)) {
        gap = p;
        break;
      }
    if (gap < 0) break;
    for (auto& p : newPrio)
      if (p > gap) p -= 2;
  }

  check_parity_equivalence(t, newPrio);

  Twb out = t;
  for (std::size_t i = 0; i < out.nodes.size(); ++i) out.nodes[i].prio = newPrio[i];
  return out;
}

} // namespace muforge
