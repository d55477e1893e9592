#include "muforge/assign.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "muforge/diagnostics.hpp"
#include "muforge/witness.hpp"

namespace muforge {

namespace {

// Work tree: a Twb plus the trace data the priority search needs.  supp is
// the set of live thread slots at the node, a bitmask over the origin core
// node's slots; em carries a matrix for every cycle-graph edge.  Back edges
// map identically because a source stands for the same state as its target.
struct WorkTree {
  Twb t;
  std::vector<std::uint64_t> supp;
  std::vector<int> origin;
  std::map<std::pair<int, int>, TraceMatrix> em;
};

std::uint64_t propagate(std::uint64_t s, const TraceMatrix& m) {
  std::uint64_t next = 0;
  for (int i = 0; i < m.rows; ++i) {
    if ((s >> i & 1) == 0) continue;
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0) next |= std::uint64_t{1} << j;
  }
  return next;
}

TraceMatrix support_row(std::uint64_t s, int slots) {
  TraceMatrix row(1, slots);
  for (int j = 0; j < slots; ++j)
    if (s >> j & 1) row.at(0, j) = priority_singleton(0);
  return row;
}

int add_node(WorkTree& w, NodeKind kind, std::vector<std::string> lits, int origin,
             std::uint64_t supp, std::size_t maxNodes) {
  if (w.t.nodes.size() >= maxNodes)
    throw BudgetError("priority assignment exceeded " + std::to_string(maxNodes) + " nodes");
  TwbNode n;
  n.kind = kind;
  n.lits = std::move(lits);
  w.t.nodes.push_back(std::move(n));
  w.supp.push_back(supp);
  w.origin.push_back(origin);
  return static_cast<int>(w.t.nodes.size()) - 1;
}

// Slot width of the state a node ranges over, read off any incident edge.
int width_at(const WorkTree& w, int v) {
  for (int s : twb_succs(w.t, v)) return w.em.at({v, s}).rows;
  for (const auto& [key, m] : w.em)
    if (key.second == v) return m.cols;
  return 1;
}

// ---- unfolding -----------------------------------------------------------

// Depth first unfolding of the label graph into a tree with back edges.  The
// state is (label node, live threads); hitting a state already on the path
// closes a back edge through a fresh source node.
WorkTree unfold_label(const LabelGraph& g, const AssignOptions& opts) {
  for (const auto& n : g.nodes)
    if (n.label.size() > 64) throw BudgetError("label width beyond 64 slots");

  WorkTree w;
  std::vector<int> copies(g.nodes.size(), 0);
  std::vector<std::pair<std::pair<int, std::uint64_t>, int>> path;

  std::function<int(int, std::uint64_t)> build = [&](int node, std::uint64_t supp) -> int {
    if (++copies[node] > opts.maxCopiesPerNode)
      throw BudgetError("label node " + std::to_string(node) + " exceeded " +
                        std::to_string(opts.maxCopiesPerNode) + " unfolding copies");
    const LabelNode& ln = g.nodes[node];
    int id = add_node(w, ln.kind, ln.literals, node, supp, opts.maxNodes);
    path.push_back({{node, supp}, id});
    std::vector<int> kids;
    kids.reserve(ln.succs.size());
    for (int succ : ln.succs) {
      const TraceMatrix& m = g.edge(node, succ);
      std::uint64_t next = propagate(supp, m);
      int anc = -1;
      for (const auto& p : path)
        if (p.first.first == succ && p.first.second == next) anc = p.second;
      if (anc >= 0) {
        int src = add_node(w, NodeKind::Choice, {}, succ, next, opts.maxNodes);
        w.t.nodes[src].back = anc;
        w.em[{id, src}] = m;
        w.em[{src, anc}] = identity_matrix(static_cast<int>(g.nodes[succ].label.size()));
        kids.push_back(src);
      } else {
        int child = build(succ, next);
        w.em[{id, child}] = m;
        kids.push_back(child);
      }
    }
    w.t.nodes[id].children = std::move(kids);
    path.pop_back();
    return id;
  };

  int rootSlots = static_cast<int>(g.nodes[g.root].label.size());
  std::uint64_t rootSupp =
      rootSlots >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rootSlots) - 1;
  w.t.root = build(g.root, rootSupp);
  return w;
}

// Splices out bookkeeping nodes: a unary-rule copy with no back edge that no
// back edge targets is replaced by its only child, matrices composed.  Kept
// unary nodes (anchors) turn into single-child choice nodes so every kind in
// the result is Modal, Choice or Leaf.
WorkTree contract_unary(const WorkTree& w, const AssignOptions& opts) {
  std::vector<char> isTarget(w.t.nodes.size(), 0);
  for (const auto& n : w.t.nodes)
    if (n.back >= 0) isTarget[n.back] = 1;

  auto removable = [&](int u) {
    const TwbNode& n = w.t.nodes[u];
    return n.kind == NodeKind::Unary && n.back < 0 && !isTarget[u] && n.children.size() == 1;
  };

  WorkTree out;
  std::map<int, int> mapped; // old id -> new id, targets only need it

  std::function<int(int)> emit = [&](int u) -> int {
    const TwbNode& un = w.t.nodes[u];
    NodeKind kind = un.kind == NodeKind::Unary ? NodeKind::Choice : un.kind;
    int id = add_node(out, kind, un.lits, w.origin[u], w.supp[u], opts.maxNodes);
    mapped[u] = id;
    if (un.back >= 0) {
      int tgt = mapped.at(un.back);
      out.t.nodes[id].back = tgt;
      out.em[{id, tgt}] = w.em.at({u, un.back});
      return id;
    }
    std::vector<int> kids;
    for (int c : un.children) {
      TraceMatrix m = w.em.at({u, c});
      while (removable(c)) {
        int next = w.t.nodes[c].children[0];
        m = compose(m, w.em.at({c, next}));
        c = next;
      }
      int copy = emit(c);
      out.em[{id, copy}] = std::move(m);
      kids.push_back(copy);
    }
    out.t.nodes[id].children = std::move(kids);
    return id;
  };

  int r = w.t.root;
  while (removable(r)) r = w.t.nodes[r].children[0];
  out.t.root = emit(r);
  return out;
}

// ---- cycle structure -----------------------------------------------------

// Nontrivial strongly connected components of the cycle graph restricted to
// the nodes where keep is set.  The cycle graph has no self loops, so
// nontrivial means two or more nodes.
std::vector<std::vector<int>> nontrivial_sccs(const WorkTree& w, const std::vector<char>& keep) {
  int n = static_cast<int>(w.t.nodes.size());
  std::vector<int> index(n, -1), low(n, 0), stack;
  std::vector<char> onstack(n, 0);
  std::vector<std::vector<int>> comps;
  int counter = 0;

  std::function<void(int)> strong = [&](int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    onstack[v] = 1;
    for (int u : twb_succs(w.t, v)) {
      if (!keep[u]) continue;
      if (index[u] < 0) {
        strong(u);
        low[v] = std::min(low[v], low[u]);
      } else if (onstack[u]) {
        low[v] = std::min(low[v], index[u]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<int> comp;
      for (;;) {
        int u = stack.back();
        stack.pop_back();
        onstack[u] = 0;
        comp.push_back(u);
        if (u == v) break;
      }
      if (comp.size() > 1) {
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
      }
    }
  };

  for (int v = 0; v < n; ++v)
    if (keep[v] && index[v] < 0) strong(v);
  return comps;
}

// Verdicts of the closed walks through v that stay inside allowed: true for
// a walk whose best trace is a mu trace.  Explores composed matrices until
// the finite monoid closes.
std::set<bool> cycle_verdicts(const WorkTree& w, int v, const std::vector<char>& allowed,
                              std::size_t maxStates) {
  int slots = width_at(w, v);
  TraceMatrix prefix = support_row(w.supp[v], slots);

  std::set<bool> out;
  std::set<std::pair<int, TraceMatrix>> seen;
  std::vector<std::pair<int, TraceMatrix>> work;
  auto push = [&](int u, TraceMatrix m) {
    if (seen.size() >= maxStates)
      throw BudgetError("cycle verdict search exceeded " + std::to_string(maxStates) + " states");
    auto [it, fresh] = seen.insert({u, std::move(m)});
    if (fresh) work.push_back(*it);
  };

  push(v, identity_matrix(slots));
  while (!work.empty()) {
    auto [u, m] = work.back();
    work.pop_back();
    for (int x : twb_succs(w.t, u)) {
      if (!allowed[x]) continue;
      TraceMatrix next = compose(m, w.em.at({u, x}));
      if (x == v) out.insert(lasso_mu_trace_from_matrices(prefix, next));
      push(x, std::move(next));
    }
  }
  return out;
}

// ---- peeling -------------------------------------------------------------

// Assigns priorities inside one component, outermost layer first: nodes all
// of whose cycles agree take the least value of the right parity above
// everything assigned further in.  Returns the highest value used, or
// nothing when a layer has no verdict-pure node.
std::optional<int> peel_component(const WorkTree& w, const std::vector<int>& comp,
                                  std::vector<int>& prio, const AssignOptions& opts) {
  std::vector<char> allowed(w.t.nodes.size(), 0);
  for (int v : comp) allowed[v] = 1;

  std::vector<int> pureOdd, pureEven, rest;
  for (int v : comp) {
    std::set<bool> verdicts = cycle_verdicts(w, v, allowed, opts.maxStates);
    if (verdicts.size() == 1) {
      (*verdicts.begin() ? pureOdd : pureEven).push_back(v);
    } else {
      rest.push_back(v);
    }
  }
  if (pureOdd.empty() && pureEven.empty()) return std::nullopt;

  int maxInner = 0;
  std::vector<char> keep(w.t.nodes.size(), 0);
  for (int v : rest) keep[v] = 1;
  for (const auto& sub : nontrivial_sccs(w, keep)) {
    auto innerTop = peel_component(w, sub, prio, opts);
    if (!innerTop) return std::nullopt;
    maxInner = std::max(maxInner, *innerTop);
  }

  int top = 0;
  if (!pureEven.empty()) {
    int v = maxInner + maxInner % 2;
    for (int u : pureEven) prio[u] = v;
    top = std::max(top, v);
  }
  if (!pureOdd.empty()) {
    int v = maxInner + 1 - maxInner % 2;
    for (int u : pureOdd) prio[u] = v;
    top = std::max(top, v);
  }
  return top;
}

// ---- flower fallback -----------------------------------------------------

// When peeling gets stuck the component is rebuilt around a hub: a node that
// cuts every cycle.  Each cycle is then a sequence of petals, and a petal's
// effect is one matrix.  A back edge may land above the hub; that petal falls
// back to the hub along the tree path from its entry point.
struct Petal {
  int source = -1;
  int entry = -1;
  TraceMatrix matrix{1, 1};
};

struct ZNode {
  std::uint32_t family = 0;
  bool odd = false;
  int value = 0;
  std::vector<int> children;
};

struct Flower {
  int hub = -1;
  std::set<int> comp;
  std::vector<Petal> petals;
  std::map<int, int> petalOf; // source node -> petal index
  std::vector<ZNode> z;
  int zroot = -1;
};

int find_hub(const WorkTree& w, const std::vector<int>& comp) {
  std::vector<int> order(comp);
  std::sort(order.begin(), order.end());
  for (int h : order) {
    std::vector<char> keep(w.t.nodes.size(), 0);
    for (int v : comp) keep[v] = 1;
    keep[h] = 0;
    if (nontrivial_sccs(w, keep).empty()) return h;
  }
  return -1;
}

const TraceMatrix& petal_product(const std::vector<Petal>& petals, std::uint32_t mask,
                                 std::map<std::uint32_t, TraceMatrix>& memo) {
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  int h = 31;
  while ((mask >> h & 1) == 0) --h;
  std::uint32_t rest = mask & ~(std::uint32_t{1} << h);
  TraceMatrix m = rest == 0 ? petals[h].matrix
                            : compose(petal_product(petals, rest, memo), petals[h].matrix);
  return memo.emplace(mask, std::move(m)).first->second;
}

bool family_verdict(const Flower& f, std::uint32_t mask, const TraceMatrix& prefix,
                    std::map<std::uint32_t, TraceMatrix>& memo) {
  return lasso_mu_trace_from_matrices(prefix, petal_product(f.petals, mask, memo));
}

// Condition tree over petal families: children are the maximal nonempty
// subfamilies whose repetition flips the verdict.  Proper subsets are
// numerically smaller, so a descending scan sees supersets first.
int build_ztree(Flower& f, std::uint32_t family, const TraceMatrix& prefix,
                std::map<std::uint32_t, TraceMatrix>& memo) {
  if (f.z.size() > 4096) throw BudgetError("petal condition tree grew past 4096 families");
  int self = static_cast<int>(f.z.size());
  f.z.push_back({});
  f.z[self].family = family;
  bool odd = family_verdict(f, family, prefix, memo);
  f.z[self].odd = odd;

  std::vector<std::uint32_t> flipped;
  for (std::uint32_t sub = (family - 1) & family; sub != 0; sub = (sub - 1) & family) {
    if (family_verdict(f, sub, prefix, memo) != odd) {
      bool covered = false;
      for (std::uint32_t m : flipped)
        if ((sub & m) == sub) {
          covered = true;
          break;
        }
      if (!covered) flipped.push_back(sub);
    }
  }

  std::vector<int> kids;
  for (std::uint32_t m : flipped) kids.push_back(build_ztree(f, m, prefix, memo));
  int value = 0;
  if (kids.empty()) {
    value = odd ? 1 : 0;
  } else {
    for (int k : kids) value = std::max(value, f.z[k].value);
    value += 1;
  }
  f.z[self].children = std::move(kids);
  f.z[self].value = value;
  return self;
}

// Round robin memory over the condition tree.  A step finds the deepest
// family on the active branch containing the petal, emits its value and
// rotates its child pointer; rotations below the rotated node reset so that
// states compare by value.
using ZState = std::vector<int>;

std::pair<ZState, int> z_step(const Flower& f, const ZState& state, int petal) {
  int cur = f.zroot;
  for (;;) {
    const ZNode& n = f.z[cur];
    if (n.children.empty()) break;
    int next = n.children[state[cur]];
    if ((f.z[next].family >> petal & 1) == 0) break;
    cur = next;
  }
  int value = f.z[cur].value;

  ZState out(f.z.size(), 0);
  for (int v = f.zroot; v != cur;) {
    out[v] = state[v];
    v = f.z[v].children[state[v]];
  }
  if (!f.z[cur].children.empty())
    out[cur] = (state[cur] + 1) % static_cast<int>(f.z[cur].children.size());
  return {std::move(out), value};
}

// ---- final validation ----------------------------------------------------

// Every closed walk through a back target must carry a best trace whose
// verdict matches the parity of the walk's highest priority.  The search
// runs over (node, composed matrix, highest priority) and keeps going
// through closures so that composite cycles are covered too.
void validate_traces(const WorkTree& w, const AssignOptions& opts) {
  int n = static_cast<int>(w.t.nodes.size());
  std::vector<char> isTarget(n, 0);
  for (int u = 0; u < n; ++u)
    if (w.t.nodes[u].back >= 0) isTarget[w.t.nodes[u].back] = 1;

  for (int v = 0; v < n; ++v) {
    if (!isTarget[v]) continue;
    int slots = width_at(w, v);
    TraceMatrix prefix = support_row(w.supp[v], slots);

    std::set<std::tuple<int, TraceMatrix, int>> seen;
    std::vector<std::tuple<int, TraceMatrix, int>> work;
    auto push = [&](int u, TraceMatrix m, int q) {
      if (seen.size() >= opts.maxStates)
        throw BudgetError("trace validation exceeded " + std::to_string(opts.maxStates) +
                          " states");
      auto [it, fresh] = seen.insert({u, std::move(m), q});
      if (fresh) work.push_back(*it);
    };
    push(v, identity_matrix(slots), w.t.nodes[v].prio);
    while (!work.empty()) {
      auto [u, m, q] = work.back();
      work.pop_back();
      for (int x : twb_succs(w.t, u)) {
        TraceMatrix next = compose(m, w.em.at({u, x}));
        int q2 = std::max(q, w.t.nodes[x].prio);
        if (x == v) {
          bool mu = lasso_mu_trace_from_matrices(prefix, next);
          if (mu != (q2 % 2 == 1))
            throw ValidationError("assigned priorities disagree with a trace at node " +
                                  std::to_string(v));
        }
        push(x, std::move(next), q2);
      }
    }
  }
}

} // namespace

Twb assign_node_priorities(const LabelGraph& g, const AssignOptions& opts) {
  WorkTree w = contract_unary(unfold_label(g, opts), opts);
  validate_twb(w.t);
  int n = static_cast<int>(w.t.nodes.size());

  std::vector<int> prio(n, 0);
  std::vector<char> all(n, 1);
  std::vector<std::vector<int>> stuck;
  for (const auto& comp : nontrivial_sccs(w, all)) {
    std::vector<int> tmp(prio);
    if (peel_component(w, comp, tmp, opts)) {
      prio = std::move(tmp);
    } else {
      stuck.push_back(comp);
    }
  }
  for (int v = 0; v < n; ++v) w.t.nodes[v].prio = prio[v];

  if (stuck.empty()) {
    validate_traces(w, opts);
    return w.t;
  }

  std::map<int, Flower> flowerAt;
  for (const auto& comp : stuck) {
    Flower f;
    f.hub = find_hub(w, comp);
    if (f.hub < 0)
      throw ValidationError("tableau cycles are too entangled for a single hub rebuild");
    if (w.t.nodes[f.hub].back >= 0)
      throw ValidationError("hub itself closes a cycle");
    f.comp.insert(comp.begin(), comp.end());

    // Every cycle passes the hub, so every source sits below it and every
    // back edge lands on the hub or one of its ancestors on the tree path.
    auto path_up = [&](int from, int to) {
      std::vector<int> path;
      int x = from;
      while (x != to) {
        path.push_back(x);
        x = w.t.nodes[x].parent;
        if (x < 0) throw ValidationError("cycle through the hub leaves the tree");
      }
      path.push_back(to);
      std::reverse(path.begin(), path.end());
      return path; // to .. from, top down
    };
    for (int v : comp) {
      int entry = w.t.nodes[v].back;
      if (entry < 0) continue;
      Petal p;
      p.source = v;
      p.entry = entry;
      std::vector<int> stem = path_up(v, f.hub);     // hub .. v
      std::vector<int> tail = path_up(f.hub, entry); // entry .. hub
      std::optional<TraceMatrix> m;
      auto mul = [&](const TraceMatrix& e) { m = m ? compose(*m, e) : e; };
      for (std::size_t i = 0; i + 1 < stem.size(); ++i) mul(w.em.at({stem[i], stem[i + 1]}));
      mul(w.em.at({v, entry}));
      for (std::size_t i = 0; i + 1 < tail.size(); ++i) mul(w.em.at({tail[i], tail[i + 1]}));
      p.matrix = *m;
      f.petalOf[v] = static_cast<int>(f.petals.size());
      f.petals.push_back(std::move(p));
    }
    if (f.petals.size() > 22)
      throw BudgetError("flower rebuild over " + std::to_string(f.petals.size()) + " petals");
    for (const auto& p : f.petals)
      if (propagate(w.supp[f.hub], p.matrix) != w.supp[f.hub])
        throw ValidationError("petal does not preserve the hub's live threads");

    int slots = f.petals[0].matrix.rows;
    std::size_t masks = std::size_t{1} << f.petals.size();
    if (masks * static_cast<std::size_t>(slots) * slots > (std::size_t{16} << 20))
      throw BudgetError("petal condition table too large");
    TraceMatrix prefix = support_row(w.supp[f.hub], slots);
    std::map<std::uint32_t, TraceMatrix> memo;
    f.zroot = build_ztree(f, static_cast<std::uint32_t>(masks - 1), prefix, memo);
    flowerAt[f.hub] = std::move(f);
  }

  // Rebuild the tree.  Stuck components are replaced by a memory unfold:
  // copies of the hub, and of the chain from a back edge's entry point down
  // to the hub, are keyed by memory state along the path.  A source either
  // hooks the ancestor copy of its next state or opens a fresh one below.
  WorkTree out;
  using HubKey = std::pair<ZState, int>;
  std::function<int(int, std::map<int, int>)> rebuild;
  std::function<int(const Flower&, int, const ZState&, std::map<HubKey, int>, std::map<int, int>)>
      layPetal;
  std::function<int(const Flower&, int, const ZState&, std::map<HubKey, int>, std::map<int, int>)>
      layChain;

  std::function<int(const Flower&, const ZState&, std::map<HubKey, int>, std::map<int, int>)>
      layHub = [&](const Flower& f, const ZState& m, std::map<HubKey, int> hubs,
                   std::map<int, int> anc) -> int {
    const TwbNode& hn = w.t.nodes[f.hub];
    int id = add_node(out, hn.kind, hn.lits, w.origin[f.hub], w.supp[f.hub], opts.maxNodes);
    hubs[{m, f.hub}] = id;
    std::vector<int> kids;
    for (int c : hn.children) {
      int copy = f.comp.count(c) ? layPetal(f, c, m, hubs, anc) : rebuild(c, anc);
      out.em[{id, copy}] = w.em.at({f.hub, c});
      kids.push_back(copy);
    }
    out.t.nodes[id].children = std::move(kids);
    return id;
  };

  layChain = [&](const Flower& f, int entry, const ZState& m, std::map<HubKey, int> hubs,
                 std::map<int, int> anc) -> int {
    if (entry == f.hub) return layHub(f, m, hubs, anc);
    std::vector<int> path; // entry .. hub, top down
    for (int x = f.hub; x != entry; x = w.t.nodes[x].parent) path.push_back(x);
    path.push_back(entry);
    std::reverse(path.begin(), path.end());

    std::function<int(std::size_t)> layAt = [&](std::size_t i) -> int {
      int x = path[i];
      if (x == f.hub) return layHub(f, m, hubs, anc);
      const TwbNode& xn = w.t.nodes[x];
      int id = add_node(out, xn.kind, xn.lits, w.origin[x], w.supp[x], opts.maxNodes);
      hubs[{m, x}] = id;
      std::vector<int> kids;
      for (int c : xn.children) {
        int copy = c == path[i + 1] ? layAt(i + 1) : rebuild(c, anc);
        out.em[{id, copy}] = w.em.at({x, c});
        kids.push_back(copy);
      }
      out.t.nodes[id].children = std::move(kids);
      return id;
    };
    return layAt(0);
  };

  layPetal = [&](const Flower& f, int u, const ZState& m, std::map<HubKey, int> hubs,
                 std::map<int, int> anc) -> int {
    const TwbNode& un = w.t.nodes[u];
    int id = add_node(out, un.kind, un.lits, w.origin[u], w.supp[u], opts.maxNodes);

    if (un.back >= 0) {
      int entry = un.back;
      auto [m2, value] = z_step(f, m, f.petalOf.at(u));
      out.t.nodes[id].prio = value;
      auto hit = hubs.find({m2, entry});
      if (hit != hubs.end()) {
        out.t.nodes[id].back = hit->second;
        out.em[{id, hit->second}] = w.em.at({u, entry});
      } else {
        int child = layChain(f, entry, m2, hubs, anc);
        out.t.nodes[id].children = {child};
        out.em[{id, child}] = w.em.at({u, entry});
      }
      return id;
    }

    std::vector<int> kids;
    for (int c : un.children) {
      int copy = f.comp.count(c) ? layPetal(f, c, m, hubs, anc) : rebuild(c, anc);
      out.em[{id, copy}] = w.em.at({u, c});
      kids.push_back(copy);
    }
    out.t.nodes[id].children = std::move(kids);
    return id;
  };

  rebuild = [&](int u, std::map<int, int> anc) -> int {
    auto fl = flowerAt.find(u);
    if (fl != flowerAt.end())
      return layHub(fl->second, ZState(fl->second.z.size(), 0), {}, anc);
    const TwbNode& un = w.t.nodes[u];
    int id = add_node(out, un.kind, un.lits, w.origin[u], w.supp[u], opts.maxNodes);
    out.t.nodes[id].prio = un.prio;
    anc[u] = id;
    if (un.back >= 0) {
      auto tgt = anc.find(un.back);
      if (tgt == anc.end())
        throw ValidationError("back edge target was not rebuilt on the current path");
      out.t.nodes[id].back = tgt->second;
      out.em[{id, tgt->second}] = w.em.at({u, un.back});
      return id;
    }
    std::vector<int> kids;
    for (int c : un.children) {
      int copy = rebuild(c, anc);
      out.em[{id, copy}] = w.em.at({u, c});
      kids.push_back(copy);
    }
    out.t.nodes[id].children = std::move(kids);
    return id;
  };

  out.t.root = rebuild(w.t.root, {});
  validate_twb(out.t);
  validate_traces(out, opts);
  return out.t;
}

std::set<int> tableau_alternation_depth(const FormulaRef& f) {
  LabelGraph g = build_label_graph(f);
  Twb assigned = assign_node_priorities(g);
  Twb reduced = minimize_priorities(assigned);
  std::set<int> values;
  for (const auto& n : reduced.nodes) values.insert(n.prio);
  return values;
}

} // namespace muforge
