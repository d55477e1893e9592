#include "muforge/core_graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <tuple>

#include "muforge/diagnostics.hpp"
#include "muforge/print.hpp"

namespace muforge {

namespace {

std::string display_label(const std::vector<FormulaRef>& label) {
  std::string out;
  for (const auto& f : label) {
    if (!out.empty()) out += ", ";
    out += print_formula(f);
  }
  return out;
}

} // namespace

CoreGraph extract_core(const LabelGraph& g) {
  const int n = static_cast<int>(g.nodes.size());
  // fan(x): the modal/leaf nodes a walk from x reaches while only crossing
  // bookkeeping nodes, with the composed matrices.  Guarded input has no
  // modality-free cycle, so the recursion is well-founded.
  std::vector<std::vector<std::pair<int, TraceMatrix>>> fanMemo(static_cast<std::size_t>(n));
  std::vector<char> fanDone(static_cast<std::size_t>(n), 0), onstack(static_cast<std::size_t>(n), 0);
  std::function<const std::vector<std::pair<int, TraceMatrix>>&(int)> fan =
      [&](int x) -> const std::vector<std::pair<int, TraceMatrix>>& {
    auto ux = static_cast<std::size_t>(x);
    if (fanDone[ux]) return fanMemo[ux];
    if (onstack[ux]) throw ValidationError("tableau has a cycle without a modal step");
    const LabelNode& node = g.nodes[ux];
    std::vector<std::pair<int, TraceMatrix>> out;
    if (node.kind == NodeKind::Modal || node.kind == NodeKind::Leaf) {
      out.emplace_back(x, identity_matrix(static_cast<int>(node.label.size())));
    } else {
      onstack[ux] = 1;
      for (int s : node.succs) {
        const TraceMatrix& em = g.edge(x, s);
        for (const auto& [t, m] : fan(s)) {
          TraceMatrix comp = compose(em, m);
          bool dup = false;
          for (const auto& [t2, m2] : out)
            if (t2 == t && m2 == comp) {
              dup = true;
              break;
            }
          if (!dup) out.emplace_back(t, std::move(comp));
        }
      }
      onstack[ux] = 0;
    }
    fanMemo[ux] = std::move(out);
    fanDone[ux] = 1;
    return fanMemo[ux];
  };

  CoreGraph core;
  std::map<int, int> coreOf; // label node -> core node
  std::deque<int> work;      // label nodes whose core node still needs edges

  auto intern = [&](int labelNode, NodeKind kind) {
    auto it = coreOf.find(labelNode);
    if (it != coreOf.end()) return it->second;
    const LabelNode& ln = g.nodes[static_cast<std::size_t>(labelNode)];
    int id = static_cast<int>(core.nodes.size());
    CoreNode cn;
    cn.kind = kind;
    cn.literals = ln.literals;
    cn.consistent = ln.consistent;
    cn.slots = static_cast<int>(ln.label.size());
    cn.label = display_label(ln.label);
    core.nodes.push_back(std::move(cn));
    coreOf.emplace(labelNode, id);
    work.push_back(labelNode);
    return id;
  };
  // exits keep their own kind; a branching bookkeeping entry becomes a choice
  auto internExit = [&](int x) { return intern(x, g.nodes[static_cast<std::size_t>(x)].kind); };

  // entry: label node whose fan feeds a fresh core edge list
  auto connect = [&](int coreId, int entry, const TraceMatrix& pre, bool composePre) {
    const auto& f = fan(entry);
    for (const auto& [t, m] : f) {
      CoreEdge e;
      e.target = internExit(t);
      e.matrix = composePre ? compose(pre, m) : m;
      bool dup = false;
      for (const auto& e2 : core.nodes[static_cast<std::size_t>(coreId)].out)
        if (e2.target == e.target && e2.matrix == e.matrix) {
          dup = true;
          break;
        }
      if (!dup) core.nodes[static_cast<std::size_t>(coreId)].out.push_back(std::move(e));
    }
  };

  const auto& rootFan = fan(g.root);
  if (rootFan.size() == 1) {
    core.root = internExit(rootFan[0].first);
    core.rootPrefix = rootFan[0].second;
  } else {
    core.root = intern(g.root, NodeKind::Choice);
    core.rootPrefix = identity_matrix(static_cast<int>(g.nodes[static_cast<std::size_t>(g.root)].label.size()));
  }

  while (!work.empty()) {
    int x = work.front();
    work.pop_front();
    int coreId = coreOf.at(x);
    const LabelNode& ln = g.nodes[static_cast<std::size_t>(x)];
    if (core.nodes[static_cast<std::size_t>(coreId)].kind == NodeKind::Choice) {
      TraceMatrix unused;
      connect(coreId, x, unused, false);
      continue;
    }
    if (ln.kind == NodeKind::Leaf) continue;
    // modal: one edge per child; a child that itself branches through
    // bookkeeping nodes becomes a choice keyed by the child label
    for (int s : ln.succs) {
      const TraceMatrix& em = g.edge(x, s);
      const auto& childFan = fan(s);
      if (childFan.size() == 1) {
        CoreEdge e;
        e.target = internExit(childFan[0].first);
        e.matrix = compose(em, childFan[0].second);
        bool dup = false;
        for (const auto& e2 : core.nodes[static_cast<std::size_t>(coreId)].out)
          if (e2.target == e.target && e2.matrix == e.matrix) {
            dup = true;
            break;
          }
        if (!dup) core.nodes[static_cast<std::size_t>(coreId)].out.push_back(std::move(e));
      } else {
        CoreEdge e;
        e.target = intern(s, NodeKind::Choice);
        e.matrix = em;
        core.nodes[static_cast<std::size_t>(coreId)].out.push_back(std::move(e));
      }
    }
  }
  return core;
}

namespace {

// ---- coarsest bisimulation on the disjoint union, by (kind, literals,
// ---- consistency) and successor block sets

std::vector<int> bisim_blocks(const CoreGraph& a, const CoreGraph& b) {
  const int na = static_cast<int>(a.nodes.size());
  const int nb = static_cast<int>(b.nodes.size());
  const int total = na + nb;
  auto nodeAt = [&](int i) -> const CoreNode& {
    return i < na ? a.nodes[static_cast<std::size_t>(i)]
                  : b.nodes[static_cast<std::size_t>(i - na)];
  };
  auto succsOf = [&](int i, std::vector<int>& out) {
    out.clear();
    const CoreNode& nd = nodeAt(i);
    for (const auto& e : nd.out) out.push_back(i < na ? e.target : e.target + na);
  };

  std::vector<int> block(static_cast<std::size_t>(total));
  {
    std::map<std::tuple<int, std::vector<std::string>, bool>, int> init;
    for (int i = 0; i < total; ++i) {
      const CoreNode& nd = nodeAt(i);
      auto key = std::make_tuple(static_cast<int>(nd.kind), nd.literals, nd.consistent);
      auto it = init.find(key);
      if (it == init.end()) it = init.emplace(key, static_cast<int>(init.size())).first;
      block[static_cast<std::size_t>(i)] = it->second;
    }
  }
  std::vector<int> succs;
  for (;;) {
    std::map<std::pair<int, std::set<int>>, int> sig;
    std::vector<int> next(static_cast<std::size_t>(total));
    for (int i = 0; i < total; ++i) {
      succsOf(i, succs);
      std::set<int> sblocks;
      for (int s : succs) sblocks.insert(block[static_cast<std::size_t>(s)]);
      auto key = std::make_pair(block[static_cast<std::size_t>(i)], std::move(sblocks));
      auto it = sig.find(key);
      if (it == sig.end()) it = sig.emplace(std::move(key), static_cast<int>(sig.size())).first;
      next[static_cast<std::size_t>(i)] = it->second;
    }
    bool changed = false;
    for (int i = 0; i < total; ++i)
      if (next[static_cast<std::size_t>(i)] != block[static_cast<std::size_t>(i)]) {
        changed = true;
        break;
      }
    block = std::move(next);
    if (!changed) break;
  }
  return block;
}

// ---- the matching game

struct GameKey {
  int u, v;         // core nodes, sides 1 and 2
  int anchor;       // -1 while building the stem, else the anchor state id
  int side, edge;   // >= 0: challenger committed this step, defender to answer
  TraceMatrix m1, m2;

  bool operator<(const GameKey& o) const {
    if (u != o.u) return u < o.u;
    if (v != o.v) return v < o.v;
    if (anchor != o.anchor) return anchor < o.anchor;
    if (side != o.side) return side < o.side;
    if (edge != o.edge) return edge < o.edge;
    if (m1 < o.m1) return true;
    if (o.m1 < m1) return false;
    return m2 < o.m2;
  }
};

struct GameState {
  GameKey k;
  bool terminal = false; // challenger win: defender stuck or verdict mismatch
  bool claim = false;    // terminal due to a verdict mismatch
  bool v1 = false, v2 = false;
  std::vector<int> succs, preds;
};

std::size_t default_bound(const CoreGraph& a, const CoreGraph& b) {
  auto maxBit = [](const CoreGraph& g) {
    PrioritySet all = 0;
    for (const auto& nd : g.nodes)
      for (const auto& e : nd.out)
        for (PrioritySet c : e.matrix.cells) all |= c;
    int hi = 0;
    for (int p = 0; p < 32; ++p)
      if (all & (PrioritySet{1} << p)) hi = p;
    return hi;
  };
  std::size_t prod = a.nodes.size() * b.nodes.size();
  std::size_t byShape = prod * static_cast<std::size_t>(maxBit(a) + 1) *
                        static_cast<std::size_t>(maxBit(b) + 1) * 4096;
  return std::max<std::size_t>(byShape, 1000000);
}

} // namespace

CoreEquivVerdict core_equivalent(const CoreGraph& a, const CoreGraph& b, std::size_t lassoBound) {
  CoreEquivVerdict out;
  const int na = static_cast<int>(a.nodes.size());

  if (lassoBound == 0) {
    if (const char* env = std::getenv("MUFORGE_LASSO_BOUND")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) lassoBound = static_cast<std::size_t>(v);
    }
    if (lassoBound == 0) lassoBound = default_bound(a, b);
  }

  std::vector<int> block = bisim_blocks(a, b);
  auto blk1 = [&](int u) { return block[static_cast<std::size_t>(u)]; };
  auto blk2 = [&](int v) { return block[static_cast<std::size_t>(v + na)]; };

  if (blk1(a.root) != blk2(b.root)) {
    out.equivalent = false;
    out.reason = "cores are not bisimilar at the roots";
    return out;
  }

  // matched-pair graph, for deciding where a cycle anchor makes sense
  std::set<std::pair<int, int>> pairSeen;
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> pairSuccs;
  {
    std::deque<std::pair<int, int>> q;
    auto push = [&](int u, int v) {
      if (pairSeen.insert({u, v}).second) q.push_back({u, v});
    };
    push(a.root, b.root);
    while (!q.empty()) {
      auto [u, v] = q.front();
      q.pop_front();
      auto& dst = pairSuccs[{u, v}];
      for (const auto& e1 : a.nodes[static_cast<std::size_t>(u)].out)
        for (const auto& e2 : b.nodes[static_cast<std::size_t>(v)].out)
          if (blk1(e1.target) == blk2(e2.target)) {
            dst.emplace_back(e1.target, e2.target);
            push(e1.target, e2.target);
          }
    }
  }
  // a pair can host a cycle iff it lies in a nontrivial strongly connected
  // component of the matched-pair graph (or loops on itself)
  std::set<std::pair<int, int>> cyclicPair;
  {
    std::map<std::pair<int, int>, int> idx, low;
    std::vector<std::pair<int, int>> stack;
    std::set<std::pair<int, int>> onstk;
    int counter = 0;
    std::function<void(std::pair<int, int>)> scc = [&](std::pair<int, int> p) {
      idx[p] = low[p] = counter++;
      stack.push_back(p);
      onstk.insert(p);
      for (const auto& q2 : pairSuccs[p]) {
        if (q2 == p) cyclicPair.insert(p);
        if (!idx.count(q2)) {
          scc(q2);
          low[p] = std::min(low[p], low[q2]);
        } else if (onstk.count(q2)) {
          low[p] = std::min(low[p], idx[q2]);
        }
      }
      if (low[p] == idx[p]) {
        std::vector<std::pair<int, int>> comp;
        for (;;) {
          auto q2 = stack.back();
          stack.pop_back();
          onstk.erase(q2);
          comp.push_back(q2);
          if (q2 == p) break;
        }
        if (comp.size() > 1)
          for (const auto& q2 : comp) cyclicPair.insert(q2);
      }
    };
    for (const auto& p : pairSeen)
      if (!idx.count(p)) scc(p);
  }

  std::vector<GameState> st;
  std::map<GameKey, int> ids;
  std::deque<int> workq;

  auto intern = [&](GameKey k) {
    auto it = ids.find(k);
    if (it != ids.end()) return it->second;
    if (st.size() >= lassoBound)
      throw BudgetError("equivalence game exceeds the lasso budget; raise MUFORGE_LASSO_BOUND");
    int id = static_cast<int>(st.size());
    GameState s;
    s.k = k;
    // returning to the anchor pair lets the challenger claim the lasso
    if (k.anchor >= 0 && k.side < 0) {
      const GameState& anc = st[static_cast<std::size_t>(k.anchor)];
      if (anc.k.u == k.u && anc.k.v == k.v &&
          !(k.m1 == identity_matrix(k.m1.rows) && k.m2 == identity_matrix(k.m2.rows))) {
        bool v1 = lasso_mu_trace_from_matrices(anc.k.m1, k.m1);
        bool v2 = lasso_mu_trace_from_matrices(anc.k.m2, k.m2);
        if (v1 != v2) {
          s.terminal = true;
          s.claim = true;
          s.v1 = v1;
          s.v2 = v2;
        }
      }
    }
    st.push_back(std::move(s));
    ids.emplace(std::move(k), id);
    workq.push_back(id);
    return id;
  };

  auto link = [&](int from, int to) {
    st[static_cast<std::size_t>(from)].succs.push_back(to);
    st[static_cast<std::size_t>(to)].preds.push_back(from);
  };

  {
    GameKey k0{a.root, b.root, -1, -1, -1, a.rootPrefix, b.rootPrefix};
    intern(std::move(k0));
  }

  while (!workq.empty()) {
    int id = workq.front();
    workq.pop_front();
    if (st[static_cast<std::size_t>(id)].terminal) continue;
    GameKey k = st[static_cast<std::size_t>(id)].k; // copy: st may grow
    if (k.side < 0) {
      // challenger: commit a step on either side, or anchor a cycle
      const auto& n1 = a.nodes[static_cast<std::size_t>(k.u)];
      const auto& n2 = b.nodes[static_cast<std::size_t>(k.v)];
      for (int e = 0; e < static_cast<int>(n1.out.size()); ++e) {
        GameKey h = k;
        h.side = 0;
        h.edge = e;
        link(id, intern(std::move(h)));
      }
      for (int e = 0; e < static_cast<int>(n2.out.size()); ++e) {
        GameKey h = k;
        h.side = 1;
        h.edge = e;
        link(id, intern(std::move(h)));
      }
      if (k.anchor < 0 && cyclicPair.count({k.u, k.v})) {
        GameKey c{k.u, k.v, id, -1, -1, identity_matrix(n1.slots), identity_matrix(n2.slots)};
        link(id, intern(std::move(c)));
      }
    } else {
      // defender: answer on the other side, staying inside the same block
      bool stepOnA = k.side == 0;
      const CoreEdge& stepped = stepOnA ? a.nodes[static_cast<std::size_t>(k.u)].out[static_cast<std::size_t>(k.edge)]
                                        : b.nodes[static_cast<std::size_t>(k.v)].out[static_cast<std::size_t>(k.edge)];
      int steppedBlock = stepOnA ? blk1(stepped.target) : blk2(stepped.target);
      const auto& answers = stepOnA ? b.nodes[static_cast<std::size_t>(k.v)].out
                                    : a.nodes[static_cast<std::size_t>(k.u)].out;
      bool any = false;
      for (const auto& ans : answers) {
        int ansBlock = stepOnA ? blk2(ans.target) : blk1(ans.target);
        if (ansBlock != steppedBlock) continue;
        any = true;
        GameKey nx;
        nx.anchor = k.anchor;
        nx.side = nx.edge = -1;
        if (stepOnA) {
          nx.u = stepped.target;
          nx.v = ans.target;
          nx.m1 = compose(k.m1, stepped.matrix);
          nx.m2 = compose(k.m2, ans.matrix);
        } else {
          nx.u = ans.target;
          nx.v = stepped.target;
          nx.m1 = compose(k.m1, ans.matrix);
          nx.m2 = compose(k.m2, stepped.matrix);
        }
        link(id, intern(std::move(nx)));
      }
      if (!any) st[static_cast<std::size_t>(id)].terminal = true; // defender stuck
    }
  }

  // challenger attractor to the terminals
  const std::size_t total = st.size();
  std::vector<char> attr(total, 0);
  std::vector<int> rank(total, -1), pendingAll(total, 0);
  std::deque<int> aq;
  for (std::size_t i = 0; i < total; ++i) {
    pendingAll[i] = static_cast<int>(st[i].succs.size());
    if (st[i].terminal) {
      attr[i] = 1;
      rank[i] = 0;
      aq.push_back(static_cast<int>(i));
    }
  }
  while (!aq.empty()) {
    int x = aq.front();
    aq.pop_front();
    for (int p : st[static_cast<std::size_t>(x)].preds) {
      auto up = static_cast<std::size_t>(p);
      if (attr[up]) continue;
      bool defender = st[up].k.side >= 0;
      bool pull = defender ? (--pendingAll[up] == 0) : true;
      if (pull) {
        attr[up] = 1;
        rank[up] = rank[static_cast<std::size_t>(x)] + 1;
        aq.push_back(p);
      }
    }
  }

  if (!attr[0]) {
    out.equivalent = true;
    return out;
  }

  // forced play: both players step to minimal rank inside the attractor
  out.equivalent = false;
  out.reason = "matched lassos disagree on the mu-trace verdict";
  LassoWitness w;
  int cur = 0;
  std::vector<int> fullStates;
  while (!st[static_cast<std::size_t>(cur)].terminal) {
    if (st[static_cast<std::size_t>(cur)].k.side < 0) fullStates.push_back(cur);
    int best = -1;
    for (int s : st[static_cast<std::size_t>(cur)].succs) {
      if (!attr[static_cast<std::size_t>(s)]) continue;
      if (best < 0 || rank[static_cast<std::size_t>(s)] < rank[static_cast<std::size_t>(best)]) best = s;
    }
    cur = best;
  }
  fullStates.push_back(cur);
  const GameState& claim = st[static_cast<std::size_t>(cur)];
  w.muTrace1 = claim.v1;
  w.muTrace2 = claim.v2;
  for (int s : fullStates) {
    const GameKey& k = st[static_cast<std::size_t>(s)].k;
    if (k.anchor < 0) {
      w.stem1.push_back(k.u);
      w.stem2.push_back(k.v);
    } else if (s != cur) {
      w.cycle1.push_back(k.u);
      w.cycle2.push_back(k.v);
    }
  }
  out.witness = std::move(w);
  return out;
}

CoreEquivVerdict tableau_equivalent(const FormulaRef& f, const FormulaRef& g,
                                    std::size_t lassoBound) {
  CoreGraph ca = extract_core(build_label_graph(f));
  CoreGraph cb = extract_core(build_label_graph(g));
  return core_equivalent(ca, cb, lassoBound);
}

} // namespace muforge
