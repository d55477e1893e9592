#include "muforge/label_graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

#include "muforge/diagnostics.hpp"

namespace muforge {

namespace {

bool is_literal(const FormulaRef& f) {
  switch (f->kind) {
  case FormulaKind::Top:
  case FormulaKind::Bottom:
  case FormulaKind::Prop:
  case FormulaKind::NegProp:
    return true;
  default:
    return false;
  }
}

std::string literal_text(const FormulaRef& f) {
  switch (f->kind) {
  case FormulaKind::Top:
    return "tt";
  case FormulaKind::Bottom:
    return "ff";
  case FormulaKind::Prop:
    return f->name;
  default:
    return "~" + f->name;
  }
}

std::vector<FormulaRef> canon_label(std::vector<FormulaRef> fs) {
  std::sort(fs.begin(), fs.end(), FormulaLess{});
  fs.erase(std::unique(fs.begin(), fs.end(),
                       [](const FormulaRef& a, const FormulaRef& b) { return equal(a, b); }),
           fs.end());
  return fs;
}

// label is sorted; f must be a member
int slot_of(const std::vector<FormulaRef>& label, const FormulaRef& f) {
  auto it = std::lower_bound(label.begin(), label.end(), f, FormulaLess{});
  return static_cast<int>(it - label.begin());
}

struct LabelLess {
  bool operator()(const std::vector<FormulaRef>& a, const std::vector<FormulaRef>& b) const {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      int c = compare(*a[i], *b[i]);
      if (c != 0) return c < 0;
    }
    return a.size() < b.size();
  }
};

struct TracePair {
  FormulaRef src, dst;
  PrioritySet weight;
};

struct PendingChild {
  std::vector<FormulaRef> label;
  std::vector<TracePair> pairs;
};

FormulaRef least_of(const std::vector<FormulaRef>& fs) {
  return *std::min_element(fs.begin(), fs.end(), FormulaLess{});
}

} // namespace

std::vector<std::string> label_literals(const std::vector<FormulaRef>& label) {
  std::vector<std::string> lits;
  for (const auto& f : label)
    if (is_literal(f)) lits.push_back(literal_text(f));
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  return lits;
}

bool literals_consistent(const std::vector<std::string>& lits) {
  std::set<std::string> pos;
  for (const auto& l : lits) {
    if (l == "ff") return false;
    if (l[0] != '~') pos.insert(l);
  }
  for (const auto& l : lits)
    if (l[0] == '~' && pos.count(l.substr(1))) return false;
  return true;
}

const TraceMatrix& LabelGraph::edge(int src, int dst) const {
  auto it = edges.find({src, dst});
  if (it == edges.end())
    throw ValidationError("no edge " + std::to_string(src) + " -> " + std::to_string(dst));
  return it->second;
}

LabelGraph build_label_graph(const FormulaRef& f, const LabelGraphOptions& opts) {
  LabelGraph g;
  g.index = std::make_shared<FormulaIndex>(f); // rejects open or unguarded input
  g.omega = minimal_priority_assignment(f);

  std::map<std::vector<FormulaRef>, int, LabelLess> ids;
  std::deque<int> work;

  auto intern = [&](std::vector<FormulaRef> raw) {
    auto label = canon_label(std::move(raw));
    auto it = ids.find(label);
    if (it != ids.end()) return it->second;
    if (g.nodes.size() >= opts.maxNodes) throw BudgetError("label graph exceeds node budget");
    int id = static_cast<int>(g.nodes.size());
    LabelNode n;
    n.label = label;
    n.literals = label_literals(label);
    n.consistent = literals_consistent(n.literals);
    g.nodes.push_back(std::move(n));
    ids.emplace(std::move(label), id);
    work.push_back(id);
    return id;
  };

  g.root = intern({f});

  while (!work.empty()) {
    int id = work.front();
    work.pop_front();
    // copy: intern() below may reallocate g.nodes
    const std::vector<FormulaRef> label = g.nodes[id].label;

    if (!g.nodes[id].consistent) {
      g.nodes[id].kind = NodeKind::Leaf;
      continue;
    }

    std::vector<FormulaRef> binders, vars, ands, ors, modals;
    for (const auto& x : label) {
      switch (x->kind) {
      case FormulaKind::Mu:
      case FormulaKind::Nu:
        binders.push_back(x);
        break;
      case FormulaKind::Var:
        vars.push_back(x);
        break;
      case FormulaKind::And:
        ands.push_back(x);
        break;
      case FormulaKind::Or:
        ors.push_back(x);
        break;
      case FormulaKind::Modal:
        modals.push_back(x);
        break;
      default:
        break;
      }
    }

    auto rest_without = [&](const FormulaRef& pick) {
      std::vector<FormulaRef> rest;
      for (const auto& x : label)
        if (!equal(x, pick)) rest.push_back(x);
      return rest;
    };
    auto identity_pairs = [&](PendingChild& pc, const std::vector<FormulaRef>& rest) {
      for (const auto& x : rest) pc.pairs.push_back({x, x, priority_singleton(0)});
    };

    NodeKind kind = NodeKind::Leaf;
    std::vector<PendingChild> children;

    const bool andFirst = opts.order == RuleOrder::AndBeforeOr;
    const std::vector<FormulaRef>& firstBin = andFirst ? ands : ors;
    const std::vector<FormulaRef>& secondBin = andFirst ? ors : ands;

    if (!binders.empty()) {
      kind = NodeKind::Unary;
      FormulaRef pick = least_of(binders);
      auto rest = rest_without(pick);
      PendingChild pc;
      pc.label = rest;
      pc.label.push_back(pick->body());
      pc.pairs.push_back({pick, pick->body(), priority_singleton(0)});
      identity_pairs(pc, rest);
      children.push_back(std::move(pc));
    } else if (!vars.empty()) {
      kind = NodeKind::Unary;
      FormulaRef pick = least_of(vars);
      const FormulaRef& body = g.index->body(pick->name);
      auto rest = rest_without(pick);
      PendingChild pc;
      pc.label = rest;
      pc.label.push_back(body);
      pc.pairs.push_back({pick, body, priority_singleton(g.omega.at(pick->name))});
      identity_pairs(pc, rest);
      children.push_back(std::move(pc));
    } else if (!firstBin.empty() || !secondBin.empty()) {
      const auto& bin = !firstBin.empty() ? firstBin : secondBin;
      FormulaRef pick = least_of(bin);
      auto rest = rest_without(pick);
      if (pick->kind == FormulaKind::And) {
        kind = NodeKind::Unary;
        PendingChild pc;
        pc.label = rest;
        pc.label.push_back(pick->lhs);
        pc.label.push_back(pick->rhs);
        pc.pairs.push_back({pick, pick->lhs, priority_singleton(0)});
        pc.pairs.push_back({pick, pick->rhs, priority_singleton(0)});
        identity_pairs(pc, rest);
        children.push_back(std::move(pc));
      } else {
        kind = NodeKind::Choice;
        for (const FormulaRef& part : {pick->lhs, pick->rhs}) {
          PendingChild pc;
          pc.label = rest;
          pc.label.push_back(part);
          pc.pairs.push_back({pick, part, priority_singleton(0)});
          identity_pairs(pc, rest);
          children.push_back(std::move(pc));
        }
      }
    } else if (!modals.empty()) {
      // one child per asserted successor; sibling member sets travel along
      // as their disjunctions, literals stay behind
      kind = NodeKind::Modal;
      for (const auto& m : modals) {
        for (const auto& psi : m->family) {
          PendingChild pc;
          pc.label.push_back(psi);
          pc.pairs.push_back({m, psi, priority_singleton(0)});
          for (const auto& other : modals) {
            if (equal(other, m)) continue;
            FormulaRef carried = disj_of(other->family);
            pc.label.push_back(carried);
            pc.pairs.push_back({other, carried, priority_singleton(0)});
          }
          children.push_back(std::move(pc));
        }
      }
    } else {
      kind = NodeKind::Leaf;
    }

    g.nodes[id].kind = kind;

    for (auto& pc : children) {
      int dst = intern(pc.label);
      const auto& dstLabel = g.nodes[dst].label;
      TraceMatrix m(static_cast<int>(label.size()), static_cast<int>(dstLabel.size()));
      for (const auto& tp : pc.pairs)
        m.at(slot_of(label, tp.src), slot_of(dstLabel, tp.dst)) |= tp.weight;
      auto key = std::make_pair(id, dst);
      auto eit = g.edges.find(key);
      if (eit == g.edges.end()) {
        g.edges.emplace(key, std::move(m));
        g.nodes[id].succs.push_back(dst);
      } else {
        // same rule node reached along several instances: union the traces
        for (std::size_t i = 0; i < m.cells.size(); ++i) eit->second.cells[i] |= m.cells[i];
      }
    }
  }
  return g;
}

namespace {

constexpr PrioritySet kOddBits = 0xAAAAAAAAu;

}

bool lasso_mu_trace_from_matrices(const TraceMatrix& prefix, const TraceMatrix& loop) {
  if (loop.rows != loop.cols || prefix.cols != loop.rows)
    throw ValidationError("lasso matrices have mismatched shapes");

  // slots reachable at the cycle entry after the stem plus any number of laps
  std::vector<char> alive(static_cast<std::size_t>(loop.rows), 0);
  {
    TraceMatrix p = prefix;
    std::set<TraceMatrix> seen;
    while (seen.insert(p).second) {
      for (int r = 0; r < p.rows; ++r)
        for (int c = 0; c < p.cols; ++c)
          if (p.at(r, c)) alive[static_cast<std::size_t>(c)] = 1;
      p = compose(p, loop);
    }
  }
  {
    TraceMatrix q = loop;
    std::set<TraceMatrix> seen;
    while (seen.insert(q).second) {
      for (int f = 0; f < q.rows; ++f)
        if (alive[static_cast<std::size_t>(f)] && (q.at(f, f) & kOddBits)) return true;
      q = compose(q, loop);
    }
  }
  return false;
}

bool lasso_has_mu_trace(const LabelGraph& g, const std::vector<int>& stem,
                        const std::vector<int>& cycle) {
  if (stem.empty() || stem.front() != g.root)
    throw ValidationError("stem must start at the root");
  if (cycle.empty()) throw ValidationError("cycle must be nonempty");
  if (stem.back() != cycle.front())
    throw ValidationError("cycle must start where the stem ends");
  auto at = [&](int v) -> const LabelNode& {
    if (v < 0 || v >= static_cast<int>(g.nodes.size()))
      throw ValidationError("node id out of range: " + std::to_string(v));
    return g.nodes[static_cast<std::size_t>(v)];
  };
  TraceMatrix pre = identity_matrix(static_cast<int>(at(g.root).label.size()));
  for (std::size_t i = 1; i < stem.size(); ++i) pre = compose(pre, g.edge(stem[i - 1], stem[i]));
  TraceMatrix loop = identity_matrix(static_cast<int>(at(cycle.front()).label.size()));
  for (std::size_t i = 1; i < cycle.size(); ++i)
    loop = compose(loop, g.edge(cycle[i - 1], cycle[i]));
  loop = compose(loop, g.edge(cycle.back(), cycle.front()));
  return lasso_mu_trace_from_matrices(pre, loop);
}

} // namespace muforge
