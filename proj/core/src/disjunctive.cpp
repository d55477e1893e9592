#include "muforge/disjunctive.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <utility>

#include "muforge/arena.hpp"
#include "muforge/diagnostics.hpp"
#include "muforge/priority.hpp"

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

FormulaRef literal_formula(const std::string& lit) {
  if (lit == "tt") return top();
  if (lit == "ff") return bottom();
  if (!lit.empty() && lit[0] == '~') return nprop(lit.substr(1));
  return prop(lit);
}

void flatten_or(const FormulaRef& f, std::vector<FormulaRef>& parts) {
  if (f->kind == FormulaKind::Or) {
    flatten_or(f->lhs, parts);
    flatten_or(f->rhs, parts);
  } else {
    parts.push_back(f);
  }
}

void flatten_and(const FormulaRef& f, std::vector<FormulaRef>& parts) {
  if (f->kind == FormulaKind::And) {
    flatten_and(f->lhs, parts);
    flatten_and(f->rhs, parts);
  } else {
    parts.push_back(f);
  }
}

std::vector<std::string> sorted_lits(const std::vector<FormulaRef>& conjuncts) {
  std::vector<std::string> lits;
  for (const auto& c : conjuncts)
    if (is_literal(c)) lits.push_back(literal_text(c));
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  return lits;
}

} // namespace

bool is_disjunctive(const FormulaRef& f) {
  switch (f->kind) {
  case FormulaKind::Top:
  case FormulaKind::Bottom:
  case FormulaKind::Prop:
  case FormulaKind::NegProp:
  case FormulaKind::Var:
    return true;
  case FormulaKind::Or:
    return is_disjunctive(f->lhs) && is_disjunctive(f->rhs);
  case FormulaKind::Mu:
  case FormulaKind::Nu:
    return is_disjunctive(f->body());
  case FormulaKind::Modal:
    for (const auto& m : f->family)
      if (!is_disjunctive(m)) return false;
    return true;
  case FormulaKind::And: {
    std::vector<FormulaRef> conjuncts;
    flatten_and(f, conjuncts);
    int modals = 0;
    for (const auto& c : conjuncts) {
      if (is_literal(c)) continue;
      if (c->kind != FormulaKind::Modal) return false;
      if (++modals > 1) return false;
      for (const auto& m : c->family)
        if (!is_disjunctive(m)) return false;
    }
    return true;
  }
  }
  return false;
}

Twb disjunctive_to_tree(const FormulaRef& f) {
  if (!is_disjunctive(f)) throw ValidationError("formula is not disjunctive");
  PriorityAssignment omega = minimal_priority_assignment(f); // validates too

  Twb t;
  auto emit = [&](NodeKind kind, std::vector<std::string> lits) {
    TwbNode n;
    n.kind = kind;
    n.lits = std::move(lits);
    t.nodes.push_back(std::move(n));
    return static_cast<int>(t.nodes.size()) - 1;
  };

  std::map<std::string, std::vector<int>> pendingSources;
  std::set<int> carriesBinder; // node already holds some binder's priority

  std::function<int(const FormulaRef&)> build = [&](const FormulaRef& g) -> int {
    switch (g->kind) {
    case FormulaKind::Top:
    case FormulaKind::Bottom:
    case FormulaKind::Prop:
    case FormulaKind::NegProp:
      return emit(NodeKind::Leaf, {literal_text(g)});
    case FormulaKind::Var: {
      int src = emit(NodeKind::Choice, {});
      pendingSources[g->name].push_back(src);
      return src;
    }
    case FormulaKind::Or: {
      std::vector<FormulaRef> parts;
      flatten_or(g, parts);
      std::vector<int> kids;
      kids.reserve(parts.size());
      for (const auto& p : parts) kids.push_back(build(p));
      int node = emit(NodeKind::Choice, {});
      t.nodes[node].children = std::move(kids);
      return node;
    }
    case FormulaKind::Modal: {
      std::vector<int> kids;
      kids.reserve(g->family.size());
      for (const auto& m : g->family) kids.push_back(build(m));
      int node = emit(NodeKind::Modal, {});
      t.nodes[node].children = std::move(kids);
      return node;
    }
    case FormulaKind::And: {
      std::vector<FormulaRef> conjuncts;
      flatten_and(g, conjuncts);
      FormulaRef mod;
      for (const auto& c : conjuncts)
        if (c->kind == FormulaKind::Modal) mod = c;
      if (!mod) return emit(NodeKind::Leaf, sorted_lits(conjuncts));
      std::vector<int> kids;
      kids.reserve(mod->family.size());
      for (const auto& m : mod->family) kids.push_back(build(m));
      int node = emit(NodeKind::Modal, sorted_lits(conjuncts));
      t.nodes[node].children = std::move(kids);
      return node;
    }
    case FormulaKind::Mu:
    case FormulaKind::Nu: {
      int body = build(g->body());
      auto it = pendingSources.find(g->name);
      std::vector<int> sources;
      if (it != pendingSources.end()) {
        sources = std::move(it->second);
        pendingSources.erase(it);
      }
      if (sources.empty()) return body; // nothing loops back, binder is inert
      int prio = omega.at(g->name);
      int target;
      if (t.nodes[body].kind == NodeKind::Modal && carriesBinder.count(body) == 0) {
        t.nodes[body].prio = prio;
        target = body;
      } else {
        target = emit(NodeKind::Choice, {});
        t.nodes[target].prio = prio;
        t.nodes[target].children = {body};
      }
      carriesBinder.insert(target);
      for (int s : sources) t.nodes[s].back = target;
      return target;
    }
    }
    throw ValidationError("unreachable formula kind");
  };

  t.root = build(f);
  validate_twb(t);
  return t;
}

Twb reorder_decreasing(const Twb& input, const ReorderOptions& opts) {
  Twb t = input;
  validate_twb(t);

  for (const auto& n : t.nodes)
    if (n.back >= 0 && !n.children.empty())
      throw ValidationError("node with a back edge must be childless");

  // Dominance class of a source: the highest priority on the tree path from
  // its target down to it, endpoints included.  That is the priority the
  // closed cycle must see, so it is the level the copy of the target has to
  // carry for the back edge to be legal in the output.
  std::vector<int> hookClass(t.nodes.size(), -1);
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    if (t.nodes[i].back < 0) continue;
    int m = 0;
    for (int v = static_cast<int>(i);; v = t.nodes[v].parent) {
      m = std::max(m, t.nodes[v].prio);
      if (v == t.nodes[i].back) break;
    }
    hookClass[i] = m;
  }

  Twb out;
  out.nodes.reserve(t.nodes.size());
  auto emit = [&](NodeKind kind, std::vector<std::string> lits, int prio) {
    if (out.nodes.size() >= opts.maxNodes)
      throw BudgetError("reorder exceeded " + std::to_string(opts.maxNodes) + " nodes");
    TwbNode n;
    n.kind = kind;
    n.lits = std::move(lits);
    n.prio = prio;
    out.nodes.push_back(std::move(n));
    return static_cast<int>(out.nodes.size()) - 1;
  };

  // reg maps (original node, class) to the ancestor copy of that node whose
  // subtree has stayed below the class since; copying any priority p kills
  // entries of lower class.  Passed by value so siblings do not interfere.
  using Reg = std::map<std::pair<int, int>, int>;

  std::function<int(int, int, Reg)> open = [&](int orig, int level, Reg reg) -> int {
    const TwbNode& on = t.nodes[orig];
    int u = emit(on.kind, on.lits, level);
    for (auto it = reg.begin(); it != reg.end();) {
      if (it->first.second < level)
        it = reg.erase(it);
      else
        ++it;
    }
    reg[{orig, level}] = u;
    std::vector<int> kids;
    kids.reserve(on.children.size());
    for (int c : on.children) {
      const TwbNode& cn = t.nodes[c];
      if (cn.back >= 0) {
        int w = hookClass[c];
        auto hit = reg.find({cn.back, w});
        if (hit != reg.end()) {
          int s = emit(cn.kind, cn.lits, w);
          out.nodes[s].back = hit->second;
          kids.push_back(s);
        } else {
          kids.push_back(open(cn.back, w, reg));
        }
      } else {
        kids.push_back(open(c, cn.prio, reg));
      }
    }
    out.nodes[u].children = std::move(kids);
    return u;
  };

  if (t.nodes[t.root].back >= 0) throw ValidationError("root cannot carry a back edge");
  out.root = open(t.root, t.nodes[t.root].prio, {});
  validate_twb(out);
  return out;
}

FormulaRef tree_to_disjunctive(const Twb& input) {
  Twb t = input;
  validate_twb(t);

  std::set<int> targets;
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const TwbNode& n = t.nodes[i];
    if (n.back < 0) continue;
    if (!n.children.empty())
      throw ValidationError("node with a back edge must be childless");
    int m = 0;
    for (int v = static_cast<int>(i);; v = t.nodes[v].parent) {
      m = std::max(m, t.nodes[v].prio);
      if (v == n.back) break;
    }
    if (m != t.nodes[n.back].prio)
      throw ValidationError("back edge at node " + std::to_string(i) +
                            " is dominated by priority " + std::to_string(m) +
                            ", not by its target");
    targets.insert(n.back);
  }

  auto var_name = [](int u) { return "X" + std::to_string(u); };

  std::function<FormulaRef(int)> emit = [&](int v) -> FormulaRef {
    const TwbNode& n = t.nodes[v];
    FormulaRef body;
    if (n.back >= 0) {
      body = var(var_name(n.back));
    } else {
      std::vector<FormulaRef> lits;
      lits.reserve(n.lits.size());
      for (const auto& l : n.lits) lits.push_back(literal_formula(l));
      switch (n.kind) {
      case NodeKind::Leaf:
        body = fold_and(lits);
        break;
      case NodeKind::Choice:
      case NodeKind::Unary: {
        std::vector<FormulaRef> parts;
        parts.reserve(n.children.size());
        for (int c : n.children) parts.push_back(emit(c));
        body = fold_or(parts);
        break;
      }
      case NodeKind::Modal: {
        std::vector<FormulaRef> members;
        members.reserve(n.children.size());
        for (int c : n.children) members.push_back(emit(c));
        lits.push_back(modal(members));
        body = fold_and(lits);
        break;
      }
      }
    }
    if (targets.count(v) != 0) {
      body = (t.nodes[v].prio % 2 == 1) ? mu(var_name(v), body)
                                        : nu(var_name(v), body);
    }
    return body;
  };

  FormulaRef result = emit(t.root);
  validate_or_throw(result);
  return result;
}

bool disjunctive_sat(const FormulaRef& f) {
  Twb t = disjunctive_to_tree(f);

  Arena a;
  std::vector<int> pos(t.nodes.size());
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const TwbNode& n = t.nodes[i];
    int owner = (n.kind == NodeKind::Modal) ? 1 : 0;
    int prio = n.prio;
    if (!literals_consistent(n.lits))
      prio = 1; // contradictory label loses for even on the spot
    else if (n.children.empty() && n.back < 0)
      // A dead-end leaf or modal is a satisfied end; a choice with nothing
      // to pick is an empty join, which is false.
      prio = (n.kind == NodeKind::Choice) ? 1 : 0;
    pos[i] = a.add(owner, prio);
  }
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const TwbNode& n = t.nodes[i];
    if (!literals_consistent(n.lits)) continue; // terminal, drop its moves
    for (int c : n.children) a.add_edge(pos[i], pos[c]);
    if (n.back >= 0) a.add_edge(pos[i], pos[n.back]);
  }

  return solve_parity(a).even_wins(pos[t.root]);
}

} // namespace muforge
