#include "muforge/mc_game.hpp"

#include <deque>

#include "muforge/diagnostics.hpp"

namespace muforge {

namespace {

struct KeyLess {
  bool operator()(const McKey& a, const McKey& b) const {
    if (a.state != b.state) return a.state < b.state;
    if (a.tag != b.tag) return a.tag < b.tag;
    return compare(*a.formula, *b.formula) < 0;
  }
};

} // namespace

Arena build_mc_game(const Kripke& m, const FormulaRef& f, const PriorityAssignment& omega,
                    std::vector<McKey>* keyOut) {
  if (m.init < 0 || m.init >= static_cast<int>(m.states.size()))
    throw ValidationError("structure has no initial state");
  FormulaIndex index(f);

  // Neutral value for positions that must never dominate a cycle by
  // themselves: 0 when available, otherwise the least priority in use (a tie
  // with the cycle's real minimum cannot change the winner).
  int filler = 0;
  {
    bool usesZero = omega.entries.empty();
    int minUsed = -1;
    for (const auto& [x, p] : omega.entries) {
      if (p == 0) usesZero = true;
      if (minUsed < 0 || p < minUsed) minUsed = p;
    }
    filler = usesZero ? 0 : minUsed;
  }

  Arena arena;
  std::vector<McKey> keys;
  std::map<McKey, int, KeyLess> ids;
  std::deque<int> work;

  auto intern = [&](McKey k) {
    auto it = ids.find(k);
    if (it != ids.end()) return it->second;
    const auto& st = m.states[static_cast<std::size_t>(k.state)];
    int owner = 0, prio = filler;
    if (k.tag == McTag::Diamond) {
      // false at a dead end: there is no successor to name
      if (st.succs.empty()) prio = 1;
    } else {
      switch (k.formula->kind) {
      case FormulaKind::Top:
        prio = 0;
        break;
      case FormulaKind::Bottom:
        prio = 1;
        break;
      case FormulaKind::Prop:
        prio = st.props.count(k.formula->name) ? 0 : 1;
        break;
      case FormulaKind::NegProp:
        prio = st.props.count(k.formula->name) ? 1 : 0;
        break;
      case FormulaKind::Var:
        prio = omega.at(k.formula->name);
        break;
      case FormulaKind::And:
      case FormulaKind::Modal:
        owner = 1;
        // the empty member set is satisfied exactly by a dead end, where
        // this position has no moves at all
        if (k.formula->kind == FormulaKind::Modal && k.formula->family.empty() &&
            st.succs.empty())
          prio = 0;
        break;
      default:
        break; // Or and binders: even-owned filler
      }
    }
    int id = arena.add(owner, prio);
    ids.emplace(k, id);
    keys.push_back(std::move(k));
    work.push_back(id);
    return id;
  };

  intern({m.init, McTag::Plain, f});

  while (!work.empty()) {
    int id = work.front();
    work.pop_front();
    McKey k = keys[static_cast<std::size_t>(id)];
    const auto& st = m.states[static_cast<std::size_t>(k.state)];
    if (k.tag == McTag::Diamond) {
      for (int dst : st.succs) arena.add_edge(id, intern({dst, McTag::Plain, k.formula}));
      continue;
    }
    switch (k.formula->kind) {
    case FormulaKind::And:
    case FormulaKind::Or:
      arena.add_edge(id, intern({k.state, McTag::Plain, k.formula->lhs}));
      arena.add_edge(id, intern({k.state, McTag::Plain, k.formula->rhs}));
      break;
    case FormulaKind::Mu:
    case FormulaKind::Nu:
      arena.add_edge(id, intern({k.state, McTag::Plain, k.formula->body()}));
      break;
    case FormulaKind::Var:
      arena.add_edge(id, intern({k.state, McTag::Plain, index.body(k.formula->name)}));
      break;
    case FormulaKind::Modal: {
      // every successor must satisfy some member, every member must have a
      // witnessing successor
      FormulaRef carried = disj_of(k.formula->family);
      for (int dst : st.succs) arena.add_edge(id, intern({dst, McTag::Plain, carried}));
      for (const auto& psi : k.formula->family)
        arena.add_edge(id, intern({k.state, McTag::Diamond, psi}));
      break;
    }
    default:
      break; // settled literals are dead ends
    }
  }

  if (keyOut) *keyOut = std::move(keys);
  return arena;
}

bool models(const Kripke& m, const FormulaRef& f) {
  Arena a = build_mc_game(m, f, minimal_priority_assignment(f));
  return solve_parity(a).even_wins(0);
}

} // namespace muforge
