#include "muforge/priority.hpp"

#include <algorithm>
#include <functional>

#include "muforge/diagnostics.hpp"

namespace muforge {

std::set<int> PriorityAssignment::codomain() const {
  std::set<int> out;
  for (int p = 0; p <= codomainMax; ++p) out.insert(p);
  return out;
}

int PriorityAssignment::at(const std::string& x) const {
  auto it = entries.find(x);
  if (it == entries.end()) throw ValidationError("no priority for variable: " + x);
  return it->second;
}

PriorityAssignment minimal_priority_assignment(const FormulaRef& f) {
  FormulaIndex idx(f);
  const auto& order = idx.binders();

  // Binders nested inside each binder's body, by name.
  std::map<std::string, std::set<std::string>> inner;
  for (const auto& x : order) {
    std::set<std::string> in;
    std::function<void(const FormulaRef&)> walk = [&](const FormulaRef& g) {
      switch (g->kind) {
      case FormulaKind::Mu:
      case FormulaKind::Nu:
        in.insert(g->name);
        walk(g->body());
        return;
      case FormulaKind::And:
      case FormulaKind::Or:
        walk(g->lhs);
        walk(g->rhs);
        return;
      case FormulaKind::Modal:
        for (const auto& m : g->family) walk(m);
        return;
      default:
        return;
      }
    };
    walk(idx.body(x));
    inner[x] = std::move(in);
  }

  PriorityAssignment pa;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::string& x = *it;
    int need = 0;
    for (const auto& y : inner[x])
      if (idx.free_in_body(x, y)) need = std::max(need, pa.entries[y]);
    bool odd = idx.is_mu(x);
    int v = need;
    if ((v % 2 != 0) != odd) ++v;
    pa.entries[x] = v;
  }

  // Drop unused levels above 0: removing level p shifts everything higher
  // down by 2, which keeps parities and the relative order.
  for (;;) {
    int maxv = 0;
    std::set<int> used;
    for (const auto& [x, v] : pa.entries) {
      used.insert(v);
      maxv = std::max(maxv, v);
    }
    int gap = -1;
    for (int p = 1; p <= maxv; ++p)
      if (used.count(p) == 0) {
        gap = p;
        break;
      }
    if (gap < 0) {
      pa.codomainMax = maxv;
      break;
    }
    for (auto& [x, v] : pa.entries)
      if (v > gap) v -= 2;
  }
  return pa;
}

bool is_alternation_free(const FormulaRef& f) {
  FormulaIndex idx(f);
  for (const auto& y : idx.binders())
    for (const auto& x : free_vars(idx.body(y))) {
      if (x == y || !idx.has_binder(x)) continue;
      if (idx.is_mu(x) != idx.is_mu(y)) return false;
    }
  return true;
}

} // namespace muforge
