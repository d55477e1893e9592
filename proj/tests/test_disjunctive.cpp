#include "doctest.h"

#include <functional>

#include "muforge/assign.hpp"
#include "muforge/core_graph.hpp"
#include "muforge/corpus.hpp"
#include "muforge/disjunctive.hpp"
#include "muforge/label_graph.hpp"
#include "muforge/parse.hpp"
#include "muforge/print.hpp"
#include "muforge/priority.hpp"
#include "muforge/twb.hpp"
#include "muforge/witness.hpp"

using namespace muforge;

namespace {

FormulaRef djf_of(const FormulaRef& f) {
  Twb t = minimize_priorities(assign_node_priorities(build_label_graph(f)));
  return tree_to_disjunctive(reorder_decreasing(t));
}

bool decreasing_on_back_paths(Twb t) {
  validate_twb(t);
  bool ok = true;
  for (std::size_t v = 0; v < t.nodes.size(); ++v) {
    int target = t.nodes[v].back;
    if (target < 0) continue;
    int top = t.nodes[static_cast<std::size_t>(target)].prio;
    for (int x = static_cast<int>(v); x != target; x = t.nodes[static_cast<std::size_t>(x)].parent)
      ok = ok && t.nodes[static_cast<std::size_t>(x)].prio <= top;
  }
  return ok;
}

} // namespace

TEST_SUITE("disjunctive") {

TEST_CASE("shape recognition") {
  auto [shaped, plain] = gen_simple_pair();
  CHECK(is_disjunctive(shaped));
  CHECK_FALSE(is_disjunctive(plain));
  CHECK(is_disjunctive(gen_beta()));
  CHECK_FALSE(is_disjunctive(gen_alpha()));
  CHECK(is_disjunctive(parse_formula("a & ~b & ->{tt, c}")));
  CHECK_FALSE(is_disjunctive(parse_formula("->{a} & ->{b}")));
  CHECK_FALSE(is_disjunctive(parse_formula("a & (b | c)")));
  CHECK(is_disjunctive(parse_formula("mu X. a | ->{X}")));
}

TEST_CASE("trees of disjunctive formulas validate and loop through binders") {
  for (auto f : {gen_beta(), gen_simple_pair().first}) {
    Twb t = disjunctive_to_tree(f);
    validate_twb(t);
    bool sawBack = false;
    for (const auto& n : t.nodes) sawBack = sawBack || n.back >= 0;
    CHECK(sawBack);
    // binder priorities survive
    int maxPrio = 0;
    for (const auto& n : t.nodes) maxPrio = std::max(maxPrio, n.prio);
    CHECK(maxPrio == minimal_priority_assignment(f).codomainMax);
  }
}

TEST_CASE("reorder enforces dominance of back targets") {
  for (const auto& entry : corpus()) {
    Twb t = minimize_priorities(assign_node_priorities(build_label_graph(entry.formula)));
    Twb r = reorder_decreasing(t);
    CAPTURE(entry.name);
    CHECK(decreasing_on_back_paths(r));
  }
}

TEST_CASE("reading a tree back gives a disjunctive formula with the same tableau") {
  for (const auto& entry : corpus()) {
    if (!is_disjunctive(entry.formula)) continue;
    CAPTURE(entry.name);
    Twb t = disjunctive_to_tree(entry.formula);
    FormulaRef back = tree_to_disjunctive(reorder_decreasing(t));
    CHECK(is_disjunctive(back));
    CHECK(tableau_equivalent(entry.formula, back).equivalent);
    CHECK(minimal_priority_assignment(back).codomainMax ==
          minimal_priority_assignment(entry.formula).codomainMax);
  }
}

TEST_CASE("the pipeline representative shares the tableau of its source") {
  for (const auto& entry : corpus()) {
    CAPTURE(entry.name);
    FormulaRef d = djf_of(entry.formula);
    CHECK(is_disjunctive(d));
    CHECK(tableau_equivalent(entry.formula, d).equivalent);
  }
}

TEST_CASE("finite paths need no greatest fixpoints") {
  FormulaRef d = djf_of(gen_finite(gen_alpha()));
  CHECK(is_disjunctive(d));
  std::function<bool(const FormulaRef&)> hasNu = [&](const FormulaRef& f) {
    if (!f) return false;
    if (f->kind == FormulaKind::Nu) return true;
    if (hasNu(f->lhs) || hasNu(f->rhs)) return true;
    for (const auto& m : f->family)
      if (hasNu(m)) return true;
    return false;
  };
  CHECK_FALSE(hasNu(d));
}

TEST_CASE("satisfiability by game on the tree") {
  auto [shaped, plain] = gen_simple_pair();
  CHECK(disjunctive_sat(shaped));
  CHECK(disjunctive_sat(gen_beta()));
  CHECK_FALSE(disjunctive_sat(parse_formula("ff")));
  CHECK_FALSE(disjunctive_sat(parse_formula("a & ~a")));
  CHECK(disjunctive_sat(parse_formula("a & ~b")));
  CHECK_FALSE(disjunctive_sat(parse_formula("mu X. ->{X}")));
  CHECK(disjunctive_sat(parse_formula("nu X. ->{X}")));
  // unsatisfiable because alpha forces an infinite path
  CHECK_FALSE(disjunctive_sat(djf_of(gen_finite(gen_alpha()))));
  CHECK(disjunctive_sat(djf_of(gen_finite(top()))));
}

} // TEST_SUITE
