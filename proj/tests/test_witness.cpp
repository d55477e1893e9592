#include "doctest.h"

#include <algorithm>
#include <set>

#include "muforge/assign.hpp"
#include "muforge/corpus.hpp"
#include "muforge/label_graph.hpp"
#include "muforge/twb.hpp"
#include "muforge/witness.hpp"

#include "oracles.hpp"

using namespace muforge;

namespace {

Twb minimized_tree(const FormulaRef& f) {
  return minimize_priorities(assign_node_priorities(build_label_graph(f)));
}

std::set<int> prio_set(const Twb& t) {
  std::set<int> out;
  for (const auto& n : t.nodes) out.insert(n.prio);
  return out;
}

// a 3-node loop with an inflated priority: reducible by one step
Twb inflated_loop() {
  Twb t;
  t.nodes.resize(3);
  t.nodes[0].kind = NodeKind::Choice;
  t.nodes[0].children = {1};
  t.nodes[1].kind = NodeKind::Choice;
  t.nodes[1].prio = 3;
  t.nodes[1].children = {2};
  t.nodes[2].kind = NodeKind::Choice;
  t.nodes[2].back = 0;
  validate_twb(t);
  return t;
}

} // namespace

TEST_SUITE("witness") {

TEST_CASE("corpus trees pin their maximal witnesses") {
  CHECK(find_max_witness(minimized_tree(gen_alpha())).q == 3);
  CHECK(find_max_witness(minimized_tree(gen_beta())).q == 3);
  auto [shaped, plain] = gen_simple_pair();
  CHECK(find_max_witness(minimized_tree(shaped)).q == 2);
  CHECK(find_max_witness(minimized_tree(plain)).q == 2);
  CHECK(find_max_witness(minimized_tree(gen_finite(gen_alpha()))).q == 1);
}

TEST_CASE("witness chains nest, alternate, and start odd") {
  Twb t = minimized_tree(gen_beta());
  WitnessReport rep = find_max_witness(t);
  REQUIRE(rep.q == 3);
  REQUIRE(rep.cycles.size() == 3);
  auto maxPrio = [&](const WitnessCycle& c) {
    int m = 0;
    for (int v : c.nodes) m = std::max(m, t.nodes[static_cast<std::size_t>(v)].prio);
    return m;
  };
  for (std::size_t i = 0; i < rep.cycles.size(); ++i) {
    CHECK(rep.cycles[i].parity == maxPrio(rep.cycles[i]) % 2);
    // c_1 is odd and the parity alternates outward
    CHECK(rep.cycles[i].parity == static_cast<int>(i + 1) % 2);
    // nesting as node sets
    if (i > 0) {
      std::set<int> inner(rep.cycles[i - 1].nodes.begin(), rep.cycles[i - 1].nodes.end());
      std::set<int> outer(rep.cycles[i].nodes.begin(), rep.cycles[i].nodes.end());
      CHECK(std::includes(outer.begin(), outer.end(), inner.begin(), inner.end()));
    }
  }
  // the walks are real: successive nodes are connected, and the walk closes
  for (const auto& c : rep.cycles) {
    REQUIRE_FALSE(c.nodes.empty());
    for (std::size_t i = 0; i + 1 < c.nodes.size(); ++i) {
      auto succ = twb_succs(t, c.nodes[i]);
      CHECK(std::count(succ.begin(), succ.end(), c.nodes[i + 1]) == 1);
    }
    auto last = twb_succs(t, c.nodes.back());
    CHECK(std::count(last.begin(), last.end(), c.nodes.front()) == 1);
  }
}

TEST_CASE("the beta tree cannot lose a priority") {
  Twb t = minimized_tree(gen_beta());
  CHECK(prio_set(t) == std::set<int>{0, 1, 2, 3});
  ReduceReport red = reduce_priorities(t);
  CHECK_FALSE(red.reducible);
  CHECK(red.note == "irreducible");
}

TEST_CASE("an inflated loop steps down") {
  Twb t = inflated_loop();
  CHECK(find_max_witness(t).q == 1);
  ReduceReport red = reduce_priorities(t);
  REQUIRE(red.reducible);
  std::set<int> lowered = prio_set(red.result);
  CHECK(lowered == std::set<int>{0, 1});
  CHECK(find_max_witness(red.result).q == 1);
  // and minimization reaches the same floor directly
  CHECK(prio_set(minimize_priorities(t)) == std::set<int>{0, 1});
}

TEST_CASE("minimization preserves cycle parities and is idempotent") {
  for (const auto& entry : corpus()) {
    Twb t = assign_node_priorities(build_label_graph(entry.formula));
    Twb m = minimize_priorities(t);
    CAPTURE(entry.name);
    CHECK(prio_set(m).size() <= prio_set(t).size());
    CHECK(print_twb(minimize_priorities(m)) == print_twb(m));
    CHECK(find_max_witness(m).q == find_max_witness(t).q);
  }
}

TEST_CASE("the engine matches the exhaustive chain search") {
  std::mt19937 rng(77);
  for (const auto& entry : corpus()) {
    Twb base = minimized_tree(entry.formula);
    if (base.nodes.size() <= 20) {
      CAPTURE(entry.name);
      CHECK(find_max_witness(base).q == oracles::brute_max_witness(base));
    }
    for (int i = 0; i < 12; ++i) {
      Twb variant = oracles::random_bisimilar_variant(rng, base, 3, 2000);
      if (variant.nodes.size() > 18) continue;
      CAPTURE(entry.name);
      CAPTURE(i);
      CHECK(find_max_witness(variant).q == oracles::brute_max_witness(variant));
    }
  }
}

TEST_CASE("witnesses survive bisimilar rewrites") {
  std::mt19937 rng(78);
  for (const auto& entry : corpus()) {
    Twb base = assign_node_priorities(build_label_graph(entry.formula));
    int q = find_max_witness(base).q;
    for (int i = 0; i < 20; ++i) {
      Twb variant = oracles::random_bisimilar_variant(rng, base, 4, 4000);
      CAPTURE(entry.name);
      CAPTURE(i);
      CHECK(find_max_witness(variant).q == q);
    }
  }
}

} // TEST_SUITE
