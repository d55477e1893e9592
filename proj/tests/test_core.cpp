#include "doctest.h"

#include <cstdlib>

#include "muforge/core_graph.hpp"
#include "muforge/corpus.hpp"
#include "muforge/diagnostics.hpp"
#include "muforge/label_graph.hpp"
#include "muforge/parse.hpp"

using namespace muforge;

TEST_SUITE("core") {

TEST_CASE("the core keeps only branching structure") {
  for (const auto& entry : corpus()) {
    CoreGraph c = extract_core(build_label_graph(entry.formula));
    CAPTURE(entry.name);
    for (const auto& n : c.nodes) {
      CHECK(n.kind != NodeKind::Unary);
      CHECK(n.slots > 0);
      for (const auto& e : n.out) {
        CHECK(e.target >= 0);
        CHECK(e.target < static_cast<int>(c.nodes.size()));
        CHECK(e.matrix.rows == n.slots);
        CHECK(e.matrix.cols == c.nodes[static_cast<std::size_t>(e.target)].slots);
      }
    }
    CHECK(c.rootPrefix.cols == c.nodes[static_cast<std::size_t>(c.root)].slots);
  }
}

TEST_CASE("the beta core is the six-way choice over its modal branches") {
  CoreGraph c = extract_core(build_label_graph(gen_beta()));
  CHECK(c.nodes.size() == 11);
  CHECK(c.nodes[static_cast<std::size_t>(c.root)].kind == NodeKind::Choice);
  CHECK(c.nodes[static_cast<std::size_t>(c.root)].out.size() == 6);
}

TEST_CASE("equivalence is reflexive on the corpus") {
  for (const auto& entry : corpus()) {
    CAPTURE(entry.name);
    auto v = tableau_equivalent(entry.formula, entry.formula);
    CHECK(v.equivalent);
  }
}

TEST_CASE("alpha and beta share a tableau") {
  auto v = tableau_equivalent(gen_alpha(), gen_beta());
  CHECK(v.equivalent);
  // and symmetrically
  CHECK(tableau_equivalent(gen_beta(), gen_alpha()).equivalent);
}

TEST_CASE("the simple pair shares a tableau") {
  auto [shaped, plain] = gen_simple_pair();
  CHECK(tableau_equivalent(shaped, plain).equivalent);
}

TEST_CASE("semantic equivalence is not tableau equivalence") {
  auto v = tableau_equivalent(parse_formula("p | ~p"), parse_formula("tt"));
  CHECK_FALSE(v.equivalent);
  CHECK_FALSE(v.reason.empty());
}

TEST_CASE("a parity clash yields a lasso witness") {
  // same cores, opposite trace parities on the loop
  auto muLoop = parse_formula("mu X. a & ->{X}");
  auto nuLoop = parse_formula("nu X. a & ->{X}");
  auto v = tableau_equivalent(muLoop, nuLoop);
  REQUIRE_FALSE(v.equivalent);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->muTrace1 != v.witness->muTrace2);
  CHECK_FALSE(v.witness->cycle1.empty());
  CHECK_FALSE(v.witness->cycle2.empty());
}

TEST_CASE("kind and literal mismatches are caught") {
  CHECK_FALSE(tableau_equivalent(parse_formula("a"), parse_formula("b")).equivalent);
  CHECK_FALSE(tableau_equivalent(parse_formula("a"), parse_formula("a | a & b")).equivalent);
  CHECK_FALSE(
      tableau_equivalent(parse_formula("->{a}"), parse_formula("->{a} | ->{}")).equivalent);
}

TEST_CASE("the lasso budget is enforced and the env var overrides the default") {
  CHECK_THROWS_AS(tableau_equivalent(gen_alpha(), gen_beta(), 1), BudgetError);

  setenv("MUFORGE_LASSO_BOUND", "1", 1);
  bool threw = false;
  try {
    tableau_equivalent(gen_alpha(), gen_beta());
  } catch (const BudgetError&) {
    threw = true;
  }
  unsetenv("MUFORGE_LASSO_BOUND");
  CHECK(threw);

  // an explicit bound beats the environment
  setenv("MUFORGE_LASSO_BOUND", "1", 1);
  bool ok = tableau_equivalent(gen_alpha(), gen_beta(), 2000000).equivalent;
  unsetenv("MUFORGE_LASSO_BOUND");
  CHECK(ok);
}

} // TEST_SUITE
