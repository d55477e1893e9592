#include "doctest.h"

#include <set>

#include "muforge/corpus.hpp"
#include "muforge/diagnostics.hpp"
#include "muforge/label_graph.hpp"
#include "muforge/parse.hpp"
#include "muforge/print.hpp"
#include "muforge/priority.hpp"

using namespace muforge;

TEST_SUITE("label_graph") {

TEST_CASE("nodes are unique per label and edges connect them") {
  LabelGraph g = build_label_graph(gen_beta());
  std::set<std::vector<std::string>> seen;
  for (const auto& n : g.nodes) {
    std::vector<std::string> key;
    for (const auto& f : n.label) key.push_back(print_formula(f));
    CHECK(seen.insert(key).second);
  }
  for (const auto& [key, m] : g.edges) {
    const auto& src = g.nodes[static_cast<std::size_t>(key.first)];
    const auto& dst = g.nodes[static_cast<std::size_t>(key.second)];
    CHECK(m.rows == static_cast<int>(src.label.size()));
    CHECK(m.cols == static_cast<int>(dst.label.size()));
  }
  // some pair is unconnected in any graph with more nodes than edges allow
  int missingSrc = -1, missingDst = -1;
  for (int i = 0; i < static_cast<int>(g.nodes.size()) && missingSrc < 0; ++i)
    for (int j = 0; j < static_cast<int>(g.nodes.size()); ++j)
      if (!g.edges.count({i, j})) {
        missingSrc = i;
        missingDst = j;
        break;
      }
  REQUIRE(missingSrc >= 0);
  CHECK_THROWS_AS(g.edge(missingSrc, missingDst), ValidationError);
}

TEST_CASE("the root holds the whole formula") {
  LabelGraph g = build_label_graph(gen_alpha());
  REQUIRE(g.nodes[static_cast<std::size_t>(g.root)].label.size() == 1);
  CHECK(equal(g.nodes[static_cast<std::size_t>(g.root)].label[0], gen_alpha()));
}

TEST_CASE("regeneration closes cycles instead of growing the graph") {
  // nu X. ->{X} loops between its modal node and the regenerated variable
  LabelGraph g = build_label_graph(parse_formula("nu X. ->{X}"));
  CHECK(g.nodes.size() == 3);
  // three edges on three nodes force a cycle
  CHECK(g.edges.size() == 3);
}

TEST_CASE("labels carry literals and spot contradictions") {
  LabelGraph g = build_label_graph(parse_formula("a & ~a & ->{tt}"));
  bool sawInconsistent = false;
  for (const auto& n : g.nodes)
    if (!n.consistent) {
      sawInconsistent = true;
      CHECK(n.succs.empty());
    }
  CHECK(sawInconsistent);
}

TEST_CASE("modal nodes fan out per member and literal leaves stop") {
  auto [shaped, plain] = gen_simple_pair();
  LabelGraph g = build_label_graph(shaped);
  int modals = 0;
  for (const auto& n : g.nodes)
    if (n.kind == NodeKind::Modal) {
      ++modals;
      CHECK_FALSE(n.succs.empty());
    }
  CHECK(modals > 0);
}

TEST_CASE("rule order only permutes the graph") {
  for (const auto& entry : corpus()) {
    LabelGraphOptions andFirst;
    LabelGraphOptions orFirst;
    orFirst.order = RuleOrder::OrBeforeAnd;
    LabelGraph a = build_label_graph(entry.formula, andFirst);
    LabelGraph b = build_label_graph(entry.formula, orFirst);
    CAPTURE(entry.name);
    CHECK(a.nodes.size() == b.nodes.size());
    CHECK(a.edges.size() == b.edges.size());
  }
}

TEST_CASE("node budget is enforced") {
  LabelGraphOptions opts;
  opts.maxNodes = 3;
  CHECK_THROWS_AS(build_label_graph(gen_beta(), opts), BudgetError);
}

TEST_CASE("weights come from the minimal assignment") {
  LabelGraph g = build_label_graph(gen_beta());
  CHECK(g.omega.codomain() == std::set<int>{0, 1, 2, 3});
  // every weight used on some edge is a priority of that assignment
  PrioritySet used = 0;
  for (const auto& [key, m] : g.edges)
    for (PrioritySet c : m.cells) used |= c;
  for (int w = 0; w < 32; ++w)
    if (used >> w & 1u) CHECK(w <= g.omega.codomainMax);
  CHECK((used & ~priority_singleton(0)) != 0); // some positive weight exists
}

TEST_CASE("lasso endpoints are validated") {
  LabelGraph g = build_label_graph(gen_alpha());
  CHECK_THROWS_AS(lasso_has_mu_trace(g, {}, {g.root}), ValidationError);
  int child = g.nodes[static_cast<std::size_t>(g.root)].succs.at(0);
  CHECK_THROWS_AS(lasso_has_mu_trace(g, {child}, {child}), ValidationError);
  CHECK_THROWS_AS(lasso_has_mu_trace(g, {g.root}, {child}), ValidationError);
}

} // TEST_SUITE
