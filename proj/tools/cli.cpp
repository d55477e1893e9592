#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "muforge/assign.hpp"
#include "muforge/core_graph.hpp"
#include "muforge/corpus.hpp"
#include "muforge/diagnostics.hpp"
#include "muforge/disjunctive.hpp"
#include "muforge/dot.hpp"
#include "muforge/kripke.hpp"
#include "muforge/label_graph.hpp"
#include "muforge/mc_game.hpp"
#include "muforge/parse.hpp"
#include "muforge/print.hpp"
#include "muforge/priority.hpp"
#include "muforge/twb.hpp"
#include "muforge/witness.hpp"

namespace muforge {

namespace {

using nlohmann::json;

// thrown after the diagnostic is already on err
struct CliFailure {
  int code;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CLI::ValidationError("input", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

[[noreturn]] void report_parse_error(std::ostream& err, const std::string& path,
                                     const std::string& text, const ParseError& e) {
  err << path << ":" << e.line << ":" << e.col << ": " << e.what() << "\n";
  std::size_t start = 0;
  for (std::size_t i = 0; i < e.offset && i < text.size(); ++i)
    if (text[i] == '\n') start = i + 1;
  std::size_t end = text.find('\n', start);
  if (end == std::string::npos) end = text.size();
  err << "  " << text.substr(start, end - start) << "\n";
  err << "  " << std::string(e.col > 0 ? e.col - 1 : 0, ' ') << "^\n";
  throw CliFailure{3};
}

FormulaRef load_formula(const std::string& path, std::ostream& err) {
  std::string text = slurp(path);
  try {
    return parse_formula(text);
  } catch (const ParseError& e) {
    report_parse_error(err, path, text, e);
  }
}

Twb load_twb(const std::string& path, std::ostream& err) {
  std::string text = slurp(path);
  try {
    return parse_twb(text);
  } catch (const ParseError& e) {
    report_parse_error(err, path, text, e);
  }
}

Kripke load_kripke(const std::string& path, std::ostream& err) {
  std::string text = slurp(path);
  try {
    return parse_kripke(text);
  } catch (const ParseError& e) {
    report_parse_error(err, path, text, e);
  }
}

const char* kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::Unary: return "unary";
    case NodeKind::Choice: return "choice";
    case NodeKind::Modal: return "modal";
    case NodeKind::Leaf: return "leaf";
  }
  return "?";
}

template <typename T>
std::string join(const std::vector<T>& xs, const char* sep = ",") {
  std::ostringstream ss;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) ss << sep;
    ss << xs[i];
  }
  return ss.str();
}

json assignment_json(const PriorityAssignment& omega) {
  json entries = json::object();
  for (const auto& [name, v] : omega.entries) entries[name] = v;
  return json{{"assignment", entries},
              {"codomain", omega.codomain()},
              {"codomainMax", omega.codomainMax}};
}

std::string codomain_text(const PriorityAssignment& omega) {
  std::ostringstream ss;
  ss << "{";
  bool first = true;
  for (int v : omega.codomain()) {
    if (!first) ss << ",";
    first = false;
    ss << v;
  }
  ss << "}";
  return ss.str();
}

// the full route from a formula to its disjunctive representative
FormulaRef djf_pipeline(const FormulaRef& f) {
  LabelGraph g = build_label_graph(f);
  Twb t = assign_node_priorities(g);
  t = minimize_priorities(t);
  Twb ordered = reorder_decreasing(t);
  return tree_to_disjunctive(ordered);
}

// explicit step-by-step thread enumeration, the cross-check for the matrix
// verdict: walk the lasso's unrolling and look for a thread returning to its
// entry slot at a lap boundary with an odd running maximum
bool lasso_verdict_by_enumeration(const LabelGraph& g, const std::vector<int>& stem,
                                  const std::vector<int>& cycle, int unroll) {
  std::vector<TraceMatrix> stemE, cycleE;
  for (std::size_t i = 1; i < stem.size(); ++i) stemE.push_back(g.edge(stem[i - 1], stem[i]));
  for (std::size_t i = 1; i < cycle.size(); ++i) cycleE.push_back(g.edge(cycle[i - 1], cycle[i]));
  cycleE.push_back(g.edge(cycle.back(), cycle.front()));

  auto step = [](const std::vector<char>& cur, const TraceMatrix& m) {
    std::vector<char> nxt(static_cast<std::size_t>(m.cols), 0);
    for (int r = 0; r < m.rows; ++r)
      if (cur[static_cast<std::size_t>(r)])
        for (int c = 0; c < m.cols; ++c)
          if (m.at(r, c)) nxt[static_cast<std::size_t>(c)] = 1;
    return nxt;
  };
  int entrySlots = cycleE.front().rows;
  std::vector<char> live(
      static_cast<std::size_t>(stemE.empty() ? entrySlots : stemE.front().rows), 1);
  for (const auto& m : stemE) live = step(live, m);
  std::vector<char> alive = live;
  for (int lap = 1; lap <= unroll; ++lap) {
    for (const auto& m : cycleE) live = step(live, m);
    for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = alive[i] || live[i];
  }

  int edges = static_cast<int>(cycleE.size());
  int total = unroll * edges;
  for (int anchor = 0; anchor < entrySlots; ++anchor) {
    if (!alive[static_cast<std::size_t>(anchor)]) continue;
    auto key = [&](int t, int slot, int mw) {
      return (static_cast<std::size_t>(t) * 64 + static_cast<std::size_t>(slot)) * 34 +
             static_cast<std::size_t>(mw + 1);
    };
    std::vector<char> seen(static_cast<std::size_t>(total + 1) * 64 * 34, 0);
    std::vector<std::array<int, 3>> work{{0, anchor, -1}};
    seen[key(0, anchor, -1)] = 1;
    while (!work.empty()) {
      auto [t, slot, mw] = work.back();
      work.pop_back();
      if (t > 0 && t % edges == 0 && slot == anchor && mw >= 0 && mw % 2 == 1) return true;
      if (t == total) continue;
      const TraceMatrix& m = cycleE[static_cast<std::size_t>(t % edges)];
      for (int c = 0; c < m.cols; ++c) {
        PrioritySet bits = m.at(slot, c);
        for (int w = 0; w < 32; ++w) {
          if (!(bits >> w & 1u)) continue;
          int nm = std::max(mw, w);
          if (!seen[key(t + 1, c, nm)]) {
            seen[key(t + 1, c, nm)] = 1;
            work.push_back({t + 1, c, nm});
          }
        }
      }
    }
  }
  return false;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"tableau toolkit for the modal mu-calculus"};
  app.name("muforge");
  app.require_subcommand(1);
  int rc = 0;

  // parse
  struct {
    std::string file;
    bool json = false;
  } parseOpt;
  auto* cmdParse = app.add_subcommand("parse", "parse a formula and print its canonical form");
  cmdParse->add_option("file", parseOpt.file, "formula file, - for stdin")->required();
  cmdParse->add_flag("--json", parseOpt.json, "JSON-lines output");
  cmdParse->callback([&] {
    FormulaRef f = load_formula(parseOpt.file, err);
    if (parseOpt.json)
      out << json{{"cmd", "parse"}, {"formula", print_formula(f)}}.dump() << "\n";
    else
      out << print_formula(f) << "\n";
  });

  // depth
  struct {
    std::string file;
    bool json = false;
  } depthOpt;
  auto* cmdDepth = app.add_subcommand("depth", "minimal priority assignment of a formula");
  cmdDepth->add_option("file", depthOpt.file, "formula file, - for stdin")->required();
  cmdDepth->add_flag("--json", depthOpt.json, "JSON-lines output");
  cmdDepth->callback([&] {
    FormulaRef f = load_formula(depthOpt.file, err);
    PriorityAssignment omega = minimal_priority_assignment(f);
    bool af = is_alternation_free(f);
    if (depthOpt.json) {
      json j = assignment_json(omega);
      j["cmd"] = "depth";
      j["alternationFree"] = af;
      out << j.dump() << "\n";
    } else {
      for (const auto& [name, v] : omega.entries) out << name << " -> " << v << "\n";
      out << "co-domain " << codomain_text(omega) << "\n";
      if (af) out << "alternation free\n";
    }
  });

  // graph
  struct {
    std::string file;
    bool json = false, dot = false, orFirst = false;
    std::size_t maxNodes = 100000;
  } graphOpt;
  auto* cmdGraph = app.add_subcommand("graph", "label graph of a formula's tableau");
  cmdGraph->add_option("file", graphOpt.file, "formula file, - for stdin")->required();
  cmdGraph->add_flag("--dot", graphOpt.dot, "emit graphviz");
  cmdGraph->add_flag("--or-first", graphOpt.orFirst, "apply the disjunction rule before conjunction");
  cmdGraph->add_option("--max-nodes", graphOpt.maxNodes, "node budget");
  cmdGraph->add_flag("--json", graphOpt.json, "JSON-lines output");
  cmdGraph->callback([&] {
    FormulaRef f = load_formula(graphOpt.file, err);
    LabelGraphOptions opts;
    opts.maxNodes = graphOpt.maxNodes;
    if (graphOpt.orFirst) opts.order = RuleOrder::OrBeforeAnd;
    LabelGraph g = build_label_graph(f, opts);
    if (graphOpt.dot) {
      out << export_dot(g);
      return;
    }
    if (graphOpt.json) {
      json nodes = json::array();
      for (const auto& n : g.nodes)
        nodes.push_back({{"kind", kind_name(n.kind)},
                         {"literals", n.literals},
                         {"consistent", n.consistent},
                         {"succs", n.succs}});
      json edges = json::array();
      for (const auto& [key, m] : g.edges)
        edges.push_back({{"src", key.first}, {"dst", key.second}});
      out << json{{"cmd", "graph"}, {"root", g.root}, {"nodes", nodes}, {"edges", edges}}.dump()
          << "\n";
      return;
    }
    out << "nodes " << g.nodes.size() << " edges " << g.edges.size() << " root " << g.root << "\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      const auto& n = g.nodes[i];
      out << i << " " << kind_name(n.kind);
      if (!n.consistent) out << "!";
      if (!n.literals.empty()) out << " lits=" << join(n.literals);
      if (!n.succs.empty()) out << " succs=" << join(n.succs);
      out << "\n";
    }
  });

  // core
  struct {
    std::string file;
    bool json = false, dot = false;
  } coreOpt;
  auto* cmdCore = app.add_subcommand("core", "branching core of a formula's tableau");
  cmdCore->add_option("file", coreOpt.file, "formula file, - for stdin")->required();
  cmdCore->add_flag("--dot", coreOpt.dot, "emit graphviz");
  cmdCore->add_flag("--json", coreOpt.json, "JSON-lines output");
  cmdCore->callback([&] {
    FormulaRef f = load_formula(coreOpt.file, err);
    CoreGraph c = extract_core(build_label_graph(f));
    if (coreOpt.dot) {
      out << export_dot(c);
      return;
    }
    if (coreOpt.json) {
      json nodes = json::array();
      for (const auto& n : c.nodes) {
        std::vector<int> succs;
        for (const auto& e : n.out) succs.push_back(e.target);
        nodes.push_back({{"kind", kind_name(n.kind)},
                         {"literals", n.literals},
                         {"consistent", n.consistent},
                         {"label", n.label},
                         {"succs", succs}});
      }
      out << json{{"cmd", "core"}, {"root", c.root}, {"nodes", nodes}}.dump() << "\n";
      return;
    }
    out << "nodes " << c.nodes.size() << " root " << c.root << "\n";
    for (std::size_t i = 0; i < c.nodes.size(); ++i) {
      const auto& n = c.nodes[i];
      out << i << " " << kind_name(n.kind);
      if (!n.consistent) out << "!";
      if (!n.literals.empty()) out << " lits=" << join(n.literals);
      std::vector<int> succs;
      for (const auto& e : n.out) succs.push_back(e.target);
      if (!succs.empty()) out << " succs=" << join(succs);
      out << "  # " << n.label << "\n";
    }
  });

  // equiv
  struct {
    std::string file1, file2;
    std::size_t bound = 0;
    bool json = false;
  } equivOpt;
  auto* cmdEquiv = app.add_subcommand("equiv", "decide tableau equivalence of two formulas");
  cmdEquiv->add_option("file1", equivOpt.file1, "first formula file")->required();
  cmdEquiv->add_option("file2", equivOpt.file2, "second formula file")->required();
  cmdEquiv->add_option("--bound", equivOpt.bound, "lasso state budget, 0 for the default");
  cmdEquiv->add_flag("--json", equivOpt.json, "JSON-lines output");
  cmdEquiv->callback([&] {
    FormulaRef f = load_formula(equivOpt.file1, err);
    FormulaRef g = load_formula(equivOpt.file2, err);
    CoreEquivVerdict v = tableau_equivalent(f, g, equivOpt.bound);
    if (equivOpt.json) {
      json j{{"cmd", "equiv"}, {"equivalent", v.equivalent}, {"reason", v.reason}};
      if (v.witness) {
        j["witness"] = {{"stem1", v.witness->stem1},   {"cycle1", v.witness->cycle1},
                        {"stem2", v.witness->stem2},   {"cycle2", v.witness->cycle2},
                        {"muTrace1", v.witness->muTrace1}, {"muTrace2", v.witness->muTrace2}};
      }
      out << j.dump() << "\n";
    } else if (v.equivalent) {
      out << "equivalent\n";
    } else {
      out << "not equivalent: " << v.reason << "\n";
      if (v.witness) {
        out << "  lasso 1: stem " << join(v.witness->stem1) << " cycle " << join(v.witness->cycle1)
            << " mu-trace " << (v.witness->muTrace1 ? "yes" : "no") << "\n";
        out << "  lasso 2: stem " << join(v.witness->stem2) << " cycle " << join(v.witness->cycle2)
            << " mu-trace " << (v.witness->muTrace2 ? "yes" : "no") << "\n";
      }
    }
    rc = v.equivalent ? 0 : 1;
  });

  // tree
  struct {
    std::string file;
    bool json = false;
    std::size_t maxCopies = 64;
  } treeOpt;
  auto* cmdTree = app.add_subcommand("tree", "tableau as a tree with back edges, priorities assigned");
  cmdTree->add_option("file", treeOpt.file, "formula file, - for stdin")->required();
  cmdTree->add_option("--max-copies", treeOpt.maxCopies, "per-node unfolding budget");
  cmdTree->add_flag("--json", treeOpt.json, "JSON-lines output");
  cmdTree->callback([&] {
    FormulaRef f = load_formula(treeOpt.file, err);
    AssignOptions opts;
    opts.maxCopiesPerNode = treeOpt.maxCopies;
    Twb t = assign_node_priorities(build_label_graph(f), opts);
    if (treeOpt.json)
      out << json{{"cmd", "tree"}, {"nodes", t.nodes.size()}, {"tree", print_twb(t)}}.dump()
          << "\n";
    else
      out << print_twb(t);
  });

  // minimize
  struct {
    std::string file;
    bool json = false;
  } minOpt;
  auto* cmdMin = app.add_subcommand("minimize", "reassign tree priorities over a least co-domain");
  cmdMin->add_option("file", minOpt.file, "tree file, - for stdin")->required();
  cmdMin->add_flag("--json", minOpt.json, "JSON-lines output");
  cmdMin->callback([&] {
    Twb t = load_twb(minOpt.file, err);
    Twb m = minimize_priorities(t);
    if (minOpt.json)
      out << json{{"cmd", "minimize"}, {"nodes", m.nodes.size()}, {"tree", print_twb(m)}}.dump()
          << "\n";
    else
      out << print_twb(m);
  });

  // witness
  struct {
    std::string file;
    bool json = false;
  } witOpt;
  auto* cmdWit = app.add_subcommand("witness", "largest nested cycle witness of a tree");
  cmdWit->add_option("file", witOpt.file, "tree file, - for stdin")->required();
  cmdWit->add_flag("--json", witOpt.json, "JSON-lines output");
  cmdWit->callback([&] {
    Twb t = load_twb(witOpt.file, err);
    WitnessReport rep = find_max_witness(t);
    ReduceReport red = reduce_priorities(t);
    if (witOpt.json) {
      json cycles = json::array();
      for (const auto& c : rep.cycles) cycles.push_back({{"parity", c.parity}, {"nodes", c.nodes}});
      out << json{{"cmd", "witness"},
                  {"q", rep.q},
                  {"cycles", cycles},
                  {"reducible", red.reducible},
                  {"note", red.note}}
                 .dump()
          << "\n";
    } else {
      out << "q = " << rep.q << "\n";
      for (std::size_t i = 0; i < rep.cycles.size(); ++i)
        out << "  c" << i + 1 << " " << (rep.cycles[i].parity % 2 ? "odd" : "even") << ": "
            << join(rep.cycles[i].nodes, " ") << "\n";
      out << "reduction: " << (red.reducible ? "lowered" : red.note) << "\n";
    }
  });

  // djf
  struct {
    std::string file;
    bool json = false;
  } djfOpt;
  auto* cmdDjf = app.add_subcommand("djf", "disjunctive representative of a formula's tableau");
  cmdDjf->add_option("file", djfOpt.file, "formula file, - for stdin")->required();
  cmdDjf->add_flag("--json", djfOpt.json, "JSON-lines output");
  cmdDjf->callback([&] {
    FormulaRef f = load_formula(djfOpt.file, err);
    FormulaRef d = djf_pipeline(f);
    if (djfOpt.json)
      out << json{{"cmd", "djf"},
                  {"formula", print_formula(d)},
                  {"disjunctive", is_disjunctive(d)}}
                 .dump()
          << "\n";
    else
      out << print_formula(d) << "\n";
  });

  // sat
  struct {
    std::string file;
    bool json = false;
  } satOpt;
  auto* cmdSat = app.add_subcommand("sat", "satisfiability via the disjunctive form");
  cmdSat->add_option("file", satOpt.file, "formula file, - for stdin")->required();
  cmdSat->add_flag("--json", satOpt.json, "JSON-lines output");
  cmdSat->callback([&] {
    FormulaRef f = load_formula(satOpt.file, err);
    FormulaRef d = is_disjunctive(f) ? f : djf_pipeline(f);
    bool sat = disjunctive_sat(d);
    if (satOpt.json)
      out << json{{"cmd", "sat"}, {"satisfiable", sat}}.dump() << "\n";
    else
      out << (sat ? "satisfiable" : "unsatisfiable") << "\n";
    rc = sat ? 0 : 1;
  });

  // mc
  struct {
    std::string structureFile, formulaFile;
    bool json = false;
  } mcOpt;
  auto* cmdMc = app.add_subcommand("mc", "model check a formula on a pointed structure");
  cmdMc->add_option("structure", mcOpt.structureFile, "structure file")->required();
  cmdMc->add_option("formula", mcOpt.formulaFile, "formula file")->required();
  cmdMc->add_flag("--json", mcOpt.json, "JSON-lines output");
  cmdMc->callback([&] {
    Kripke m = load_kripke(mcOpt.structureFile, err);
    FormulaRef f = load_formula(mcOpt.formulaFile, err);
    bool sat = models(m, f);
    if (mcOpt.json)
      out << json{{"cmd", "mc"}, {"models", sat}}.dump() << "\n";
    else
      out << (sat ? "true" : "false") << "\n";
    rc = sat ? 0 : 1;
  });

  // gen
  struct {
    bool json = false;
    int n = 1;
    std::string psi;
  } genOpt;
  auto* cmdGen = app.add_subcommand("gen", "print a corpus formula");
  cmdGen->require_subcommand(1);
  auto emitGen = [&](const std::string& name, std::vector<FormulaRef> fs) {
    if (genOpt.json) {
      std::vector<std::string> texts;
      for (const auto& f : fs) texts.push_back(print_formula(f));
      out << json{{"cmd", "gen"}, {"name", name}, {"formulas", texts}}.dump() << "\n";
    } else {
      for (const auto& f : fs) out << print_formula(f) << "\n";
    }
  };
  auto* genSimple = cmdGen->add_subcommand("simple", "the one-alternation pair, disjunctive first");
  genSimple->add_flag("--json", genOpt.json, "JSON-lines output");
  genSimple->callback([&] {
    auto [shaped, plain] = gen_simple_pair();
    emitGen("simple", {shaped, plain});
  });
  auto* genAlpha = cmdGen->add_subcommand("alpha", "the two-pair choice formula");
  genAlpha->add_flag("--json", genOpt.json, "JSON-lines output");
  genAlpha->callback([&] { emitGen("alpha", {gen_alpha()}); });
  auto* genBeta = cmdGen->add_subcommand("beta", "alpha flattened into one binder chain");
  genBeta->add_flag("--json", genOpt.json, "JSON-lines output");
  genBeta->callback([&] { emitGen("beta", {gen_beta()}); });
  auto* genAlphaN = cmdGen->add_subcommand("alpha-n", "the n-level choice family");
  genAlphaN->add_option("--n", genOpt.n, "levels")->required()->check(CLI::Range(1, 4));
  genAlphaN->add_flag("--json", genOpt.json, "JSON-lines output");
  genAlphaN->callback([&] { emitGen("alpha-n", {gen_alpha_n(genOpt.n)}); });
  auto* genFinite = cmdGen->add_subcommand("finite", "psi on finite paths only");
  genFinite->add_option("--psi", genOpt.psi, "formula file for psi")->required();
  genFinite->add_flag("--json", genOpt.json, "JSON-lines output");
  genFinite->callback([&] {
    FormulaRef psi = load_formula(genOpt.psi, err);
    emitGen("finite", {gen_finite(psi)});
  });

  // oracle
  struct {
    std::string file;
    bool json = false;
    int samples = 100;
    int unroll = 20;
    int maxLen = 12;
    unsigned seed = 1;
  } oracleOpt;
  auto* cmdOracle = app.add_subcommand("oracle", "cross-checks against explicit enumeration");
  cmdOracle->require_subcommand(1);
  auto* oracleLasso =
      cmdOracle->add_subcommand("lasso", "matrix lasso verdicts vs explicit thread enumeration");
  oracleLasso->add_option("file", oracleOpt.file, "formula file, - for stdin")->required();
  oracleLasso->add_option("--samples", oracleOpt.samples, "number of random lassos");
  oracleLasso->add_option("--unroll", oracleOpt.unroll, "cycle unrolling depth");
  oracleLasso->add_option("--max-len", oracleOpt.maxLen, "random walk length cap");
  oracleLasso->add_option("--seed", oracleOpt.seed, "random seed");
  oracleLasso->add_flag("--json", oracleOpt.json, "JSON-lines output");
  oracleLasso->callback([&] {
    FormulaRef f = load_formula(oracleOpt.file, err);
    LabelGraph g = build_label_graph(f);
    std::mt19937 rng(oracleOpt.seed);
    int checked = 0, mismatches = 0;
    for (int i = 0; i < oracleOpt.samples * 20 && checked < oracleOpt.samples; ++i) {
      // random walk until a node repeats, giving stem root..entry and a cycle
      std::vector<int> path{g.root};
      std::map<int, std::size_t> at{{g.root, 0}};
      std::vector<int> stem, cycle;
      for (int step = 0; step < oracleOpt.maxLen; ++step) {
        const auto& node = g.nodes[static_cast<std::size_t>(path.back())];
        if (node.succs.empty()) break;
        int next = node.succs[rng() % node.succs.size()];
        auto hit = at.find(next);
        if (hit != at.end()) {
          stem.assign(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(hit->second) + 1);
          cycle.assign(path.begin() + static_cast<std::ptrdiff_t>(hit->second), path.end());
          break;
        }
        at.emplace(next, path.size());
        path.push_back(next);
      }
      if (cycle.empty()) continue;
      ++checked;
      bool m1 = lasso_has_mu_trace(g, stem, cycle);
      bool m2 = lasso_verdict_by_enumeration(g, stem, cycle, oracleOpt.unroll);
      if (m1 != m2) {
        ++mismatches;
        err << "mismatch: stem " << join(stem) << " cycle " << join(cycle) << " matrix "
            << (m1 ? "mu" : "no") << " enumeration " << (m2 ? "mu" : "no") << "\n";
      }
    }
    if (oracleOpt.json)
      out << json{{"cmd", "oracle-lasso"}, {"checked", checked}, {"mismatches", mismatches}}.dump()
          << "\n";
    else
      out << "agreed on " << checked - mismatches << " of " << checked << " lassos\n";
    rc = mismatches == 0 ? 0 : 1;
  });

  try {
    std::vector<const char*> argv;
    argv.push_back("muforge");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const CliFailure& f) {
    return f.code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return 4;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << "\n";
    return 3;
  }
  return rc;
}

} // namespace muforge
