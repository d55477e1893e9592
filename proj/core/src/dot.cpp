#include "muforge/dot.hpp"

#include <sstream>
#include <string>
#include <vector>

#include "muforge/print.hpp"

namespace muforge {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

const char* shape(NodeKind k) {
  switch (k) {
    case NodeKind::Modal: return "box";
    case NodeKind::Choice: return "diamond";
    case NodeKind::Unary: return "plaintext";
    default: return "ellipse";
  }
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

} // namespace

std::string export_dot(const LabelGraph& g) {
  std::ostringstream out;
  out << "digraph labels {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const LabelNode& n = g.nodes[i];
    std::vector<std::string> parts;
    for (const auto& f : n.label) parts.push_back(escape(print_formula(f)));
    out << "  n" << i << " [shape=" << shape(n.kind) << ", label=\"" << join(parts, "\\n");
    if (!n.consistent) out << "\\n(closed)";
    out << "\"";
    if (static_cast<int>(i) == g.root) out << ", peripheries=2";
    out << "];\n";
  }
  for (const auto& [key, m] : g.edges)
    out << "  n" << key.first << " -> n" << key.second << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_dot(const CoreGraph& g) {
  std::ostringstream out;
  out << "digraph core {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const CoreNode& n = g.nodes[i];
    out << "  n" << i << " [shape=" << shape(n.kind) << ", label=\"" << escape(n.label);
    if (!n.consistent) out << "\\n(closed)";
    out << "\"";
    if (static_cast<int>(i) == g.root) out << ", peripheries=2";
    out << "];\n";
  }
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    for (const auto& e : g.nodes[i].out) out << "  n" << i << " -> n" << e.target << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_dot(const Twb& t) {
  std::ostringstream out;
  out << "digraph tree {\n";
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const TwbNode& n = t.nodes[i];
    std::string text = join(n.lits, " ");
    if (n.prio != 0 || n.back >= 0) {
      if (!text.empty()) text += "\\n";
      text += "prio " + std::to_string(n.prio);
    }
    out << "  n" << i << " [shape=" << shape(n.kind) << ", label=\"" << escape(n.id);
    if (!n.id.empty() && !text.empty()) out << "\\n";
    out << text << "\"";
    if (static_cast<int>(i) == t.root) out << ", peripheries=2";
    out << "];\n";
  }
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    for (int c : t.nodes[i].children) out << "  n" << i << " -> n" << c << ";\n";
    if (t.nodes[i].back >= 0)
      out << "  n" << i << " -> n" << t.nodes[i].back << " [style=dashed, constraint=false];\n";
  }
  out << "}\n";
  return out.str();
}

} // namespace muforge
