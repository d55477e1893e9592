#include "muforge/twb.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "muforge/diagnostics.hpp"

namespace muforge {

namespace {

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

} // namespace

Twb parse_twb(std::string_view text) {
  Twb t;
  std::map<std::string, int> index;
  struct Pending {
    int node;
    std::vector<std::string> children;
    std::string back;
    std::size_t off, line;
  };
  std::vector<Pending> pending;
  std::string rootId;
  bool sawRoot = false;
  std::size_t rootOff = 0, rootLine = 0;

  std::size_t pos = 0, lineNo = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string line(text.substr(pos, eol - pos));
    std::size_t off = pos;
    pos = eol + 1;
    ++lineNo;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);

    std::istringstream in(line);
    std::string word;
    if (!(in >> word)) {
      if (eol == text.size()) break;
      continue;
    }

    if (word == "root") {
      if (!(in >> rootId)) throw ParseError("root needs a node id", off, lineNo, 1);
      sawRoot = true;
      rootOff = off;
      rootLine = lineNo;
    } else if (word == "node") {
      std::string id;
      if (!(in >> id)) throw ParseError("node needs an id", off, lineNo, 1);
      if (index.count(id)) throw ParseError("duplicate node id: " + id, off, lineNo, 1);
      TwbNode n;
      n.id = id;
      Pending p;
      p.node = static_cast<int>(t.nodes.size());
      p.off = off;
      p.line = lineNo;
      bool sawKind = false;
      std::string attr;
      while (in >> attr) {
        auto eq = attr.find('=');
        if (eq == std::string::npos)
          throw ParseError("expected key=value, got: " + attr, off, lineNo, 1);
        std::string key = attr.substr(0, eq), val = attr.substr(eq + 1);
        if (key == "kind") {
          sawKind = true;
          if (val == "modal")
            n.kind = NodeKind::Modal;
          else if (val == "or" || val == "choice")
            n.kind = NodeKind::Choice;
          else if (val == "leaf")
            n.kind = NodeKind::Leaf;
          else
            throw ParseError("unknown kind: " + val, off, lineNo, 1);
        } else if (key == "lits") {
          n.lits = split_commas(val);
          std::sort(n.lits.begin(), n.lits.end());
          n.lits.erase(std::unique(n.lits.begin(), n.lits.end()), n.lits.end());
        } else if (key == "prio") {
          try {
            n.prio = std::stoi(val);
          } catch (const std::exception&) {
            throw ParseError("prio needs an integer, got: " + val, off, lineNo, 1);
          }
          if (n.prio < 0) throw ParseError("prio must be nonnegative", off, lineNo, 1);
        } else if (key == "children") {
          p.children = split_commas(val);
        } else if (key == "back") {
          p.back = val;
        } else {
          throw ParseError("unknown attribute: " + key, off, lineNo, 1);
        }
      }
      if (!sawKind) throw ParseError("node " + id + " needs kind=", off, lineNo, 1);
      index.emplace(id, p.node);
      t.nodes.push_back(std::move(n));
      pending.push_back(std::move(p));
    } else {
      throw ParseError("unknown directive: " + word, off, lineNo, 1);
    }
    if (eol == text.size()) break;
  }

  auto lookup = [&](const std::string& id, std::size_t off, std::size_t line) {
    auto it = index.find(id);
    if (it == index.end()) throw ParseError("unknown node id: " + id, off, line, 1);
    return it->second;
  };
  for (const auto& p : pending) {
    for (const auto& c : p.children)
      t.nodes[static_cast<std::size_t>(p.node)].children.push_back(lookup(c, p.off, p.line));
    if (!p.back.empty())
      t.nodes[static_cast<std::size_t>(p.node)].back = lookup(p.back, p.off, p.line);
  }
  if (!sawRoot) throw ParseError("missing root directive", 0, 0, 0);
  if (t.nodes.empty()) throw ParseError("no nodes", 0, 0, 0);
  t.root = lookup(rootId, rootOff, rootLine);
  return t;
}

std::string print_twb(const Twb& t) {
  auto name = [&](int i) {
    const auto& id = t.nodes[static_cast<std::size_t>(i)].id;
    return id.empty() ? std::to_string(i) : id;
  };
  std::string out = "root " + name(t.root) + "\n";
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const TwbNode& n = t.nodes[i];
    out += "node " + name(static_cast<int>(i));
    switch (n.kind) {
    case NodeKind::Modal:
      out += " kind=modal";
      break;
    case NodeKind::Choice:
      out += " kind=or";
      break;
    default:
      out += " kind=leaf";
      break;
    }
    if (!n.lits.empty()) {
      out += " lits=";
      for (std::size_t j = 0; j < n.lits.size(); ++j) {
        if (j) out += ",";
        out += n.lits[j];
      }
    }
    if (n.prio != 0) out += " prio=" + std::to_string(n.prio);
    if (!n.children.empty()) {
      out += " children=";
      for (std::size_t j = 0; j < n.children.size(); ++j) {
        if (j) out += ",";
        out += name(n.children[j]);
      }
    }
    if (n.back >= 0) out += " back=" + name(n.back);
    out += "\n";
  }
  return out;
}

void refresh_parents(Twb& t) {
  const int n = static_cast<int>(t.nodes.size());
  if (t.root < 0 || t.root >= n) throw ValidationError("root out of range");
  for (auto& nd : t.nodes) nd.parent = -1;
  for (int i = 0; i < n; ++i) {
    for (int c : t.nodes[static_cast<std::size_t>(i)].children) {
      if (c < 0 || c >= n) throw ValidationError("child out of range");
      TwbNode& ch = t.nodes[static_cast<std::size_t>(c)];
      if (c == t.root) throw ValidationError("root listed as a child");
      if (ch.parent >= 0)
        throw ValidationError("node has two parents: " +
                              (ch.id.empty() ? std::to_string(c) : ch.id));
      ch.parent = i;
    }
  }
  // connectivity: every node reachable from the root through children
  std::deque<int> q{t.root};
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  seen[static_cast<std::size_t>(t.root)] = 1;
  int count = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    ++count;
    for (int c : t.nodes[static_cast<std::size_t>(v)].children)
      if (!seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = 1;
        q.push_back(c);
      }
  }
  if (count != n) throw ValidationError("children do not form a tree over all nodes");
}

void validate_twb(Twb& t) {
  refresh_parents(t);
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    int b = t.nodes[i].back;
    if (b < 0) continue;
    if (b >= static_cast<int>(t.nodes.size())) throw ValidationError("back target out of range");
    int cur = t.nodes[i].parent;
    while (cur >= 0 && cur != b) cur = t.nodes[static_cast<std::size_t>(cur)].parent;
    if (cur != b)
      throw ValidationError("back edge must target a strict ancestor: " +
                            (t.nodes[i].id.empty() ? std::to_string(i) : t.nodes[i].id));
  }
}

std::vector<int> twb_succs(const Twb& t, int v) {
  std::vector<int> out = t.nodes[static_cast<std::size_t>(v)].children;
  if (t.nodes[static_cast<std::size_t>(v)].back >= 0)
    out.push_back(t.nodes[static_cast<std::size_t>(v)].back);
  return out;
}

std::vector<int> back_targets(const Twb& t) {
  std::vector<char> hit(t.nodes.size(), 0);
  for (const auto& n : t.nodes)
    if (n.back >= 0) hit[static_cast<std::size_t>(n.back)] = 1;
  std::vector<int> out;
  for (std::size_t i = 0; i < hit.size(); ++i)
    if (hit[i]) out.push_back(static_cast<int>(i));
  return out;
}

} // namespace muforge
