#include "muforge/kripke.hpp"

#include <algorithm>
#include <sstream>

#include "muforge/diagnostics.hpp"

namespace muforge {

int Kripke::add_state(const std::string& id, std::set<std::string> props) {
  if (index.count(id)) throw ValidationError("duplicate state id: " + id);
  index[id] = static_cast<int>(states.size());
  states.push_back({id, std::move(props), {}});
  return static_cast<int>(states.size()) - 1;
}

void Kripke::add_edge(int src, int dst) {
  auto& ss = states.at(src).succs;
  if (std::find(ss.begin(), ss.end(), dst) == ss.end()) ss.push_back(dst);
}

Kripke parse_kripke(std::string_view text) {
  Kripke m;
  std::vector<std::pair<std::string, std::string>> edges;
  std::string initId;
  bool sawInit = false;

  std::size_t lineStart = 0;
  int lineNo = 0;
  while (lineStart <= text.size()) {
    std::size_t eol = text.find('\n', lineStart);
    if (eol == std::string_view::npos) eol = text.size();
    std::string line(text.substr(lineStart, eol - lineStart));
    ++lineNo;
    std::size_t off = lineStart;
    lineStart = eol + 1;

    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream in(line);
    std::string word;
    if (!(in >> word)) continue;

    if (word == "state") {
      std::string id;
      if (!(in >> id)) throw ParseError("state needs an id", off, lineNo, 1);
      std::set<std::string> props;
      std::string p;
      while (in >> p) props.insert(p);
      if (m.index.count(id))
        throw ParseError("duplicate state id: " + id, off, lineNo, 1);
      m.add_state(id, std::move(props));
    } else if (word == "init") {
      if (!(in >> initId)) throw ParseError("init needs a state id", off, lineNo, 1);
      sawInit = true;
    } else if (word == "edge") {
      std::string a, b;
      if (!(in >> a >> b)) throw ParseError("edge needs two state ids", off, lineNo, 1);
      edges.emplace_back(a, b);
    } else {
      throw ParseError("unknown directive: " + word, off, lineNo, 1);
    }
    if (eol == text.size()) break;
  }

  auto lookup = [&](const std::string& id) {
    auto it = m.index.find(id);
    if (it == m.index.end()) throw ParseError("unknown state id: " + id, 0, 0, 0);
    return it->second;
  };
  for (const auto& [a, b] : edges) m.add_edge(lookup(a), lookup(b));
  if (!sawInit) throw ParseError("missing init directive", 0, 0, 0);
  m.init = lookup(initId);
  return m;
}

std::string print_kripke(const Kripke& m) {
  std::string out;
  for (const auto& s : m.states) {
    out += "state " + s.id;
    for (const auto& p : s.props) out += " " + p;
    out += "\n";
  }
  if (m.init >= 0) out += "init " + m.states[m.init].id + "\n";
  for (const auto& s : m.states)
    for (int t : s.succs) out += "edge " + s.id + " " + m.states[t].id + "\n";
  return out;
}

} // namespace muforge
