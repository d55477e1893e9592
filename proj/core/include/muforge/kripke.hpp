#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace muforge {

// Pointed structure over propositions.  Text format, one directive per line:
//   state <id> [prop ...]
//   init <id>
//   edge <src> <dst>
// "#" comments and blank lines are ignored.  init is mandatory.
struct Kripke {
  struct State {
    std::string id;
    std::set<std::string> props;
    std::vector<int> succs;
  };

  std::vector<State> states;
  int init = -1;
  std::map<std::string, int> index;

  int add_state(const std::string& id, std::set<std::string> props = {});
  void add_edge(int src, int dst);
};

Kripke parse_kripke(std::string_view text);
std::string print_kripke(const Kripke& m);

} // namespace muforge
