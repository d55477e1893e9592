#pragma once

#include <string>

#include "muforge/core_graph.hpp"
#include "muforge/label_graph.hpp"
#include "muforge/twb.hpp"

namespace muforge {

// Graphviz renderings, deterministic: nodes in index order, edges sorted.
// The root carries a double border; back edges are dashed.
std::string export_dot(const LabelGraph& g);
std::string export_dot(const CoreGraph& g);
std::string export_dot(const Twb& t);

} // namespace muforge
