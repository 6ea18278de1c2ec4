#pragma once

#include "netreal/line_digraph.hpp"
#include "netreal/realize.hpp"

#include <string>
#include <vector>

namespace netreal {

/// Undirected DOT graph: vertices shaped by role (sources as triangles, sinks
/// as inverted triangles), each edge written x0 -- x1 and labeled
/// "e_k: (j',j'') [conc|counter]" with 1-based component indices.
std::string to_dot(const RealizedNetwork& network);

/// Directed DOT dump of a multi digraph; arcs are labeled by their 1-based
/// index, vertices by the given labels (or v1..vn when omitted).
std::string to_dot(const MultiDigraph& graph, const std::vector<std::string>& vertex_labels = {});

} // namespace netreal
