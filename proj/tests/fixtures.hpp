#pragma once

#include "netreal/boundary_system.hpp"
#include "netreal/matrix.hpp"
#include "netreal/metric_graph.hpp"

namespace fixtures {

// Six-component flat system: four 0->1 components fed by one source, two
// components closing a triangle between the two transient vertices. The
// "negative" variant declares components 5 and 6 both as 1->0 flows, which is
// exactly what blocks its realization; the "positive" variant flips component
// 5 to the 0->1 group.
netreal::BoundarySystem worked_example_negative();
netreal::BoundarySystem worked_example_positive();

// 7x7 adjacency matrix of a small line digraph with two transient vertices,
// sources behind arcs {1,2,5,7} and sinks behind arcs {6,7}, plus its expected
// collapse and the two bundled augmentations.
netreal::BinaryMatrix appendix_line_adjacency();
netreal::BinaryMatrix appendix_a_plus();  // 3x7 collapse, source row last
netreal::BinaryMatrix appendix_a_minus(); // 3x7 collapse, sink row last
netreal::BinaryMatrix appendix_single_a_plus();  // 4x7, one source / one sink
netreal::BinaryMatrix appendix_single_a_minus();
netreal::IntMatrix appendix_single_host(); // 4x4 host adjacency
netreal::BinaryMatrix appendix_multi_a_plus();  // 7x7, three sources / two sinks
netreal::BinaryMatrix appendix_multi_a_minus();
netreal::IntMatrix appendix_multi_host(); // 7x7 host adjacency

// Star-shaped channel network: one feeding edge into the hub, two outgoing
// edges, all characteristic speeds positive. Eigenpairs are supplied
// explicitly as lambda = V +- sqrt(g H) and F = [[H, H], [s, -s]].
netreal::MetricGraphProblem saint_venant_star();

// Four components: one source sending a concurrent pair into a transient
// vertex which forwards a concurrent pair to a sink.
netreal::BoundarySystem source_chain_system();

// Four components, no transient vertices: two independent sources feeding two
// sinks directly.
netreal::BoundarySystem two_source_system();

// Hub vertex with decoupled trace conditions (identity psi blocks); the flow
// never crosses between the two incident edges, so full connectivity fails at
// the hub.
netreal::MetricGraphProblem decoupled_hub_problem();

} // namespace fixtures
