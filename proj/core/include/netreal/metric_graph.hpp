#pragma once

#include "netreal/matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace netreal {

/// One edge of a metric graph carrying a 2x2 strictly hyperbolic system. The
/// transport matrix may be given directly (m_matrix) or pre-diagonalized as the
/// eigenvalue pair and the eigenvector matrix with columns (f_plus, f_minus).
struct EdgeSpec {
    int tail = 0; ///< endpoint vertex indices (0-based); the graph is undirected
    int head = 0;
    bool x0_at_tail = true; ///< which endpoint carries parameter 0
    std::optional<RealMatrix> m_matrix;
    std::optional<std::pair<double, double>> lambda; ///< (lambda_plus, lambda_minus)
    std::optional<RealMatrix> f_matrix;
};

/// A graph-posed problem: a simple connected metric graph, per-edge 2x2
/// hyperbolic data, and one condition matrix per non-sink vertex acting on the
/// stacked endpoint traces (p1, p2) of its incident edges in ascending edge
/// order.
struct MetricGraphProblem {
    std::vector<std::string> vertex_labels;
    std::vector<EdgeSpec> edges;
    std::map<int, RealMatrix> vertex_conditions;
    double tol = 1e-12; ///< zero-pattern tolerance for derived coefficients
};

int vertex_count(const MetricGraphProblem& problem);

/// Edge indices incident to a vertex, ascending.
std::vector<int> incident_edges(const MetricGraphProblem& problem, int vertex);

/// 0 if the vertex carries parameter 0 on the edge, 1 otherwise.
int endpoint_parameter(const EdgeSpec& edge, int vertex);

/// Graph-shape invariants: valid endpoints, no loops, no parallel edges,
/// connected, at least one edge, per-edge data present. Condition shapes are
/// checked later against the flow classification. Throws std::invalid_argument.
void validate_structure(const MetricGraphProblem& problem);

} // namespace netreal
