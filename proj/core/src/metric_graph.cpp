#include "netreal/metric_graph.hpp"

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace netreal {

int vertex_count(const MetricGraphProblem& problem) {
    return static_cast<int>(problem.vertex_labels.size());
}

std::vector<int> incident_edges(const MetricGraphProblem& problem, int vertex) {
    std::vector<int> out;
    for (int j = 0; j < static_cast<int>(problem.edges.size()); ++j) {
        const EdgeSpec& e = problem.edges[static_cast<std::size_t>(j)];
        if (e.tail == vertex || e.head == vertex)
            out.push_back(j);
    }
    return out;
}

int endpoint_parameter(const EdgeSpec& edge, int vertex) {
    if (vertex == edge.tail)
        return edge.x0_at_tail ? 0 : 1;
    if (vertex == edge.head)
        return edge.x0_at_tail ? 1 : 0;
    throw std::invalid_argument("vertex is not an endpoint of the edge");
}

void validate_structure(const MetricGraphProblem& problem) {
    int r = vertex_count(problem);
    if (r < 2)
        throw std::invalid_argument("a metric graph needs at least two vertices");
    if (problem.edges.empty())
        throw std::invalid_argument("a metric graph needs at least one edge");
    std::set<std::pair<int, int>> seen;
    for (const EdgeSpec& e : problem.edges) {
        if (e.tail < 0 || e.tail >= r || e.head < 0 || e.head >= r)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.tail == e.head)
            throw std::invalid_argument("loops are not allowed");
        auto key = std::minmax(e.tail, e.head);
        if (!seen.insert(key).second)
            throw std::invalid_argument("parallel edges are not allowed");
        bool has_m = e.m_matrix.has_value();
        bool has_eigen = e.lambda.has_value() && e.f_matrix.has_value();
        if (has_m == has_eigen)
            throw std::invalid_argument(
                "each edge needs either a transport matrix or a lambda/F pair");
        if (has_m && (e.m_matrix->rows() != 2 || e.m_matrix->cols() != 2))
            throw std::invalid_argument("transport matrices must be 2x2");
        if (has_eigen && (e.f_matrix->rows() != 2 || e.f_matrix->cols() != 2))
            throw std::invalid_argument("eigenvector matrices must be 2x2");
    }
    // Connectivity over the undirected edge set.
    std::vector<char> reached(static_cast<std::size_t>(r), 0);
    std::vector<int> stack{0};
    reached[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const EdgeSpec& e : problem.edges) {
            int other = -1;
            if (e.tail == v)
                other = e.head;
            else if (e.head == v)
                other = e.tail;
            if (other >= 0 && !reached[static_cast<std::size_t>(other)]) {
                reached[static_cast<std::size_t>(other)] = 1;
                stack.push_back(other);
            }
        }
    }
    for (int v = 0; v < r; ++v)
        if (!reached[static_cast<std::size_t>(v)])
            throw std::invalid_argument("the graph must be connected");
    for (const auto& [vertex, phi] : problem.vertex_conditions) {
        if (vertex < 0 || vertex >= r)
            throw std::invalid_argument("condition attached to an unknown vertex");
        (void)phi;
    }
    if (problem.tol < 0.0)
        throw std::invalid_argument("negative tolerance");
}

} // namespace netreal
