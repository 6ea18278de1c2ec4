#include "netreal/roundtrip.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace netreal {

namespace {

std::string fail(const std::string& why) { return why; }

} // namespace

RoundTripResult compare_realization(const MetricGraphProblem& problem,
                                    const Classification& classification,
                                    const RealizedNetwork& network) {
    RoundTripResult result;
    int m = static_cast<int>(problem.edges.size());
    if (static_cast<int>(network.edges.size()) != m) {
        result.mismatch = fail("edge counts differ: input " + std::to_string(m) + ", realized " +
                               std::to_string(network.edges.size()));
        return result;
    }
    if (static_cast<int>(network.roles.size()) != vertex_count(problem)) {
        result.mismatch =
            fail("vertex counts differ: input " + std::to_string(vertex_count(problem)) +
                 ", realized " + std::to_string(network.roles.size()));
        return result;
    }

    std::map<std::pair<int, int>, int> input_edge_of_pair;
    for (int j = 0; j < m; ++j) {
        int c0 = classification.comp_of_slot[static_cast<std::size_t>(2 * j)];
        int c1 = classification.comp_of_slot[static_cast<std::size_t>(2 * j + 1)];
        input_edge_of_pair[std::minmax(c0, c1)] = j;
    }

    std::vector<int> phi(network.roles.size(), -1); // realized vertex -> input vertex
    std::vector<char> edge_used(static_cast<std::size_t>(m), 0);
    auto bind = [&phi](int from, int to) {
        int& slot = phi[static_cast<std::size_t>(from)];
        if (slot >= 0 && slot != to)
            return false;
        slot = to;
        return true;
    };

    for (const RealizedEdge& edge : network.edges) {
        auto found = input_edge_of_pair.find(std::minmax(edge.comp_first, edge.comp_second));
        if (found == input_edge_of_pair.end()) {
            result.mismatch = fail("realized edge pairs components (" +
                                   std::to_string(edge.comp_first + 1) + "," +
                                   std::to_string(edge.comp_second + 1) +
                                   ") which share no input edge");
            return result;
        }
        int j = found->second;
        if (edge_used[static_cast<std::size_t>(j)]) {
            result.mismatch =
                fail("input edge " + std::to_string(j + 1) + " matched twice");
            return result;
        }
        edge_used[static_cast<std::size_t>(j)] = 1;
        const EdgeSpec& spec = problem.edges[static_cast<std::size_t>(j)];
        int x0_input = spec.x0_at_tail ? spec.tail : spec.head;
        int x1_input = spec.x0_at_tail ? spec.head : spec.tail;
        if (!bind(edge.x0_vertex, x0_input) || !bind(edge.x1_vertex, x1_input)) {
            result.mismatch = fail("vertex map conflict at input edge " + std::to_string(j + 1));
            return result;
        }
    }

    std::vector<char> hit(phi.size(), 0);
    for (int v = 0; v < static_cast<int>(phi.size()); ++v) {
        int image = phi[static_cast<std::size_t>(v)];
        if (image < 0) {
            result.mismatch = fail("realized vertex " + network.labels[static_cast<std::size_t>(v)] +
                                   " touches no edge");
            return result;
        }
        if (hit[static_cast<std::size_t>(image)]) {
            result.mismatch = fail("vertex map is not injective");
            return result;
        }
        hit[static_cast<std::size_t>(image)] = 1;
        VertexRole want = classification.roles[static_cast<std::size_t>(image)];
        if (network.roles[static_cast<std::size_t>(v)] != want) {
            result.mismatch = fail("role mismatch at realized vertex " +
                                   network.labels[static_cast<std::size_t>(v)]);
            return result;
        }
    }
    result.ok = true;
    return result;
}

} // namespace netreal
