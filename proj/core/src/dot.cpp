#include "netreal/dot.hpp"

#include <sstream>

namespace netreal {

namespace {

const char* shape_of(VertexRole role) {
    switch (role) {
    case VertexRole::source: return "triangle";
    case VertexRole::sink: return "invtriangle";
    case VertexRole::transient: break;
    }
    return "circle";
}

} // namespace

std::string to_dot(const RealizedNetwork& network) {
    std::ostringstream out;
    out << "graph realized {\n";
    for (int v = 0; v < static_cast<int>(network.roles.size()); ++v)
        out << "  \"" << network.labels[static_cast<std::size_t>(v)] << "\" [shape="
            << shape_of(network.roles[static_cast<std::size_t>(v)]) << "];\n";
    for (int k = 0; k < static_cast<int>(network.edges.size()); ++k) {
        const RealizedEdge& e = network.edges[static_cast<std::size_t>(k)];
        const char* kind = e.kind == RealizedEdge::Kind::countercurrent ? "counter" : "conc";
        out << "  \"" << network.labels[static_cast<std::size_t>(e.x0_vertex)] << "\" -- \""
            << network.labels[static_cast<std::size_t>(e.x1_vertex)] << "\" [label=\"e_"
            << k + 1 << ": (" << e.comp_first + 1 << "," << e.comp_second + 1 << ") [" << kind
            << "]\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_dot(const MultiDigraph& graph, const std::vector<std::string>& vertex_labels) {
    std::ostringstream out;
    auto label = [&](int v) {
        if (v < static_cast<int>(vertex_labels.size()))
            return vertex_labels[static_cast<std::size_t>(v)];
        return "v" + std::to_string(v + 1);
    };
    out << "digraph multi {\n";
    for (int v = 0; v < graph.vertex_count; ++v)
        out << "  \"" << label(v) << "\" [shape="
            << shape_of(graph.roles[static_cast<std::size_t>(v)]) << "];\n";
    for (int j = 0; j < static_cast<int>(graph.arcs.size()); ++j) {
        const Arc& arc = graph.arcs[static_cast<std::size_t>(j)];
        out << "  \"" << label(arc.tail) << "\" -> \"" << label(arc.head) << "\" [label=\""
            << j + 1 << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace netreal
