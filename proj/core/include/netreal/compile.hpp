#pragma once

#include "netreal/boundary_system.hpp"
#include "netreal/flow_connectivity.hpp"
#include "netreal/line_digraph.hpp"
#include "netreal/metric_graph.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace netreal {

/// Eigen-decomposition of one 2x2 transport matrix: eigenvalues in decreasing
/// order and unit eigenvector columns (f_plus, f_minus) with positive leading
/// coordinate.
struct EdgeEigen {
    double lambda_plus = 0.0;
    double lambda_minus = 0.0;
    double f[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
};

/// Throws std::invalid_argument unless the matrix has two distinct real
/// eigenvalues (discriminant above tol, scaled by the matrix magnitude).
EdgeEigen diagonalize_edge(const RealMatrix& m, double tol);

/// Flow direction bookkeeping for a whole problem: per edge the number of
/// positive eigenvalues (alpha), the renumbering of the 2m Riemann components
/// into the 0->1 group (j_plus) and the 1->0 group (j_minus), transport speeds,
/// and per vertex the ordered outgoing/incoming component lists, condition
/// counts and roles.
struct Classification {
    std::vector<EdgeEigen> eigen;
    std::vector<int> alpha;
    std::vector<int> comp_of_slot;                  ///< (2*edge + slot) -> component
    std::vector<std::pair<int, int>> slot_of_comp;  ///< component -> (edge, slot)
    IndexSet j_plus;
    IndexSet j_minus;
    std::vector<Scalar> speeds;
    std::vector<VertexRole> roles;
    std::vector<int> k_v;
    std::vector<std::vector<int>> outgoing_components; ///< per vertex, edge-ascending
    std::vector<std::vector<int>> incoming_components;
};

/// Slot 0 is the component transported with lambda_plus, slot 1 the other one.
Classification classify(const MetricGraphProblem& problem);

/// Number of outgoing values at a vertex, recomputed from the incidence sums
/// and cross-checked against the classification flags. Throws std::logic_error
/// on disagreement.
int count_outgoing(const MetricGraphProblem& problem, const Classification& classification,
                   int vertex);

/// Per-vertex trace maps: f_out/f_in select the outgoing and incoming Riemann
/// components out of the stacked endpoint eigenbases, psi_out/psi_in are the
/// vertex condition matrix applied to them.
struct VertexAssembly {
    int vertex = 0;
    int k_v = 0;
    RealMatrix f_out;   ///< 2|J_v| x k_v
    RealMatrix f_in;    ///< 2|J_v| x (2|J_v| - k_v)
    RealMatrix psi_out; ///< k_v x k_v
    RealMatrix psi_in;  ///< k_v x (2|J_v| - k_v)
    std::vector<int> out_components;
    std::vector<int> in_components;
};

/// Requires the vertex condition matrix to exist with shape k_v x 2|J_v| for a
/// non-sink vertex. Throws std::invalid_argument otherwise.
VertexAssembly build_contraction(const MetricGraphProblem& problem,
                                 const Classification& classification, int vertex);

struct WellposedResult {
    bool ok = false;
    double det = 0.0;
    double threshold = 0.0;  ///< 1e-9 times the product of psi_out row norms
    RealMatrix solved_map;   ///< u_out = solved_map * u_in, present when ok
};

/// The boundary rows determine the outgoing traces uniquely iff psi_out is
/// nonsingular (scale-invariant determinant test).
WellposedResult wellposed(const VertexAssembly& assembly);

struct CompiledSystem {
    Classification classification;
    std::vector<int> assembled_vertices; ///< non-sink vertices in input order
    std::vector<VertexAssembly> assemblies;
    std::vector<WellposedResult> wellposedness;
    std::optional<BoundarySystem> system; ///< present iff every vertex is wellposed

    bool all_wellposed() const;
};

/// Full forward pass: classify, assemble every non-sink vertex, and stack the
/// vertex blocks into the flat boundary system with column index = component
/// index.
CompiledSystem assemble_global(const MetricGraphProblem& problem);

/// Flow-connectivity verdicts of one compiled vertex, for the assumption report.
struct VertexCheck {
    int vertex = 0;
    VertexRole role = VertexRole::transient;
    bool ass1_ok = true;
    std::string ass1_detail;
    bool connectivity_ok = true; ///< full connectivity (transient) or irreducibility (source)
    std::string connectivity_detail;
    std::optional<int> kirchhoff_row; ///< dense condition row, when one exists
};

/// One entry per non-sink vertex, in input order. tol is the zero-pattern
/// tolerance applied to the derived psi blocks.
std::vector<VertexCheck> check_vertex_assumptions(const CompiledSystem& compiled, double tol);

} // namespace netreal
