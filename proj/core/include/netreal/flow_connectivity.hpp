#pragma once

#include "netreal/binmat.hpp"
#include "netreal/matrix.hpp"

#include <optional>
#include <vector>

namespace netreal {

/// Boundary rows of one vertex, split into the coefficients of outgoing values
/// (psi_out, one column per outgoing arc) and incoming values (psi_in, one
/// column per incoming arc; zero columns for a source). Both blocks share the
/// same rows.
struct VertexBoundaryBlock {
    RealMatrix psi_out;
    RealMatrix psi_in;
    std::vector<int> out_arc_ids;
    std::vector<int> in_arc_ids;
    double tol = 0.0;
};

/// Validates shape and the requirement that psi_out has no zero row or column
/// (every outgoing value must be pinned by some condition and every condition
/// must involve an outgoing value). Throws std::invalid_argument otherwise.
VertexBoundaryBlock make_vertex_block(RealMatrix psi_out, RealMatrix psi_in,
                                      std::vector<int> out_arc_ids, std::vector<int> in_arc_ids,
                                      double tol);

/// Connectivity of a transient vertex: entry (l, j) = 1 iff some boundary row
/// has nonzero coefficients on outgoing arc l and incoming arc j.
BinaryMatrix transient_connectivity(const VertexBoundaryBlock& block);

/// Connectivity of a source: entry (i, j) = 1 iff some boundary row couples
/// outgoing arcs i and j. Symmetric with unit diagonal. Throws
/// std::invalid_argument when the block has incoming arcs.
BinaryMatrix source_connectivity(const VertexBoundaryBlock& block);

struct MatrixPosition {
    int row;
    int col;
};

/// PASS (nullopt) iff every entry of the connectivity matrix is 1; otherwise
/// the first zero position in row-major order.
std::optional<MatrixPosition> full_connectivity_failure(const BinaryMatrix& c);

struct IrreducibilityResult {
    bool irreducible;
    std::vector<IndexSet> components;
};

/// PASS iff the symmetric connectivity matrix has a single component.
IrreducibilityResult check_irreducible(const BinaryMatrix& c);

/// Smallest row index whose coefficients are nonzero in every column of both
/// blocks; such a row couples every incoming arc with every outgoing arc, so
/// full connectivity is guaranteed.
std::optional<int> kirchhoff_row(const VertexBoundaryBlock& block);

} // namespace netreal
