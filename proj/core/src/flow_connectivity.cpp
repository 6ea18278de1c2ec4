#include "netreal/flow_connectivity.hpp"

#include <stdexcept>

namespace netreal {

VertexBoundaryBlock make_vertex_block(RealMatrix psi_out, RealMatrix psi_in,
                                      std::vector<int> out_arc_ids, std::vector<int> in_arc_ids,
                                      double tol) {
    if (psi_out.rows() != psi_in.rows())
        throw std::invalid_argument("psi_out and psi_in must have the same number of rows");
    if (static_cast<int>(out_arc_ids.size()) != psi_out.cols() ||
        static_cast<int>(in_arc_ids.size()) != psi_in.cols())
        throw std::invalid_argument("arc id lists must match the block widths");
    BinaryMatrix pattern = hat(psi_out, tol);
    for (int r = 0; r < pattern.rows(); ++r)
        if (pattern.row_is_zero(r))
            throw std::invalid_argument("boundary row " + std::to_string(r + 1) +
                                        " has no outgoing coefficient");
    for (int c = 0; c < pattern.cols(); ++c)
        if (pattern.col_is_zero(c))
            throw std::invalid_argument("outgoing arc column " + std::to_string(c + 1) +
                                        " is identically zero");
    return VertexBoundaryBlock{std::move(psi_out), std::move(psi_in), std::move(out_arc_ids),
                               std::move(in_arc_ids), tol};
}

BinaryMatrix transient_connectivity(const VertexBoundaryBlock& block) {
    BinaryMatrix out_hat = hat(block.psi_out, block.tol);
    BinaryMatrix in_hat = hat(block.psi_in, block.tol);
    return pattern_product(out_hat.transposed(), in_hat);
}

BinaryMatrix source_connectivity(const VertexBoundaryBlock& block) {
    if (block.psi_in.cols() != 0)
        throw std::invalid_argument("source connectivity is defined for blocks without inflows");
    BinaryMatrix out_hat = hat(block.psi_out, block.tol);
    return pattern_product(out_hat.transposed(), out_hat);
}

std::optional<MatrixPosition> full_connectivity_failure(const BinaryMatrix& c) {
    for (int r = 0; r < c.rows(); ++r)
        for (int j = 0; j < c.cols(); ++j)
            if (!c.at(r, j))
                return MatrixPosition{r, j};
    return std::nullopt;
}

IrreducibilityResult check_irreducible(const BinaryMatrix& c) {
    auto components = irreducible_components(c);
    return IrreducibilityResult{components.size() == 1, std::move(components)};
}

std::optional<int> kirchhoff_row(const VertexBoundaryBlock& block) {
    for (int r = 0; r < block.psi_out.rows(); ++r) {
        bool dense = true;
        for (int c = 0; dense && c < block.psi_out.cols(); ++c)
            dense = block.psi_out.at(r, c).nonzero(block.tol);
        for (int c = 0; dense && c < block.psi_in.cols(); ++c)
            dense = block.psi_in.at(r, c).nonzero(block.tol);
        if (dense)
            return r;
    }
    return std::nullopt;
}

} // namespace netreal
