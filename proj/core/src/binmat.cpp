#include "netreal/binmat.hpp"

#include <stdexcept>

namespace netreal {

BinaryMatrix hat(const RealMatrix& a, double tol) {
    if (tol < 0.0)
        throw std::invalid_argument("negative tolerance");
    BinaryMatrix out(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            out.set(r, c, a.at(r, c).nonzero(tol));
    return out;
}

IndexSet support(const std::vector<Scalar>& v, double tol) {
    if (tol < 0.0)
        throw std::invalid_argument("negative tolerance");
    std::vector<int> ix;
    for (int j = 0; j < static_cast<int>(v.size()); ++j)
        if (v[static_cast<std::size_t>(j)].nonzero(tol))
            ix.push_back(j);
    return IndexSet(std::move(ix));
}

namespace {

// Columns j, k are equal or orthogonal iff their dot product is either 0 or
// their (then common) support size.
bool cols_compatible(const BinaryMatrix& a, int j, int k) {
    int dot = 0;
    bool equal = true;
    for (int r = 0; r < a.rows(); ++r) {
        int x = a.at(r, j);
        int y = a.at(r, k);
        dot += x & y;
        equal = equal && x == y;
    }
    return dot == 0 || equal;
}

} // namespace

std::optional<PairWitness> columns_equal_or_orthogonal(const BinaryMatrix& a) {
    for (int j = 0; j < a.cols(); ++j)
        for (int k = j + 1; k < a.cols(); ++k)
            if (!cols_compatible(a, j, k))
                return PairWitness{j, k};
    return std::nullopt;
}

std::optional<PairWitness> rows_equal_or_orthogonal(const BinaryMatrix& a) {
    auto witness = columns_equal_or_orthogonal(a.transposed());
    if (witness)
        return PairWitness{witness->first, witness->second};
    return std::nullopt;
}

std::vector<IndexSet> irreducible_components(const BinaryMatrix& s) {
    if (!s.is_square())
        throw std::invalid_argument("component decomposition requires a square matrix");
    if (!s.is_symmetric())
        throw std::invalid_argument("component decomposition requires a symmetric matrix");
    int n = s.rows();
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    std::vector<IndexSet> components;
    for (int start = 0; start < n; ++start) {
        if (label[static_cast<std::size_t>(start)] >= 0)
            continue;
        int id = static_cast<int>(components.size());
        std::vector<int> stack{start};
        std::vector<int> members;
        label[static_cast<std::size_t>(start)] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w = 0; w < n; ++w) {
                if (w == v || !s.at(v, w))
                    continue;
                if (label[static_cast<std::size_t>(w)] < 0) {
                    label[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
        components.emplace_back(std::move(members));
    }
    return components;
}

RealMatrix permute(const RealMatrix& a, const Permutation& row_perm, const Permutation& col_perm) {
    if (row_perm.size() != a.rows() || col_perm.size() != a.cols())
        throw std::invalid_argument("permutation size does not match matrix dimensions");
    RealMatrix out(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            out.at(row_perm(r), col_perm(c)) = a.at(r, c);
    return out;
}

BinaryMatrix permute(const BinaryMatrix& a, const Permutation& row_perm,
                     const Permutation& col_perm) {
    if (row_perm.size() != a.rows() || col_perm.size() != a.cols())
        throw std::invalid_argument("permutation size does not match matrix dimensions");
    BinaryMatrix out(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            out.set(row_perm(r), col_perm(c), a.at(r, c));
    return out;
}

} // namespace netreal
