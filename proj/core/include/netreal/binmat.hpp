#pragma once

#include "netreal/matrix.hpp"

#include <optional>
#include <vector>

namespace netreal {

/// Zero pattern of a coefficient matrix: entry 1 iff |a(i,j)| > tol.
BinaryMatrix hat(const RealMatrix& a, double tol);

/// Indices j with |v(j)| > tol.
IndexSet support(const std::vector<Scalar>& v, double tol);

/// A conflicting pair of indices for an equal-or-orthogonal check.
struct PairWitness {
    int first;
    int second;
};

/// PASS (nullopt) iff every column pair is equal or orthogonal. The witness is
/// the lexicographically smallest conflicting pair.
std::optional<PairWitness> columns_equal_or_orthogonal(const BinaryMatrix& a);
std::optional<PairWitness> rows_equal_or_orthogonal(const BinaryMatrix& a);

/// Connected components of the undirected graph whose adjacency pattern is the
/// symmetric matrix s (diagonal ignored). Components are ordered by smallest
/// member. Throws std::invalid_argument on non-square or asymmetric input.
std::vector<IndexSet> irreducible_components(const BinaryMatrix& s);

/// b(rowPerm(i), colPerm(j)) = a(i, j); inverse permutations recover a.
RealMatrix permute(const RealMatrix& a, const Permutation& row_perm, const Permutation& col_perm);
BinaryMatrix permute(const BinaryMatrix& a, const Permutation& row_perm,
                     const Permutation& col_perm);

} // namespace netreal
