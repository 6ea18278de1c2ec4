#pragma once

#include "netreal/matrix.hpp"

#include <vector>

namespace netreal {

/// First-order hyperbolic boundary problem in flat form: 2m transported
/// components, the components in j_plus running from endpoint 0 to endpoint 1
/// and those in j_minus the other way, coupled by
///   xi_out * (outgoing traces) + xi_in * (incoming traces) = 0.
/// Column p of both matrices refers to component p.
struct BoundarySystem {
    int m = 0;            ///< half the component count
    RealMatrix xi_out;    ///< 2m x 2m
    RealMatrix xi_in;     ///< 2m x 2m
    IndexSet j_plus;      ///< components flowing 0 -> 1 (0-based)
    IndexSet j_minus;     ///< components flowing 1 -> 0
    std::vector<Scalar> speeds; ///< positive transport speed per component
    double tol = 0.0;     ///< zero-pattern tolerance for the coefficient matrices
};

/// Structural invariants: square 2m x 2m matrices, j_plus/j_minus partition the
/// component range, positive speeds. Throws std::invalid_argument on violation.
void validate(const BoundarySystem& system);

/// Speed comparison honouring exact entries: exact speeds compare as rationals,
/// otherwise relative to the system tolerance.
bool speeds_equal(const BoundarySystem& system, int comp_a, int comp_b);

} // namespace netreal
