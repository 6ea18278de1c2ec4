#include "netreal/boundary_system.hpp"

#include <cmath>
#include <stdexcept>

namespace netreal {

void validate(const BoundarySystem& system) {
    int size = 2 * system.m;
    if (system.m <= 0)
        throw std::invalid_argument("boundary system needs m >= 1");
    if (system.xi_out.rows() != size || system.xi_out.cols() != size ||
        system.xi_in.rows() != size || system.xi_in.cols() != size)
        throw std::invalid_argument("coefficient matrices must be 2m x 2m");
    if (IndexSet::set_union(system.j_plus, system.j_minus) != IndexSet::range(size) ||
        system.j_plus.intersects(system.j_minus))
        throw std::invalid_argument("j_plus and j_minus must partition the components");
    if (static_cast<int>(system.speeds.size()) != size)
        throw std::invalid_argument("one speed per component is required");
    for (const Scalar& c : system.speeds)
        if (c.value() <= 0.0)
            throw std::invalid_argument("speeds must be positive");
    if (system.tol < 0.0)
        throw std::invalid_argument("negative tolerance");
}

bool speeds_equal(const BoundarySystem& system, int comp_a, int comp_b) {
    const Scalar& a = system.speeds[static_cast<std::size_t>(comp_a)];
    const Scalar& b = system.speeds[static_cast<std::size_t>(comp_b)];
    if (a.exact() && b.exact())
        return a == b;
    double scale = std::max({std::fabs(a.value()), std::fabs(b.value()), 1.0});
    return std::fabs(a.value() - b.value()) <= system.tol * scale;
}

} // namespace netreal
