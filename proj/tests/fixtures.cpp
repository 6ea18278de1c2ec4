#include "fixtures.hpp"

namespace fixtures {

using namespace netreal;

namespace {

BoundarySystem worked_example(bool positive) {
    BoundarySystem system;
    system.m = 3;
    system.xi_out = RealMatrix::from_int_rows({
        {0, 1, 1, 0, 0, 0},
        {1, 0, 0, 0, 0, 0},
        {1, 1, 0, 0, 0, 0},
        {0, 0, 1, 1, 0, 0},
        {0, 0, 0, 0, 1, 0},
        {0, 0, 0, 0, 0, 1},
    });
    system.xi_in = RealMatrix::from_int_rows({
        {0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0},
        {-1, -1, 0, 0, 0, -1},
        {0, 0, -1, -1, -1, 0},
    });
    if (positive) {
        system.j_plus = IndexSet{0, 1, 2, 3, 4};
        system.j_minus = IndexSet{5};
    } else {
        system.j_plus = IndexSet{0, 1, 2, 3};
        system.j_minus = IndexSet{4, 5};
    }
    for (int c : {4, 2, 3, 1, 2, 1})
        system.speeds.push_back(Scalar::integer(c));
    system.tol = 0.0;
    return system;
}

} // namespace

BoundarySystem worked_example_negative() { return worked_example(false); }
BoundarySystem worked_example_positive() { return worked_example(true); }

BinaryMatrix appendix_line_adjacency() {
    return BinaryMatrix::from_rows({
        {0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0},
        {1, 1, 0, 1, 0, 0, 0},
        {0, 0, 1, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 0},
        {0, 0, 1, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 0},
    });
}

BinaryMatrix appendix_a_plus() {
    return BinaryMatrix::from_rows({
        {1, 1, 0, 1, 0, 0, 0},
        {0, 0, 1, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 0},
    });
}

BinaryMatrix appendix_a_minus() {
    return BinaryMatrix::from_rows({
        {0, 0, 1, 0, 0, 0, 0},
        {0, 0, 0, 1, 0, 1, 0},
        {0, 0, 0, 0, 0, 0, 0},
    });
}

BinaryMatrix appendix_single_a_plus() {
    return BinaryMatrix::from_rows({
        {1, 1, 0, 1, 0, 0, 0},
        {0, 0, 1, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 1, 1},
    });
}

BinaryMatrix appendix_single_a_minus() {
    return BinaryMatrix::from_rows({
        {0, 0, 1, 0, 0, 0, 0},
        {0, 0, 0, 1, 0, 1, 0},
        {1, 1, 0, 0, 1, 0, 1},
        {0, 0, 0, 0, 0, 0, 0},
    });
}

IntMatrix appendix_single_host() {
    return IntMatrix::from_rows({
        {0, 1, 2, 0},
        {1, 0, 1, 0},
        {0, 0, 0, 0},
        {0, 1, 1, 0},
    });
}

BinaryMatrix appendix_multi_a_plus() {
    return BinaryMatrix::from_rows({
        {1, 1, 0, 1, 0, 0, 0},
        {0, 0, 1, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 1},
        {0, 0, 0, 0, 0, 1, 0},
    });
}

BinaryMatrix appendix_multi_a_minus() {
    return BinaryMatrix::from_rows({
        {0, 0, 1, 0, 0, 0, 0},
        {0, 0, 0, 1, 0, 1, 0},
        {1, 0, 0, 0, 0, 0, 1},
        {0, 1, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0},
    });
}

IntMatrix appendix_multi_host() {
    return IntMatrix::from_rows({
        {0, 1, 1, 1, 0, 0, 0},
        {1, 0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0},
        {0, 0, 1, 0, 0, 0, 0},
        {0, 1, 0, 0, 0, 0, 0},
    });
}

MetricGraphProblem saint_venant_star() {
    // g = 10; H = (1.6, 0.9, 0.4); V = (5, 4, 3): lambda = V +- sqrt(g H).
    MetricGraphProblem problem;
    problem.vertex_labels = {"v0", "v1", "v2", "v3"};

    auto channel = [](int tail, int head, double h, double s, double v) {
        EdgeSpec edge;
        edge.tail = tail;
        edge.head = head;
        edge.x0_at_tail = true;
        edge.lambda = {v + s, v - s};
        edge.f_matrix = RealMatrix::from_rows({
            {Scalar::real(h), Scalar::real(h)},
            {Scalar::real(s), Scalar::real(-s)},
        });
        return edge;
    };
    problem.edges.push_back(channel(0, 1, 1.6, 4.0, 5.0));
    problem.edges.push_back(channel(1, 2, 0.9, 3.0, 4.0));
    problem.edges.push_back(channel(1, 3, 0.4, 2.0, 3.0));

    problem.vertex_conditions[0] = RealMatrix::from_int_rows({
        {1, 0},
        {0, 1},
    });
    // Continuity of both traces across the hub: p^j(0) = p^1(1) for j = 2, 3.
    problem.vertex_conditions[1] = RealMatrix::from_int_rows({
        {-1, 0, 1, 0, 0, 0},
        {0, -1, 0, 1, 0, 0},
        {-1, 0, 0, 0, 1, 0},
        {0, -1, 0, 0, 0, 1},
    });
    return problem;
}

BoundarySystem source_chain_system() {
    BoundarySystem system;
    system.m = 2;
    system.xi_out = RealMatrix::from_int_rows({
        {1, 1, 0, 0},
        {1, -1, 0, 0},
        {0, 0, 1, 1},
        {0, 0, 1, -1},
    });
    system.xi_in = RealMatrix::from_int_rows({
        {0, 0, -1, -1},
        {0, 0, -1, 1},
        {0, 0, 0, 0},
        {0, 0, 0, 0},
    });
    system.j_plus = IndexSet{0, 1, 2, 3};
    system.j_minus = IndexSet{};
    for (int c : {3, 1, 2, 1})
        system.speeds.push_back(Scalar::integer(c));
    system.tol = 0.0;
    return system;
}

BoundarySystem two_source_system() {
    BoundarySystem system;
    system.m = 2;
    system.xi_out = RealMatrix::from_int_rows({
        {1, 1, 0, 0},
        {1, -1, 0, 0},
        {0, 0, 1, 1},
        {0, 0, 1, -1},
    });
    system.xi_in = RealMatrix(4, 4);
    system.j_plus = IndexSet{0, 1, 2, 3};
    system.j_minus = IndexSet{};
    for (int c : {2, 1, 2, 1})
        system.speeds.push_back(Scalar::integer(c));
    system.tol = 0.0;
    return system;
}

MetricGraphProblem decoupled_hub_problem() {
    MetricGraphProblem problem;
    problem.vertex_labels = {"hub", "a", "b"};

    auto wire = [](int tail, int head) {
        EdgeSpec edge;
        edge.tail = tail;
        edge.head = head;
        edge.x0_at_tail = true;
        edge.m_matrix = RealMatrix::from_int_rows({{0, 1}, {1, 0}});
        return edge;
    };
    problem.edges.push_back(wire(0, 1));
    problem.edges.push_back(wire(0, 2));

    // p^1_1(hub) = 0 and p^2_2(hub) = 0: in Riemann terms the hat patterns of
    // both psi blocks are the identity, so the hub decouples.
    problem.vertex_conditions[0] = RealMatrix::from_int_rows({
        {1, 0, 0, 0},
        {0, 0, 0, 1},
    });
    // One dense trace condition at each leaf.
    problem.vertex_conditions[1] = RealMatrix::from_int_rows({{0, 1}});
    problem.vertex_conditions[2] = RealMatrix::from_int_rows({{0, 1}});
    return problem;
}

} // namespace fixtures
