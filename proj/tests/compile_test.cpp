#include "netreal/compile.hpp"

#include "netreal/binmat.hpp"
#include "netreal/realize.hpp"
#include "netreal/roundtrip.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

using namespace netreal;

namespace {

double column_alignment(const EdgeEigen& eig, int slot, double x, double y) {
    // |cross product| of the eigenvector column with (x, y).
    return std::fabs(eig.f[0][slot] * y - eig.f[1][slot] * x);
}

MetricGraphProblem single_edge_problem() {
    MetricGraphProblem problem;
    problem.vertex_labels = {"a", "b"};
    EdgeSpec edge;
    edge.tail = 0;
    edge.head = 1;
    edge.x0_at_tail = true;
    edge.lambda = {2.0, 1.0};
    edge.f_matrix = RealMatrix::from_int_rows({{1, 0}, {0, 1}});
    problem.edges.push_back(edge);
    problem.vertex_conditions[0] = RealMatrix::from_int_rows({{1, 0}, {0, 1}});
    return problem;
}

} // namespace

TEST_CASE("diagonalize shallow-water transport") {
    // M = [[V, H], [g, V]] with g = 10, H = 1.6, V = 5: wave speeds V +- 4.
    RealMatrix m = RealMatrix::from_rows({
        {Scalar::real(5.0), Scalar::real(1.6)},
        {Scalar::real(10.0), Scalar::real(5.0)},
    });
    EdgeEigen eig = diagonalize_edge(m, 1e-12);
    CHECK(eig.lambda_plus == doctest::Approx(9.0));
    CHECK(eig.lambda_minus == doctest::Approx(1.0));
    CHECK(column_alignment(eig, 0, 1.6, 4.0) == doctest::Approx(0.0));
    CHECK(column_alignment(eig, 1, 1.6, -4.0) == doctest::Approx(0.0));
    CHECK(eig.f[0][0] > 0.0);
    CHECK(eig.f[0][1] > 0.0);
    CHECK(std::hypot(eig.f[0][0], eig.f[1][0]) == doctest::Approx(1.0));
}

TEST_CASE("diagonalize the symmetric wave matrix") {
    RealMatrix m = RealMatrix::from_int_rows({{0, 1}, {1, 0}});
    EdgeEigen eig = diagonalize_edge(m, 1e-12);
    CHECK(eig.lambda_plus == doctest::Approx(1.0));
    CHECK(eig.lambda_minus == doctest::Approx(-1.0));
    CHECK(column_alignment(eig, 0, 1.0, 1.0) == doctest::Approx(0.0));
    CHECK(column_alignment(eig, 1, 1.0, -1.0) == doctest::Approx(0.0));
}

TEST_CASE("diagonalize keeps diagonal matrices aligned with the axes") {
    RealMatrix m = RealMatrix::from_int_rows({{2, 0}, {0, -3}});
    EdgeEigen eig = diagonalize_edge(m, 1e-12);
    CHECK(eig.lambda_plus == doctest::Approx(2.0));
    CHECK(eig.lambda_minus == doctest::Approx(-3.0));
    CHECK(eig.f[0][0] == doctest::Approx(1.0));
    CHECK(eig.f[1][0] == doctest::Approx(0.0));
    CHECK(eig.f[0][1] == doctest::Approx(0.0));
    CHECK(eig.f[1][1] == doctest::Approx(1.0));
}

TEST_CASE("diagonalize rejects non-strictly-hyperbolic matrices") {
    CHECK_THROWS_AS(diagonalize_edge(RealMatrix::from_int_rows({{1, 0}, {0, 1}}), 1e-12),
                    std::invalid_argument);
    CHECK_THROWS_AS(diagonalize_edge(RealMatrix::from_int_rows({{0, -1}, {1, 0}}), 1e-12),
                    std::invalid_argument);
}

TEST_CASE("diagonalization residual stays small on random hyperbolic matrices") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> entry(-4.0, 4.0);
    int tested = 0;
    while (tested < 100) {
        double a = entry(rng), b = entry(rng), c = entry(rng), d = entry(rng);
        if ((a - d) * (a - d) + 4 * b * c < 1e-3)
            continue;
        ++tested;
        RealMatrix m = RealMatrix::from_rows({{Scalar::real(a), Scalar::real(b)},
                                              {Scalar::real(c), Scalar::real(d)}});
        EdgeEigen eig = diagonalize_edge(m, 1e-12);
        double norm = std::max({std::fabs(a), std::fabs(b), std::fabs(c), std::fabs(d)});
        for (int slot = 0; slot < 2; ++slot) {
            double lambda = slot == 0 ? eig.lambda_plus : eig.lambda_minus;
            double r0 = a * eig.f[0][slot] + b * eig.f[1][slot] - lambda * eig.f[0][slot];
            double r1 = c * eig.f[0][slot] + d * eig.f[1][slot] - lambda * eig.f[1][slot];
            CHECK(std::hypot(r0, r1) <= 1e-10 * std::max(norm, 1.0));
        }
        CHECK(eig.lambda_plus > eig.lambda_minus);
    }
}

TEST_CASE("classification of the star problem") {
    MetricGraphProblem star = fixtures::saint_venant_star();
    Classification cls = classify(star);
    CHECK(cls.alpha == std::vector<int>{2, 2, 2});
    // Every eigenvalue is positive, so all six components run 0 -> 1.
    CHECK(cls.j_plus == IndexSet::range(6));
    CHECK(cls.j_minus.empty());
    CHECK(cls.roles[0] == VertexRole::source);
    CHECK(cls.roles[1] == VertexRole::transient);
    CHECK(cls.roles[2] == VertexRole::sink);
    CHECK(cls.roles[3] == VertexRole::sink);
    CHECK(cls.k_v == std::vector<int>{2, 4, 0, 0});
    CHECK(count_outgoing(star, cls, 1) == 4);

    // Hub: both invariants of the feeding edge come in, both invariants of
    // each outgoing channel leave.
    CHECK(cls.outgoing_components[1] == std::vector<int>{1, 4, 2, 5});
    CHECK(cls.incoming_components[1] == std::vector<int>{0, 3});
}

TEST_CASE("classification covers the direction table") {
    auto one_edge = [](double lp, double lm, bool x0_at_tail) {
        MetricGraphProblem problem;
        problem.vertex_labels = {"a", "b"};
        EdgeSpec edge;
        edge.tail = 0;
        edge.head = 1;
        edge.x0_at_tail = x0_at_tail;
        edge.lambda = {lp, lm};
        edge.f_matrix = RealMatrix::from_int_rows({{1, 0}, {0, 1}});
        problem.edges.push_back(edge);
        return problem;
    };

    // Mixed signs: the fast invariant leaves the parameter-0 endpoint, the
    // slow one leaves the other endpoint.
    Classification mixed = classify(one_edge(2.0, -1.0, true));
    CHECK(mixed.outgoing_components[0] == std::vector<int>{0});
    CHECK(mixed.outgoing_components[1] == std::vector<int>{1});
    CHECK(mixed.roles[0] == VertexRole::transient);
    CHECK(mixed.k_v == std::vector<int>{1, 1});

    // Both positive: everything leaves the parameter-0 endpoint.
    Classification positive = classify(one_edge(2.0, 1.0, true));
    CHECK(positive.outgoing_components[0] == std::vector<int>{0, 1});
    CHECK(positive.outgoing_components[1].empty());
    CHECK(positive.roles[0] == VertexRole::source);
    CHECK(positive.roles[1] == VertexRole::sink);

    // Both negative: everything leaves the parameter-1 endpoint.
    Classification negative = classify(one_edge(-1.0, -2.0, true));
    CHECK(negative.outgoing_components[0].empty());
    CHECK(negative.outgoing_components[1] == std::vector<int>{0, 1});
    CHECK(negative.roles[0] == VertexRole::sink);
    CHECK(negative.roles[1] == VertexRole::source);

    CHECK_THROWS_AS(classify(one_edge(1.0, 0.0, true)), std::invalid_argument);
}

TEST_CASE("contraction selects the right eigenvector columns") {
    MetricGraphProblem star = fixtures::saint_venant_star();
    Classification cls = classify(star);

    VertexAssembly hub = build_contraction(star, cls, 1);
    CHECK(hub.k_v == 4);
    CHECK(hub.f_out.rows() == 6);
    CHECK(hub.f_out.cols() == 4);
    CHECK(hub.f_in.cols() == 2);
    CHECK(hub.out_components == std::vector<int>{1, 4, 2, 5});
    CHECK(hub.in_components == std::vector<int>{0, 3});
    // Edge 1 contributes nothing outgoing at the hub, so its two rows of the
    // outgoing trace map vanish.
    for (int c = 0; c < 4; ++c) {
        CHECK(hub.f_out.at(0, c).value() == doctest::Approx(0.0));
        CHECK(hub.f_out.at(1, c).value() == doctest::Approx(0.0));
    }
    // Incoming block carries the feeding edge's eigenvectors.
    CHECK(hub.f_in.at(0, 0).value() == doctest::Approx(1.6));
    CHECK(hub.f_in.at(1, 0).value() == doctest::Approx(4.0));
    CHECK(hub.f_in.at(1, 1).value() == doctest::Approx(-4.0));

    VertexAssembly sink = build_contraction(star, cls, 2);
    CHECK(sink.k_v == 0);
    CHECK(sink.f_out.cols() == 0);
    CHECK(sink.f_in.cols() == 2);
}

TEST_CASE("mixed-sign edges contribute half blocks to the trace maps") {
    MetricGraphProblem problem;
    problem.vertex_labels = {"a", "b"};
    EdgeSpec edge;
    edge.tail = 0;
    edge.head = 1;
    edge.x0_at_tail = true;
    edge.lambda = {2.0, -1.0};
    edge.f_matrix = RealMatrix::from_int_rows({{2, 1}, {1, 3}});
    problem.edges.push_back(edge);
    problem.vertex_conditions[0] = RealMatrix::from_int_rows({{1, 1}});
    problem.vertex_conditions[1] = RealMatrix::from_int_rows({{1, -1}});
    Classification cls = classify(problem);

    // At the parameter-0 endpoint the fast eigenvector column is outgoing,
    // the slow one incoming; roles swap at the other endpoint.
    VertexAssembly tail = build_contraction(problem, cls, 0);
    REQUIRE(tail.f_out.cols() == 1);
    CHECK(tail.f_out.at(0, 0).value() == doctest::Approx(2.0));
    CHECK(tail.f_out.at(1, 0).value() == doctest::Approx(1.0));
    CHECK(tail.f_in.at(0, 0).value() == doctest::Approx(1.0));
    CHECK(tail.f_in.at(1, 0).value() == doctest::Approx(3.0));
    CHECK(tail.out_components == std::vector<int>{0});
    CHECK(tail.in_components == std::vector<int>{1});

    VertexAssembly head = build_contraction(problem, cls, 1);
    CHECK(head.f_out.at(0, 0).value() == doctest::Approx(1.0));
    CHECK(head.f_out.at(1, 0).value() == doctest::Approx(3.0));
    CHECK(head.out_components == std::vector<int>{1});
    CHECK(head.in_components == std::vector<int>{0});
}

TEST_CASE("wellposedness of the hub and a defective variant") {
    MetricGraphProblem star = fixtures::saint_venant_star();
    Classification cls = classify(star);
    WellposedResult good = wellposed(build_contraction(star, cls, 1));
    CHECK(good.ok);
    CHECK(std::fabs(good.det) == doctest::Approx(8.64));

    MetricGraphProblem broken = star;
    // Two identical condition rows are singular regardless of the traces.
    broken.vertex_conditions[1] = RealMatrix::from_int_rows({
        {-1, 0, 1, 0, 0, 0},
        {-1, 0, 1, 0, 0, 0},
        {-1, 0, 0, 0, 1, 0},
        {0, -1, 0, 0, 0, 1},
    });
    Classification broken_cls = classify(broken);
    WellposedResult bad = wellposed(build_contraction(broken, broken_cls, 1));
    CHECK_FALSE(bad.ok);
}

TEST_CASE("solved outgoing map satisfies the boundary rows") {
    std::mt19937 rng(19);
    for (int round = 0; round < 40; ++round) {
        auto [problem, vertex] = oracles::random_wellposed_vertex(rng);
        Classification cls = classify(problem);
        VertexAssembly assembly = build_contraction(problem, cls, vertex);
        WellposedResult wp = wellposed(assembly);
        REQUIRE(wp.ok);
        int q = assembly.psi_in.cols();
        std::uniform_real_distribution<double> trace(-2.0, 2.0);
        std::vector<double> u_in(static_cast<std::size_t>(q));
        for (double& u : u_in)
            u = trace(rng);
        // u_out = solved_map * u_in must satisfy psi_out u_out + psi_in u_in = 0.
        double scale = 0.0, residual = 0.0;
        for (int r = 0; r < assembly.k_v; ++r) {
            double acc = 0.0;
            for (int c = 0; c < assembly.k_v; ++c) {
                double u_out = 0.0;
                for (int j = 0; j < q; ++j)
                    u_out += wp.solved_map.at(c, j).value() * u_in[static_cast<std::size_t>(j)];
                acc += assembly.psi_out.at(r, c).value() * u_out;
                scale += std::fabs(assembly.psi_out.at(r, c).value() * u_out);
            }
            for (int j = 0; j < q; ++j) {
                acc += assembly.psi_in.at(r, j).value() * u_in[static_cast<std::size_t>(j)];
                scale += std::fabs(assembly.psi_in.at(r, j).value() *
                                   u_in[static_cast<std::size_t>(j)]);
            }
            residual += std::fabs(acc);
        }
        CHECK(residual <= 1e-9 * std::max(scale, 1.0));
    }
}

TEST_CASE("global assembly of the smallest problem") {
    CompiledSystem compiled = assemble_global(single_edge_problem());
    REQUIRE(compiled.system.has_value());
    const BoundarySystem& system = *compiled.system;
    CHECK(system.m == 1);
    CHECK(system.xi_out.rows() == 2);
    CHECK(system.j_plus == IndexSet{0, 1});
    CHECK(system.j_minus.empty());
    // The sink end imposes nothing: the inflow matrix is empty.
    CHECK(hat(system.xi_in, system.tol) == BinaryMatrix(2, 2));
    CHECK(hat(system.xi_out, system.tol) ==
          BinaryMatrix::from_rows({{1, 0}, {0, 1}}));
}

TEST_CASE("global assembly stacks vertex blocks by component") {
    MetricGraphProblem star = fixtures::saint_venant_star();
    CompiledSystem compiled = assemble_global(star);
    REQUIRE(compiled.system.has_value());
    const BoundarySystem& system = *compiled.system;
    CHECK(system.m == 3);
    CHECK(compiled.assembled_vertices == std::vector<int>{0, 1});

    // Row blocks: 2 rows from the source, 4 from the hub. Column = component.
    BinaryMatrix out_pattern = hat(system.xi_out, system.tol);
    CHECK(out_pattern == BinaryMatrix::from_rows({
                             {1, 0, 0, 1, 0, 0},
                             {1, 0, 0, 1, 0, 0},
                             {0, 1, 0, 0, 1, 0},
                             {0, 1, 0, 0, 1, 0},
                             {0, 0, 1, 0, 0, 1},
                             {0, 0, 1, 0, 0, 1},
                         }));
    BinaryMatrix in_pattern = hat(system.xi_in, system.tol);
    CHECK(in_pattern == BinaryMatrix::from_rows({
                            {0, 0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 0, 0},
                            {1, 0, 0, 1, 0, 0},
                            {1, 0, 0, 1, 0, 0},
                            {1, 0, 0, 1, 0, 0},
                            {1, 0, 0, 1, 0, 0},
                        }));
}

TEST_CASE("ill-posed vertices block the assembly") {
    MetricGraphProblem star = fixtures::saint_venant_star();
    star.vertex_conditions[1] = RealMatrix::from_int_rows({
        {-1, 0, 1, 0, 0, 0},
        {-1, 0, 1, 0, 0, 0},
        {-1, 0, 0, 0, 1, 0},
        {0, -1, 0, 0, 0, 1},
    });
    CompiledSystem compiled = assemble_global(star);
    CHECK_FALSE(compiled.all_wellposed());
    CHECK_FALSE(compiled.system.has_value());
}

TEST_CASE("vertex assumption checks flag the decoupled hub") {
    MetricGraphProblem hub = fixtures::decoupled_hub_problem();
    CompiledSystem compiled = assemble_global(hub);
    // Identity psi blocks are invertible: wellposedness holds even though the
    // flow decouples.
    CHECK(compiled.all_wellposed());
    REQUIRE(compiled.system.has_value());
    std::vector<VertexCheck> checks = check_vertex_assumptions(compiled, hub.tol);
    REQUIRE(checks.size() == 3);
    CHECK(checks[0].vertex == 0);
    CHECK(checks[0].ass1_ok);
    CHECK_FALSE(checks[0].connectivity_ok);
    CHECK(checks[1].connectivity_ok);
    CHECK(checks[2].connectivity_ok);
    CHECK_FALSE(checks[0].kirchhoff_row.has_value());
    CHECK(checks[1].kirchhoff_row.has_value());
}

TEST_CASE("the coupling pattern is the permuted block-diagonal connectivity") {
    std::mt19937 rng(61);
    for (int round = 0; round < 10; ++round) {
        MetricGraphProblem problem = oracles::random_graph_problem(rng);
        CompiledSystem compiled = assemble_global(problem);
        REQUIRE(compiled.system.has_value());
        const BoundarySystem& system = *compiled.system;

        // Rebuild the pattern from the per-vertex blocks: component c_out
        // couples to component c_in iff the vertex block couples the two
        // columns. Everything across vertex blocks stays zero.
        int size = 2 * system.m;
        BinaryMatrix expected(size, size);
        for (const VertexAssembly& assembly : compiled.assemblies) {
            BinaryMatrix conn = pattern_product(hat(assembly.psi_out, system.tol).transposed(),
                                                hat(assembly.psi_in, system.tol));
            for (int i = 0; i < conn.rows(); ++i)
                for (int j = 0; j < conn.cols(); ++j)
                    expected.set(assembly.out_components[static_cast<std::size_t>(i)],
                                 assembly.in_components[static_cast<std::size_t>(j)],
                                 conn.at(i, j));
        }
        AssumptionCheck check = check_assumptions(system);
        CHECK(check.line_adjacency == expected);
        CHECK_FALSE(recognize_line_digraph(check.line_adjacency).has_value());
    }
}

TEST_CASE("compiled systems satisfy the flat assumptions and realize back") {
    std::mt19937 rng(29);
    for (int round = 0; round < 25; ++round) {
        MetricGraphProblem problem = oracles::random_graph_problem(rng);
        CompiledSystem compiled = assemble_global(problem);
        REQUIRE(compiled.system.has_value());
        AssumptionCheck check = check_assumptions(*compiled.system);
        CHECK(check.ok());

        RealizeOutcome outcome = realize(*compiled.system);
        REQUIRE(outcome.status == RealizeOutcome::Status::realizable);
        RoundTripResult comparison =
            compare_realization(problem, compiled.classification, *outcome.network);
        CHECK(comparison.ok);
        if (!comparison.ok)
            MESSAGE(comparison.mismatch);

        const RealizedNetwork& network = *outcome.network;
        for (const RealizedEdge& edge : network.edges) {
            bool first_plus = network.j_plus.contains(edge.comp_first);
            bool second_plus = network.j_plus.contains(edge.comp_second);
            if (edge.kind == RealizedEdge::Kind::countercurrent) {
                CHECK(first_plus);
                CHECK_FALSE(second_plus);
            } else {
                CHECK(first_plus == second_plus);
                CHECK(network.speeds[static_cast<std::size_t>(edge.comp_first)].value() >
                      network.speeds[static_cast<std::size_t>(edge.comp_second)].value());
            }
        }
    }
}

TEST_CASE("realizable without recovery when sink pairings are ambiguous") {
    std::mt19937 rng(37);
    oracles::RandomProblemOptions options;
    options.unique_sinks = false;
    for (int round = 0; round < 15; ++round) {
        MetricGraphProblem problem = oracles::random_graph_problem(rng, options);
        CompiledSystem compiled = assemble_global(problem);
        REQUIRE(compiled.system.has_value());
        RealizeOutcome outcome = realize(*compiled.system);
        CHECK(outcome.status == RealizeOutcome::Status::realizable);
    }
}
