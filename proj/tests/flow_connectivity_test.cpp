#include "netreal/flow_connectivity.hpp"

#include "netreal/binmat.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <stdexcept>

#include <random>

using namespace netreal;

namespace {

VertexBoundaryBlock block_from_patterns(std::mt19937& rng, const BinaryMatrix& out_pattern,
                                        const BinaryMatrix& in_pattern) {
    std::vector<int> out_ids, in_ids;
    for (int c = 0; c < out_pattern.cols(); ++c)
        out_ids.push_back(c);
    for (int c = 0; c < in_pattern.cols(); ++c)
        in_ids.push_back(c);
    return make_vertex_block(oracles::values_on_pattern(rng, out_pattern),
                             oracles::values_on_pattern(rng, in_pattern), out_ids, in_ids, 0.0);
}

BinaryMatrix ones(int rows, int cols) {
    BinaryMatrix out(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            out.set(r, c, 1);
    return out;
}

} // namespace

TEST_CASE("block construction enforces a usable out block") {
    RealMatrix good = RealMatrix::from_int_rows({{1, 2}, {3, 4}});
    RealMatrix in = RealMatrix::from_int_rows({{1}, {1}});
    CHECK_NOTHROW(make_vertex_block(good, in, {0, 1}, {2}, 0.0));

    RealMatrix zero_row = RealMatrix::from_int_rows({{1, 2}, {0, 0}});
    CHECK_THROWS_AS(make_vertex_block(zero_row, in, {0, 1}, {2}, 0.0), std::invalid_argument);

    RealMatrix zero_col = RealMatrix::from_int_rows({{1, 0}, {3, 0}});
    CHECK_THROWS_AS(make_vertex_block(zero_col, in, {0, 1}, {2}, 0.0), std::invalid_argument);

    RealMatrix short_in = RealMatrix::from_int_rows({{1}});
    CHECK_THROWS_AS(make_vertex_block(good, short_in, {0, 1}, {2}, 0.0), std::invalid_argument);
}

TEST_CASE("transient connectivity") {
    std::mt19937 rng(5);

    // A single row touching every arc couples everything.
    VertexBoundaryBlock dense = block_from_patterns(rng, ones(1, 3), ones(1, 2));
    CHECK(transient_connectivity(dense) == ones(3, 2));

    // Decoupled trace conditions: identity patterns on both sides.
    BinaryMatrix eye = BinaryMatrix::from_rows({{1, 0}, {0, 1}});
    VertexBoundaryBlock decoupled = block_from_patterns(rng, eye, eye);
    CHECK(transient_connectivity(decoupled) == eye);

    VertexBoundaryBlock tiny = block_from_patterns(rng, ones(1, 1), ones(1, 1));
    CHECK(transient_connectivity(tiny) == ones(1, 1));
}

TEST_CASE("source connectivity matches the displayed coupling pattern") {
    std::mt19937 rng(9);
    RealMatrix xi_s_out = RealMatrix::from_int_rows({
        {0, 1, 1, 0},
        {1, 0, 0, 0},
        {1, 1, 0, 0},
        {0, 0, 1, 1},
    });
    VertexBoundaryBlock block =
        make_vertex_block(xi_s_out, RealMatrix(4, 0), {0, 1, 2, 3}, {}, 0.0);
    BinaryMatrix expected = BinaryMatrix::from_rows({
        {1, 1, 0, 0},
        {1, 1, 1, 0},
        {0, 1, 1, 1},
        {0, 0, 1, 1},
    });
    CHECK(source_connectivity(block) == expected);

    BinaryMatrix eye = BinaryMatrix::from_rows({{1, 0}, {0, 1}});
    VertexBoundaryBlock identity_block = block_from_patterns(rng, eye, BinaryMatrix(2, 0));
    CHECK(source_connectivity(identity_block) == eye);

    VertexBoundaryBlock with_inflow = block_from_patterns(rng, eye, ones(2, 1));
    CHECK_THROWS_AS(source_connectivity(with_inflow), std::invalid_argument);
}

TEST_CASE("connectivity lemmas agree with the direct double loop") {
    std::mt19937 rng(31);
    for (int round = 0; round < 200; ++round) {
        std::uniform_int_distribution<int> dim(1, 4);
        int k = dim(rng);
        int p = dim(rng);
        int q = dim(rng);
        BinaryMatrix out_pattern = oracles::random_binary(rng, k, p, 0.6);
        bool usable = true;
        for (int r = 0; r < k; ++r)
            usable = usable && !out_pattern.row_is_zero(r);
        for (int c = 0; c < p; ++c)
            usable = usable && !out_pattern.col_is_zero(c);
        if (!usable)
            continue;
        BinaryMatrix in_pattern = oracles::random_binary(rng, k, q, 0.6);
        VertexBoundaryBlock block = block_from_patterns(rng, out_pattern, in_pattern);
        CHECK(transient_connectivity(block) ==
              oracles::direct_connectivity(out_pattern, in_pattern));

        VertexBoundaryBlock source = block_from_patterns(rng, out_pattern, BinaryMatrix(k, 0));
        BinaryMatrix conn = source_connectivity(source);
        CHECK(conn == oracles::direct_connectivity(out_pattern, out_pattern));
        CHECK(conn.is_symmetric());
        for (int i = 0; i < conn.rows(); ++i)
            CHECK(conn.at(i, i) == 1);
    }
}

TEST_CASE("full connectivity verdicts") {
    CHECK_FALSE(full_connectivity_failure(ones(2, 3)));

    auto gap = full_connectivity_failure(BinaryMatrix::from_rows({{1, 0}, {0, 1}}));
    REQUIRE(gap.has_value());
    CHECK(gap->row == 0);
    CHECK(gap->col == 1);

    // Star junction with continuity of both traces at the hub: every incoming
    // trace reaches every outgoing one.
    RealMatrix psi_out = RealMatrix::from_rows({
        {Scalar::real(0.9), Scalar::real(0.9), Scalar::real(0), Scalar::real(0)},
        {Scalar::real(3), Scalar::real(-3), Scalar::real(0), Scalar::real(0)},
        {Scalar::real(0), Scalar::real(0), Scalar::real(0.4), Scalar::real(0.4)},
        {Scalar::real(0), Scalar::real(0), Scalar::real(2), Scalar::real(-2)},
    });
    RealMatrix psi_in = RealMatrix::from_rows({
        {Scalar::real(-1.6), Scalar::real(-1.6)},
        {Scalar::real(-4), Scalar::real(4)},
        {Scalar::real(-1.6), Scalar::real(-1.6)},
        {Scalar::real(-4), Scalar::real(4)},
    });
    VertexBoundaryBlock star =
        make_vertex_block(psi_out, psi_in, {1, 2, 3, 4}, {5, 6}, 1e-12);
    CHECK_FALSE(full_connectivity_failure(transient_connectivity(star)));
}

TEST_CASE("irreducibility verdicts") {
    RealMatrix xi_s_out = RealMatrix::from_int_rows({
        {0, 1, 1, 0},
        {1, 0, 0, 0},
        {1, 1, 0, 0},
        {0, 0, 1, 1},
    });
    VertexBoundaryBlock block =
        make_vertex_block(xi_s_out, RealMatrix(4, 0), {0, 1, 2, 3}, {}, 0.0);
    CHECK(check_irreducible(source_connectivity(block)).irreducible);

    BinaryMatrix eye3 = BinaryMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    IrreducibilityResult split = check_irreducible(eye3);
    CHECK_FALSE(split.irreducible);
    CHECK(split.components.size() == 3);

    BinaryMatrix blocks = BinaryMatrix::from_rows(
        {{1, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, 1}});
    IrreducibilityResult two = check_irreducible(blocks);
    CHECK_FALSE(two.irreducible);
    REQUIRE(two.components.size() == 2);
    CHECK(two.components[0] == IndexSet{0, 1});
    CHECK(two.components[1] == IndexSet{2, 3});
}

TEST_CASE("kirchhoff row detection") {
    std::mt19937 rng(41);

    // One conserved-quantity row over every trace plus decoupled remainders.
    RealMatrix psi_out = RealMatrix::from_int_rows({{1, 1}, {1, 0}});
    RealMatrix psi_in = RealMatrix::from_int_rows({{1, 1}, {0, 0}});
    VertexBoundaryBlock nicaise = make_vertex_block(psi_out, psi_in, {0, 1}, {2, 3}, 0.0);
    auto row = kirchhoff_row(nicaise);
    REQUIRE(row.has_value());
    CHECK(*row == 0);

    BinaryMatrix eye = BinaryMatrix::from_rows({{1, 0}, {0, 1}});
    VertexBoundaryBlock decoupled = block_from_patterns(rng, eye, eye);
    CHECK_FALSE(kirchhoff_row(decoupled).has_value());

    for (int round = 0; round < 50; ++round) {
        std::uniform_int_distribution<int> dim(1, 4);
        int k = dim(rng) + 1;
        int p = dim(rng);
        int q = dim(rng);
        std::uniform_int_distribution<int> where(0, k - 1);
        int dense_row = where(rng);
        BinaryMatrix out_pattern = oracles::random_binary(rng, k, p, 0.5);
        BinaryMatrix in_pattern = oracles::random_binary(rng, k, q, 0.5);
        for (int c = 0; c < p; ++c)
            out_pattern.set(dense_row, c, 1);
        for (int c = 0; c < q; ++c)
            in_pattern.set(dense_row, c, 1);
        bool usable = true;
        for (int r = 0; r < k; ++r)
            usable = usable && !out_pattern.row_is_zero(r);
        if (!usable)
            continue;
        VertexBoundaryBlock block = block_from_patterns(rng, out_pattern, in_pattern);
        auto found = kirchhoff_row(block);
        REQUIRE(found.has_value());
        CHECK(*found <= dense_row);
        // Sufficiency: a fully dense row forces full connectivity.
        CHECK_FALSE(full_connectivity_failure(transient_connectivity(block)));
    }
}
