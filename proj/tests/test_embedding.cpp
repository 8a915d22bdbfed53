#include "dmdd/embedding.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <string>

using namespace dmdd;
using dmdd::test::random_real;

namespace {

Trajectory scalar_traj(std::initializer_list<double> values) {
    RealMatrix m(1, static_cast<Index>(values.size()));
    Index j = 0;
    for (double v : values) {
        m(0, j++) = v;
    }
    return Trajectory{m, 1.0};
}

}  // namespace

TEST_CASE("hankel_embed: smallest scalar case") {
    const auto emb = embedding::hankel_embed(scalar_traj({1, 2, 3, 4}), {1});
    RealMatrix expected(2, 3);
    expected << 1, 2, 3, 2, 3, 4;
    CHECK(emb.values == expected);
    CHECK(emb.base_dim == 1);
    CHECK(emb.delays == 1);
}

TEST_CASE("hankel_embed: zero delays is the identity") {
    const Trajectory traj{random_real(3, 8, 42), 50.0};
    const auto emb = embedding::hankel_embed(traj, {0});
    CHECK(emb.values == traj.values);
    CHECK(emb.sample_rate_hz == traj.sample_rate_hz);
}

TEST_CASE("hankel_embed: m=2 n=5 d=2 against direct indexing") {
    const Trajectory traj{random_real(2, 5, 7), 1.0};
    const auto emb = embedding::hankel_embed(traj, {2});
    REQUIRE(emb.values.rows() == 6);
    REQUIRE(emb.values.cols() == 3);
    for (Index j = 0; j < 3; ++j) {
        for (Index b = 0; b <= 2; ++b) {
            for (Index i = 0; i < 2; ++i) {
                CHECK(emb.values(b * 2 + i, j) == traj.values(i, j + b));
            }
        }
    }
}

TEST_CASE("hankel_embed: too many delays reports the feasible maximum") {
    const Trajectory traj{random_real(1, 4, 9), 1.0};
    try {
        embedding::hankel_embed(traj, {3});
        FAIL("expected TooManyDelaysError");
    } catch (const TooManyDelaysError& e) {
        CHECK(std::string(e.what()).find("maximum feasible d=2") != std::string::npos);
    }
}

TEST_CASE("hankel_embed: shape law and shift structure") {
    for (auto [m, n, d] : {std::tuple<Index, Index, Index>{1, 6, 4},
                           {3, 20, 0},
                           {2, 11, 5},
                           {5, 7, 5}}) {
        const Trajectory traj{random_real(m, n, 30 + static_cast<std::uint64_t>(d)), 1.0};
        const auto emb = embedding::hankel_embed(traj, {d});
        CHECK(emb.values.rows() == (d + 1) * m);
        CHECK(emb.values.cols() == n - d);
        // top block row equals frames 1..n-d, bitwise
        CHECK(emb.values.topRows(m) == traj.values.leftCols(n - d));
        // column j+1 block b equals column j block b+1
        for (Index j = 0; j + 1 < emb.values.cols(); ++j) {
            for (Index b = 0; b < d; ++b) {
                CHECK(emb.values.block(b * m, j + 1, m, 1) ==
                      emb.values.block((b + 1) * m, j, m, 1));
            }
        }
    }
}

TEST_CASE("extract_block: examples and round trip with the embedding") {
    RealVector state(4);
    state << 1, 2, 3, 4;
    const RealVector block = embedding::extract_block(state, 1, 2);
    CHECK(block.size() == 2);
    CHECK(block[0] == 3);
    CHECK(block[1] == 4);

    RealVector single(1);
    single << 9;
    CHECK(embedding::extract_block(single, 0, 1)[0] == 9);

    const Trajectory traj{random_real(3, 9, 55), 1.0};
    const auto emb = embedding::hankel_embed(traj, {4});
    for (Index j = 0; j < emb.values.cols(); ++j) {
        const RealVector column = emb.values.col(j);
        CHECK(embedding::extract_block(column, 4, 3) == traj.values.col(j + 4));
        CHECK(embedding::latest_frame(column, 3, 4) == traj.values.col(j + 4));
    }
}

TEST_CASE("extract_block and latest_frame reject bad shapes") {
    RealVector state(4);
    state << 1, 2, 3, 4;
    CHECK_THROWS_AS(embedding::extract_block(state, 0, 3), DimensionMismatchError);
    CHECK_THROWS_AS(embedding::extract_block(state, 2, 2), DimensionMismatchError);
    CHECK_THROWS_AS(embedding::latest_frame(state, 2, 3), DimensionMismatchError);
}
