#include "dmdd/kernels.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace dmdd;
using dmdd::test::bit_equal;
using dmdd::test::random_complex;
using dmdd::test::random_real;

// The OpenMP kernels must match the serial references bit for bit: same
// per-column arithmetic, fixed-order combination of partials.

TEST_CASE("spectral_series: parallel equals serial bit for bit") {
    for (auto [dim, r, count] : {std::tuple<Index, Index, Index>{5, 3, 7},
                                 {40, 12, 64},
                                 {1, 1, 1},
                                 {17, 17, 129}}) {
        const ComplexMatrix weighted = random_complex(dim, r, 500 + static_cast<std::uint64_t>(r));
        ComplexVector eigs(r);
        for (Index i = 0; i < r; ++i) {
            eigs[i] = std::polar(0.5 + 0.05 * static_cast<double>(i),
                                 0.11 * static_cast<double>(i + 1));
        }
        double imag_s = -1.0, imag_p = -1.0;
        const RealMatrix a = kernels::serial::spectral_series(weighted, eigs, 2, count, &imag_s);
        const RealMatrix b = kernels::parallel::spectral_series(weighted, eigs, 2, count, &imag_p);
        CHECK(bit_equal(a, b));
        CHECK(imag_s == imag_p);
    }
}

TEST_CASE("hankel_embed: parallel equals serial bit for bit") {
    for (auto [m, n, d] : {std::tuple<Index, Index, Index>{1, 10, 3},
                           {4, 25, 0},
                           {3, 50, 20},
                           {7, 9, 7}}) {
        const RealMatrix values = random_real(m, n, 700 + static_cast<std::uint64_t>(n));
        CHECK(bit_equal(kernels::serial::hankel_embed(values, d),
                        kernels::parallel::hankel_embed(values, d)));
    }
}

TEST_CASE("squared-difference reductions: parallel equals serial bit for bit") {
    for (auto [rows, cols] : {std::pair<Index, Index>{3, 5}, {64, 33}, {1, 1}}) {
        const RealMatrix a = random_real(rows, cols, 900 + static_cast<std::uint64_t>(cols));
        const RealMatrix b = random_real(rows, cols, 901 + static_cast<std::uint64_t>(cols));
        CHECK(kernels::serial::sum_squared_diff(a, b) == kernels::parallel::sum_squared_diff(a, b));
        const RealVector cs = kernels::serial::column_squared_diff(a, b);
        const RealVector cp = kernels::parallel::column_squared_diff(a, b);
        REQUIRE(cs.size() == cp.size());
        for (Index j = 0; j < cs.size(); ++j) {
            CHECK(cs[j] == cp[j]);
        }
    }
}

TEST_CASE("kernels: repeated calls are bit-stable") {
    const RealMatrix a = random_real(20, 40, 1234);
    const RealMatrix b = random_real(20, 40, 1235);
    const double first = kernels::parallel::sum_squared_diff(a, b);
    for (int i = 0; i < 5; ++i) {
        CHECK(kernels::parallel::sum_squared_diff(a, b) == first);
    }
}

TEST_CASE("sum_squared_diff: shape mismatch is rejected") {
    CHECK_THROWS_AS(
        kernels::sum_squared_diff(RealMatrix::Zero(2, 3), RealMatrix::Zero(3, 2)),
        DimensionMismatchError);
}
