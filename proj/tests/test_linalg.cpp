#include "dmdd/linalg.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace dmdd;
using dmdd::test::random_complex;
using dmdd::test::random_real;
using dmdd::test::rel_err;

TEST_CASE("reduced_svd: identity keeps all unit singular values") {
    const auto svd = linalg::reduced_svd(RealMatrix::Identity(3, 3), 1e-12);
    REQUIRE(svd.rank() == 3);
    for (Index i = 0; i < 3; ++i) {
        CHECK(svd.singular_values[i] == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("reduced_svd: scaled rank-1 outer product") {
    RealVector u(2), v(3);
    u << 0.6, 0.8;  // unit
    v << 0.0, 1.0, 0.0;
    const RealMatrix x = 7.0 * u * v.transpose();
    const auto svd = linalg::reduced_svd(x, 1e-12);
    REQUIRE(svd.rank() == 1);
    CHECK(svd.singular_values[0] == doctest::Approx(7.0).epsilon(1e-12));
}

TEST_CASE("reduced_svd: reconstruction and orthonormality on random shapes") {
    for (auto [rows, cols, seed] : {std::tuple<Index, Index, std::uint64_t>{6, 4, 1},
                                    {4, 6, 2},
                                    {5, 5, 3},
                                    {12, 3, 4},
                                    {3, 12, 5}}) {
        const RealMatrix x = random_real(rows, cols, seed);
        const auto svd = linalg::reduced_svd(x, 0.0);
        const RealMatrix rebuilt = svd.u * svd.singular_values.asDiagonal() * svd.v.transpose();
        CHECK((x - rebuilt).norm() <= 1e-10 * svd.singular_values[0]);
        CHECK((svd.u.transpose() * svd.u - RealMatrix::Identity(svd.rank(), svd.rank())).norm() <=
              1e-10);
        CHECK((svd.v.transpose() * svd.v - RealMatrix::Identity(svd.rank(), svd.rank())).norm() <=
              1e-10);
        for (Index i = 1; i < svd.rank(); ++i) {
            CHECK(svd.singular_values[i] <= svd.singular_values[i - 1]);
        }
        CHECK(svd.singular_values[svd.rank() - 1] > 0.0);
    }
}

TEST_CASE("reduced_svd: complex input") {
    const ComplexMatrix x = random_complex(6, 4, 11);
    const auto svd = linalg::reduced_svd(x, 0.0);
    const ComplexMatrix rebuilt = svd.u * svd.singular_values.asDiagonal() * svd.v.adjoint();
    CHECK((x - rebuilt).norm() <= 1e-10 * svd.singular_values[0]);
    CHECK((svd.u.adjoint() * svd.u - ComplexMatrix::Identity(svd.rank(), svd.rank())).norm() <=
          1e-10);
    CHECK((svd.v.adjoint() * svd.v - ComplexMatrix::Identity(svd.rank(), svd.rank())).norm() <=
          1e-10);
}

TEST_CASE("reduced_svd: relative truncation discards trailing directions") {
    // Orthogonal factors around a known spectrum.
    const auto qu = linalg::reduced_svd(random_real(5, 5, 21), 0.0);
    const auto qv = linalg::reduced_svd(random_real(5, 5, 22), 0.0);
    RealVector sigma(5);
    sigma << 2.0, 1.0, 2e-4, 3e-9, 1e-14;
    const RealMatrix x = qu.u * sigma.asDiagonal() * qv.u.transpose();
    CHECK(linalg::reduced_svd(x, 1e-6).rank() == 3);
    CHECK(linalg::reduced_svd(x, 1e-2).rank() == 2);
}

TEST_CASE("reduced_svd: zero matrix and bad tolerance are rejected") {
    CHECK_THROWS_AS(linalg::reduced_svd(RealMatrix::Zero(3, 3), 1e-12), ZeroMatrixError);
    CHECK_THROWS_AS(linalg::reduced_svd(RealMatrix::Identity(2, 2), -0.5), ConfigError);
    CHECK_THROWS_AS(linalg::reduced_svd(RealMatrix::Identity(2, 2), 1.0), ConfigError);
}

TEST_CASE("eig_dense: diagonal matrix") {
    ComplexMatrix s = ComplexMatrix::Zero(2, 2);
    s(0, 0) = 2.0;
    s(1, 1) = -1.0;
    const auto eig = linalg::eig_dense(s);
    CHECK(std::abs(eig.eigenvalues[0] - Complex(2.0, 0.0)) <= 1e-12);
    CHECK(std::abs(eig.eigenvalues[1] - Complex(-1.0, 0.0)) <= 1e-12);
}

TEST_CASE("eig_dense: planar rotation gives +-i, +i first") {
    ComplexMatrix s(2, 2);
    s << 0.0, -1.0, 1.0, 0.0;
    const auto eig = linalg::eig_dense(s);
    CHECK(std::abs(eig.eigenvalues[0] - Complex(0.0, 1.0)) <= 1e-12);
    CHECK(std::abs(eig.eigenvalues[1] - Complex(0.0, -1.0)) <= 1e-12);
}

TEST_CASE("eig_dense: residual, unit eigenvectors and ordering on random matrices") {
    for (std::uint64_t seed : {31, 32, 33}) {
        for (Index n : {5, 17, 50}) {
            const ComplexMatrix s = random_complex(n, n, seed * 100 + static_cast<std::uint64_t>(n));
            const auto eig = linalg::eig_dense(s);
            REQUIRE(eig.eigenvalues.size() == n);
            for (Index i = 0; i < n; ++i) {
                const ComplexVector v = eig.eigenvectors.col(i);
                CHECK(std::abs(v.norm() - 1.0) <= 1e-12);
                CHECK((s * v - eig.eigenvalues[i] * v).norm() <= 1e-9 * s.norm());
                if (i > 0) {
                    CHECK(std::abs(eig.eigenvalues[i]) <=
                          std::abs(eig.eigenvalues[i - 1]) + 1e-12);
                }
            }
        }
    }
}

TEST_CASE("eig_dense: non-square input is rejected") {
    CHECK_THROWS_AS(linalg::eig_dense(random_complex(3, 4, 7)), DimensionMismatchError);
}

TEST_CASE("pinv: invertible matrix gives the inverse") {
    RealMatrix m(2, 2);
    m << 1.0, 2.0, 3.0, 4.0;
    RealMatrix expected(2, 2);
    expected << -2.0, 1.0, 1.5, -0.5;
    CHECK(rel_err(linalg::pinv(m), expected) <= 1e-12);
}

TEST_CASE("pinv: column vector") {
    ComplexMatrix v(3, 1);
    v << Complex(1, 1), Complex(0, 2), Complex(-1, 0);
    const ComplexMatrix expected = v.adjoint() / v.squaredNorm();
    CHECK(rel_err(linalg::pinv(v), expected) <= 1e-12);
}

TEST_CASE("pinv: Penrose identities on random shapes, real and complex") {
    for (auto [rows, cols] : {std::pair<Index, Index>{6, 3}, {3, 6}, {5, 5}, {8, 2}}) {
        const RealMatrix m = random_real(rows, cols, 100 + static_cast<std::uint64_t>(rows));
        const RealMatrix p = linalg::pinv(m);
        CHECK(rel_err(m * p * m, m) <= 1e-9);
        CHECK(rel_err(p * m * p, p) <= 1e-9);
        CHECK(((m * p) - (m * p).transpose()).norm() <= 1e-9 * std::max(1.0, (m * p).norm()));
        CHECK(((p * m) - (p * m).transpose()).norm() <= 1e-9 * std::max(1.0, (p * m).norm()));

        const ComplexMatrix mc = random_complex(rows, cols, 200 + static_cast<std::uint64_t>(cols));
        const ComplexMatrix pc = linalg::pinv(mc);
        CHECK(rel_err(mc * pc * mc, mc) <= 1e-9);
        CHECK(rel_err(pc * mc * pc, pc) <= 1e-9);
        CHECK(((mc * pc) - (mc * pc).adjoint()).norm() <= 1e-9 * std::max(1.0, (mc * pc).norm()));
        CHECK(((pc * mc) - (pc * mc).adjoint()).norm() <= 1e-9 * std::max(1.0, (pc * mc).norm()));
    }
}

TEST_CASE("pinv: zero matrix is rejected") {
    CHECK_THROWS_AS(linalg::pinv(RealMatrix::Zero(2, 3)), ZeroMatrixError);
}
