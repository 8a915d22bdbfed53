#pragma once

#include "dmdd/types.hpp"

#include <random>

namespace dmdd::test {

inline RealMatrix random_real(Index rows, Index cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    RealMatrix m(rows, cols);
    for (Index j = 0; j < cols; ++j) {
        for (Index i = 0; i < rows; ++i) {
            m(i, j) = dist(rng);
        }
    }
    return m;
}

inline ComplexMatrix random_complex(Index rows, Index cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (Index j = 0; j < cols; ++j) {
        for (Index i = 0; i < rows; ++i) {
            m(i, j) = Complex(dist(rng), dist(rng));
        }
    }
    return m;
}

template <typename MatA, typename MatB>
double rel_err(const MatA& a, const MatB& b) {
    const double scale = std::max(1e-300, double(b.norm()));
    return (a - b).norm() / scale;
}

inline bool bit_equal(const RealMatrix& a, const RealMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Index j = 0; j < a.cols(); ++j) {
        for (Index i = 0; i < a.rows(); ++i) {
            if (std::memcmp(&a(i, j), &b(i, j), sizeof(double)) != 0) return false;
        }
    }
    return true;
}

/// Trajectory of a discrete linear system x_{k+1} = A x_k.
inline RealMatrix linear_orbit(const RealMatrix& a, const RealVector& x1, Index frames) {
    RealMatrix values(a.rows(), frames);
    values.col(0) = x1;
    for (Index k = 1; k < frames; ++k) {
        values.col(k) = a * values.col(k - 1);
    }
    return values;
}

}  // namespace dmdd::test
