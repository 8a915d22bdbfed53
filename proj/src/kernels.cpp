#include "dmdd/kernels.hpp"

#include <cmath>
#include <vector>

namespace dmdd::kernels {

namespace {

void check_same_shape(const RealMatrix& a, const RealMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatchError("shape mismatch: " + std::to_string(a.rows()) + "x" +
                                     std::to_string(a.cols()) + " vs " +
                                     std::to_string(b.rows()) + "x" +
                                     std::to_string(b.cols()));
    }
}

// One output column: Re(W * p) with p_i = lambda_i^(k-1) in polar form.
// Shared verbatim by the serial and parallel variants so both are
// bit-identical per column.
double series_column(const ComplexMatrix& weighted_modes, const RealVector& moduli,
                     const RealVector& args, std::int64_t k, ComplexVector& power_buf,
                     RealMatrix& out, Index col) {
    const auto e = static_cast<double>(k - 1);
    for (Index i = 0; i < moduli.size(); ++i) {
        power_buf[i] = std::polar(std::pow(moduli[i], e), args[i] * e);
    }
    ComplexVector state = weighted_modes * power_buf;
    double max_imag = 0.0;
    for (Index i = 0; i < state.size(); ++i) {
        max_imag = std::max(max_imag, std::abs(state[i].imag()));
        out(i, col) = state[i].real();
    }
    return max_imag;
}

void embed_column(const RealMatrix& values, Index delays, Index m, RealMatrix& out, Index j) {
    for (Index b = 0; b <= delays; ++b) {
        out.block(b * m, j, m, 1) = values.col(j + b);
    }
}

}  // namespace

namespace serial {

RealMatrix spectral_series(const ComplexMatrix& weighted_modes, const ComplexVector& eigenvalues,
                           std::int64_t k_begin, Index count, double* max_abs_imag) {
    const RealVector moduli = eigenvalues.cwiseAbs();
    RealVector args(eigenvalues.size());
    for (Index i = 0; i < eigenvalues.size(); ++i) {
        args[i] = std::arg(eigenvalues[i]);
    }
    RealMatrix out(weighted_modes.rows(), count);
    ComplexVector power_buf(eigenvalues.size());
    double max_imag = 0.0;
    for (Index t = 0; t < count; ++t) {
        max_imag = std::max(max_imag,
                            series_column(weighted_modes, moduli, args, k_begin + t, power_buf, out, t));
    }
    if (max_abs_imag != nullptr) {
        *max_abs_imag = max_imag;
    }
    return out;
}

RealMatrix hankel_embed(const RealMatrix& values, Index delays) {
    const Index m = values.rows();
    const Index n = values.cols();
    RealMatrix out((delays + 1) * m, n - delays);
    for (Index j = 0; j < out.cols(); ++j) {
        embed_column(values, delays, m, out, j);
    }
    return out;
}

double sum_squared_diff(const RealMatrix& a, const RealMatrix& b) {
    check_same_shape(a, b);
    const RealVector per_col = column_squared_diff(a, b);
    double total = 0.0;
    for (Index j = 0; j < per_col.size(); ++j) {
        total += per_col[j];
    }
    return total;
}

RealVector column_squared_diff(const RealMatrix& a, const RealMatrix& b) {
    check_same_shape(a, b);
    RealVector per_col(a.cols());
    for (Index j = 0; j < a.cols(); ++j) {
        per_col[j] = (a.col(j) - b.col(j)).squaredNorm();
    }
    return per_col;
}

}  // namespace serial

namespace parallel {

RealMatrix spectral_series(const ComplexMatrix& weighted_modes, const ComplexVector& eigenvalues,
                           std::int64_t k_begin, Index count, double* max_abs_imag) {
    const RealVector moduli = eigenvalues.cwiseAbs();
    RealVector args(eigenvalues.size());
    for (Index i = 0; i < eigenvalues.size(); ++i) {
        args[i] = std::arg(eigenvalues[i]);
    }
    RealMatrix out(weighted_modes.rows(), count);
    std::vector<double> col_imag(static_cast<std::size_t>(count), 0.0);
#pragma omp parallel
    {
        ComplexVector power_buf(eigenvalues.size());
#pragma omp for schedule(static)
        for (Index t = 0; t < count; ++t) {
            col_imag[static_cast<std::size_t>(t)] =
                series_column(weighted_modes, moduli, args, k_begin + t, power_buf, out, t);
        }
    }
    if (max_abs_imag != nullptr) {
        double max_imag = 0.0;
        for (double v : col_imag) {
            max_imag = std::max(max_imag, v);
        }
        *max_abs_imag = max_imag;
    }
    return out;
}

RealMatrix hankel_embed(const RealMatrix& values, Index delays) {
    const Index m = values.rows();
    const Index n = values.cols();
    RealMatrix out((delays + 1) * m, n - delays);
    const Index cols = out.cols();
#pragma omp parallel for schedule(static)
    for (Index j = 0; j < cols; ++j) {
        embed_column(values, delays, m, out, j);
    }
    return out;
}

double sum_squared_diff(const RealMatrix& a, const RealMatrix& b) {
    check_same_shape(a, b);
    // Fixed per-column partials combined in column order: the result does
    // not depend on the thread count.
    const RealVector per_col = column_squared_diff(a, b);
    double total = 0.0;
    for (Index j = 0; j < per_col.size(); ++j) {
        total += per_col[j];
    }
    return total;
}

RealVector column_squared_diff(const RealMatrix& a, const RealMatrix& b) {
    check_same_shape(a, b);
    RealVector per_col(a.cols());
    const Index cols = a.cols();
#pragma omp parallel for schedule(static)
    for (Index j = 0; j < cols; ++j) {
        per_col[j] = (a.col(j) - b.col(j)).squaredNorm();
    }
    return per_col;
}

}  // namespace parallel

}  // namespace dmdd::kernels
