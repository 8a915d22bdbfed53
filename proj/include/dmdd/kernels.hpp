#pragma once

#include "dmdd/types.hpp"

#include <cstdint>

// Data-parallel inner loops of the library. Each kernel exists twice: a
// serial reference used as the oracle in tests, and an OpenMP variant used
// by the library. Both produce bit-identical results: per-column work is
// self-contained and reductions combine fixed-order partial sums, so the
// output does not depend on thread count or scheduling.
namespace dmdd::kernels {

namespace serial {

/// Column t = Re(weighted_modes * diag(lambda^(k_begin+t-1)) * 1).
/// weighted_modes is modes * diag(amplitudes); powers are taken in polar
/// form to avoid drift over long horizons. If max_abs_imag is non-null it
/// receives the largest |Im| encountered before the real part is taken.
RealMatrix spectral_series(const ComplexMatrix& weighted_modes,
                           const ComplexVector& eigenvalues,
                           std::int64_t k_begin, Index count,
                           double* max_abs_imag = nullptr);

/// Stack d+1 shifted copies of values: block row b of column j equals
/// column j+b of the input. Output is (d+1)m x (n-d).
RealMatrix hankel_embed(const RealMatrix& values, Index delays);

/// Frobenius distance squared, accumulated per column then combined in
/// column order.
double sum_squared_diff(const RealMatrix& a, const RealMatrix& b);

/// Per-column squared-difference sums (length = columns).
RealVector column_squared_diff(const RealMatrix& a, const RealMatrix& b);

}  // namespace serial

namespace parallel {

RealMatrix spectral_series(const ComplexMatrix& weighted_modes,
                           const ComplexVector& eigenvalues,
                           std::int64_t k_begin, Index count,
                           double* max_abs_imag = nullptr);

RealMatrix hankel_embed(const RealMatrix& values, Index delays);

double sum_squared_diff(const RealMatrix& a, const RealMatrix& b);

RealVector column_squared_diff(const RealMatrix& a, const RealMatrix& b);

}  // namespace parallel

// Library entry points dispatch to the OpenMP variants.
using parallel::column_squared_diff;
using parallel::hankel_embed;
using parallel::spectral_series;
using parallel::sum_squared_diff;

}  // namespace dmdd::kernels
