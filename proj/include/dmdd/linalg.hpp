#pragma once

#include "dmdd/types.hpp"

namespace dmdd::linalg {

/// Reduced SVD X = U diag(s) V^*. Singular values are descending and
/// strictly positive: anything with s_i <= rank_tol * s_1 is discarded.
struct SvdResult {
    RealMatrix u;                // rows x r, orthonormal columns
    RealVector singular_values;  // r, descending
    RealMatrix v;                // cols x r, orthonormal columns
    Index rank() const { return singular_values.size(); }
};

struct SvdResultC {
    ComplexMatrix u;
    RealVector singular_values;
    ComplexMatrix v;
    Index rank() const { return singular_values.size(); }
};

SvdResult reduced_svd(const RealMatrix& x, double rank_tol);
SvdResultC reduced_svd(const ComplexMatrix& x, double rank_tol);

/// Dense eigenpairs, sorted by descending |lambda| with ties broken by
/// descending real then descending imaginary part. Eigenvector columns are
/// unit 2-norm and column i pairs with eigenvalues[i].
struct EigResult {
    ComplexVector eigenvalues;
    ComplexMatrix eigenvectors;
};

EigResult eig_dense(const ComplexMatrix& s);

/// Moore-Penrose pseudoinverse through the reduced SVD at the given
/// truncation tolerance.
RealMatrix pinv(const RealMatrix& m, double tol = 1e-10);
ComplexMatrix pinv(const ComplexMatrix& m, double tol = 1e-10);

}  // namespace dmdd::linalg
