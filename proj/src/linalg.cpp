#include "dmdd/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace dmdd::linalg {

namespace {

template <typename Matrix, typename Result>
Result reduced_svd_impl(const Matrix& x, double rank_tol) {
    if (x.rows() < 1 || x.cols() < 1) {
        throw DimensionMismatchError("svd input must be non-empty");
    }
    if (!(rank_tol >= 0.0 && rank_tol < 1.0)) {
        throw ConfigError("rank_tol must lie in [0, 1)");
    }
    Eigen::JacobiSVD<Matrix> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const RealVector& sigma = svd.singularValues();
    if (sigma.size() == 0 || sigma[0] <= 0.0) {
        throw ZeroMatrixError("svd of all-zero matrix: no directions to retain");
    }
    Index r = 0;
    while (r < sigma.size() && sigma[r] > rank_tol * sigma[0]) {
        ++r;
    }
    Result out;
    out.u = svd.matrixU().leftCols(r);
    out.singular_values = sigma.head(r);
    out.v = svd.matrixV().leftCols(r);
    return out;
}

template <typename Matrix>
Matrix pinv_impl(const Matrix& m, double tol) {
    auto svd = reduced_svd_impl<Matrix, decltype(reduced_svd(m, tol))>(m, tol);
    return svd.v * svd.singular_values.cwiseInverse().asDiagonal() * svd.u.adjoint();
}

}  // namespace

SvdResult reduced_svd(const RealMatrix& x, double rank_tol) {
    return reduced_svd_impl<RealMatrix, SvdResult>(x, rank_tol);
}

SvdResultC reduced_svd(const ComplexMatrix& x, double rank_tol) {
    return reduced_svd_impl<ComplexMatrix, SvdResultC>(x, rank_tol);
}

EigResult eig_dense(const ComplexMatrix& s) {
    if (s.rows() != s.cols()) {
        throw DimensionMismatchError("eigendecomposition needs a square matrix, got " +
                                     std::to_string(s.rows()) + "x" + std::to_string(s.cols()));
    }
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(s, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::Numeric, "eigendecomposition did not converge");
    }
    const ComplexVector& raw_values = solver.eigenvalues();
    const ComplexMatrix& raw_vectors = solver.eigenvectors();

    std::vector<Index> order(static_cast<std::size_t>(raw_values.size()));
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
        const double ma = std::abs(raw_values[a]);
        const double mb = std::abs(raw_values[b]);
        if (ma != mb) return ma > mb;
        if (raw_values[a].real() != raw_values[b].real()) {
            return raw_values[a].real() > raw_values[b].real();
        }
        return raw_values[a].imag() > raw_values[b].imag();
    });

    EigResult out;
    out.eigenvalues.resize(raw_values.size());
    out.eigenvectors.resize(raw_vectors.rows(), raw_vectors.cols());
    for (Index i = 0; i < raw_values.size(); ++i) {
        out.eigenvalues[i] = raw_values[order[static_cast<std::size_t>(i)]];
        ComplexVector v = raw_vectors.col(order[static_cast<std::size_t>(i)]);
        out.eigenvectors.col(i) = v / v.norm();
    }
    return out;
}

RealMatrix pinv(const RealMatrix& m, double tol) { return pinv_impl(m, tol); }

ComplexMatrix pinv(const ComplexMatrix& m, double tol) { return pinv_impl(m, tol); }

}  // namespace dmdd::linalg
