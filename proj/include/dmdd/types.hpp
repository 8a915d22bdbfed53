#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace dmdd {

// Dense column-major storage throughout (Eigen default).
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Complex = std::complex<double>;
using Index = Eigen::Index;

// Error categories map to CLI exit codes: Input -> 2, Numeric -> 3.
enum class ErrorKind { Input, Numeric };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

struct ZeroMatrixError : Error {
    explicit ZeroMatrixError(const std::string& w) : Error(ErrorKind::Numeric, w) {}
};
struct DimensionMismatchError : Error {
    explicit DimensionMismatchError(const std::string& w) : Error(ErrorKind::Numeric, w) {}
};
struct TooManyDelaysError : Error {
    explicit TooManyDelaysError(const std::string& w) : Error(ErrorKind::Numeric, w) {}
};
struct TooFewSnapshotsError : Error {
    explicit TooFewSnapshotsError(const std::string& w) : Error(ErrorKind::Numeric, w) {}
};
struct DegenerateSpectrumError : Error {
    explicit DegenerateSpectrumError(const std::string& w) : Error(ErrorKind::Numeric, w) {}
};
struct UnsupportedIndexError : Error {
    explicit UnsupportedIndexError(const std::string& w) : Error(ErrorKind::Numeric, w) {}
};
struct TooFewFramesError : Error {
    explicit TooFewFramesError(const std::string& w) : Error(ErrorKind::Input, w) {}
};
struct FormatError : Error {
    explicit FormatError(const std::string& w) : Error(ErrorKind::Input, w) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error(ErrorKind::Input, w) {}
};
struct WindowConfigError : Error {
    explicit WindowConfigError(const std::string& w) : Error(ErrorKind::Input, w) {}
};
struct UnknownChannelError : Error {
    explicit UnknownChannelError(const std::string& w) : Error(ErrorKind::Input, w) {}
};
struct AliasError : Error {
    explicit AliasError(const std::string& w) : Error(ErrorKind::Input, w) {}
};
struct EmptyCollectionError : Error {
    explicit EmptyCollectionError(const std::string& w) : Error(ErrorKind::Input, w) {}
};
struct ConfigError : Error {
    explicit ConfigError(const std::string& w) : Error(ErrorKind::Input, w) {}
};

/// Multivariate time series: column j holds snapshot x_{j+1} (m observables, n frames).
struct Trajectory {
    RealMatrix values;          // m x n
    double sample_rate_hz = 1.0;

    Index dim() const { return values.rows(); }
    Index frames() const { return values.cols(); }
};

/// Validating constructor: n >= 2, finite entries, positive sample rate.
Trajectory make_trajectory(RealMatrix values, double sample_rate_hz);

}  // namespace dmdd
