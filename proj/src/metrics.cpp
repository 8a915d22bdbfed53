#include "dmdd/metrics.hpp"

#include "dmdd/kernels.hpp"

#include <cmath>

namespace dmdd::metrics {

namespace {

void validate(std::span<const PredictionPair> pairs) {
    if (pairs.empty()) {
        throw EmptyCollectionError("no prediction pairs to score");
    }
    const Index m = pairs[0].ground_truth.rows();
    const Index p = pairs[0].ground_truth.cols();
    if (m < 1 || p < 1) {
        throw DimensionMismatchError("prediction pairs must be non-empty matrices");
    }
    for (const PredictionPair& pair : pairs) {
        if (pair.ground_truth.rows() != m || pair.ground_truth.cols() != p ||
            pair.prediction.rows() != m || pair.prediction.cols() != p) {
            throw DimensionMismatchError("prediction pairs must all share one m x p shape");
        }
    }
}

double kl_pair(const PredictionPair& pair) {
    const double joint_min =
        std::min(pair.ground_truth.minCoeff(), pair.prediction.minCoeff());
    const auto p_raw = (pair.ground_truth.array() - joint_min) + kl_epsilon;
    const auto q_raw = (pair.prediction.array() - joint_min) + kl_epsilon;
    const double p_sum = p_raw.sum();
    const double q_sum = q_raw.sum();
    double kl = 0.0;
    for (Index j = 0; j < pair.ground_truth.cols(); ++j) {
        for (Index i = 0; i < pair.ground_truth.rows(); ++i) {
            const double p = p_raw(i, j) / p_sum;
            const double q = q_raw(i, j) / q_sum;
            kl += p * std::log(p / q);
        }
    }
    return kl;
}

}  // namespace

double mse(std::span<const PredictionPair> pairs) {
    validate(pairs);
    const double mp = static_cast<double>(pairs[0].ground_truth.size());
    double total = 0.0;
    for (const PredictionPair& pair : pairs) {
        total += kernels::sum_squared_diff(pair.ground_truth, pair.prediction) / mp;
    }
    return total / static_cast<double>(pairs.size());
}

double kl_divergence(std::span<const PredictionPair> pairs) {
    validate(pairs);
    std::vector<double> per_pair(pairs.size(), 0.0);
    const auto count = static_cast<Index>(pairs.size());
#pragma omp parallel for schedule(static)
    for (Index k = 0; k < count; ++k) {
        per_pair[static_cast<std::size_t>(k)] = kl_pair(pairs[static_cast<std::size_t>(k)]);
    }
    double total = 0.0;
    for (double v : per_pair) {
        total += v;
    }
    return total / static_cast<double>(pairs.size());
}

std::vector<double> per_frame_errors(std::span<const PredictionPair> pairs) {
    validate(pairs);
    const Index m = pairs[0].ground_truth.rows();
    const Index p = pairs[0].ground_truth.cols();
    RealVector acc = RealVector::Zero(p);
    for (const PredictionPair& pair : pairs) {
        acc += kernels::column_squared_diff(pair.ground_truth, pair.prediction);
    }
    const double scale = static_cast<double>(m) * static_cast<double>(pairs.size());
    std::vector<double> out(static_cast<std::size_t>(p));
    for (Index t = 0; t < p; ++t) {
        out[static_cast<std::size_t>(t)] = acc[t] / scale;
    }
    return out;
}

ErrorSummary summarize(std::span<const PredictionPair> pairs) {
    ErrorSummary summary;
    summary.mse = mse(pairs);
    summary.kl = kl_divergence(pairs);
    summary.per_frame_mse = per_frame_errors(pairs);
    summary.pair_count = static_cast<Index>(pairs.size());
    return summary;
}

}  // namespace dmdd::metrics
