#pragma once

#include "dmdd/types.hpp"

#include <span>
#include <vector>

namespace dmdd::metrics {

struct PredictionPair {
    RealMatrix ground_truth;  // m x p
    RealMatrix prediction;    // m x p
};

struct ErrorSummary {
    double mse = 0.0;
    double kl = 0.0;
    std::vector<double> per_frame_mse;  // p entries
    Index pair_count = 0;
};

/// (1/K) sum_k (1/(mp)) sum_ij (GT_ijk - P_ijk)^2.
double mse(std::span<const PredictionPair> pairs);

/// Mean over pairs of sum_i p_i log(p_i/q_i), where each matrix of a pair
/// is turned into a probability vector: shift by the pair's joint minimum,
/// add eps = 1e-9, normalize to sum 1 over all mp entries. p comes from the
/// ground truth, q from the prediction. This construction is
/// variant-defined: reports flag it and its values are not comparable to
/// externally published KL tables.
double kl_divergence(std::span<const PredictionPair> pairs);

/// Element t = (1/K) sum_k (1/m) sum_i (GT_itk - P_itk)^2; its mean over t
/// equals mse(pairs).
std::vector<double> per_frame_errors(std::span<const PredictionPair> pairs);

ErrorSummary summarize(std::span<const PredictionPair> pairs);

inline constexpr double kl_epsilon = 1e-9;
inline constexpr const char* kl_variant_note = "variant-defined";

}  // namespace dmdd::metrics
