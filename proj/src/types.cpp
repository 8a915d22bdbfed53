#include "dmdd/types.hpp"

namespace dmdd {

Trajectory make_trajectory(RealMatrix values, double sample_rate_hz) {
    if (values.rows() < 1) {
        throw DimensionMismatchError("trajectory needs at least one observable");
    }
    if (values.cols() < 2) {
        throw TooFewFramesError("trajectory needs at least 2 frames, got " +
                                std::to_string(values.cols()));
    }
    if (!(sample_rate_hz > 0.0)) {
        throw ConfigError("sample rate must be positive");
    }
    if (!values.allFinite()) {
        throw ParseError("trajectory contains non-finite entries");
    }
    return Trajectory{std::move(values), sample_rate_hz};
}

}  // namespace dmdd
