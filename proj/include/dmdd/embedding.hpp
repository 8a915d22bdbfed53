#pragma once

#include "dmdd/types.hpp"

namespace dmdd::embedding {

struct DelayConfig {
    Index delays = 0;  // extra shifted copies; 0 <= delays <= frames - 2
};

/// Delay-embedded trajectory: (d+1)m x (n-d), column j stacks frames
/// j, j+1, ..., j+d top to bottom. Entries are exact copies of the source.
struct EmbeddedTrajectory {
    Index base_dim = 0;
    Index delays = 0;
    RealMatrix values;
    double sample_rate_hz = 1.0;

    Index frames() const { return values.cols(); }
};

/// Largest d for which hankel_embed keeps at least two columns.
inline Index max_delays(Index frames) { return frames - 2; }

EmbeddedTrajectory hankel_embed(const Trajectory& traj, DelayConfig cfg);

/// Rows block_index*m ... block_index*m + m - 1 of a stacked state.
RealVector extract_block(const RealVector& state, Index block_index, Index m);

/// Bottom block of a stacked state: the newest frame under the embedding's
/// ordering. Alias for extract_block(state, d, m).
RealVector latest_frame(const RealVector& state, Index m, Index d);

}  // namespace dmdd::embedding
