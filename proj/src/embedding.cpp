#include "dmdd/embedding.hpp"

#include "dmdd/kernels.hpp"

namespace dmdd::embedding {

EmbeddedTrajectory hankel_embed(const Trajectory& traj, DelayConfig cfg) {
    const Index n = traj.frames();
    if (cfg.delays < 0) {
        throw TooManyDelaysError("delay count must be non-negative");
    }
    if (cfg.delays > max_delays(n)) {
        throw TooManyDelaysError("too many delays: d=" + std::to_string(cfg.delays) +
                                 ", maximum feasible d=" + std::to_string(max_delays(n)) +
                                 " for " + std::to_string(n) + " frames");
    }
    EmbeddedTrajectory out;
    out.base_dim = traj.dim();
    out.delays = cfg.delays;
    out.sample_rate_hz = traj.sample_rate_hz;
    out.values = kernels::hankel_embed(traj.values, cfg.delays);
    return out;
}

RealVector extract_block(const RealVector& state, Index block_index, Index m) {
    if (m < 1 || state.size() % m != 0) {
        throw DimensionMismatchError("stacked state length " + std::to_string(state.size()) +
                                     " is not a multiple of block size " + std::to_string(m));
    }
    const Index blocks = state.size() / m;
    if (block_index < 0 || block_index >= blocks) {
        throw DimensionMismatchError("block index " + std::to_string(block_index) +
                                     " outside 0.." + std::to_string(blocks - 1));
    }
    return state.segment(block_index * m, m);
}

RealVector latest_frame(const RealVector& state, Index m, Index d) {
    if (state.size() != (d + 1) * m) {
        throw DimensionMismatchError("stacked state length " + std::to_string(state.size()) +
                                     " does not match (d+1)m = " + std::to_string((d + 1) * m));
    }
    return extract_block(state, d, m);
}

}  // namespace dmdd::embedding
