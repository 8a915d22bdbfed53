#include "dmdd/synth.hpp"

#include "dmdd/linalg.hpp"

#include <cmath>
#include <numbers>

namespace dmdd::synth {

double NoiseGenerator::next() {
    const std::uint64_t r1 = engine_();
    const std::uint64_t r2 = engine_();
    const double u1 = static_cast<double>((r1 >> 11) + 1) * 0x1.0p-53;  // (0, 1]
    const double u2 = static_cast<double>(r2 >> 11) * 0x1.0p-53;       // [0, 1)
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

namespace {

void check_nyquist(double omega, double f_hz) {
    if (!(f_hz > 0.0)) {
        throw ConfigError("sample rate must be positive");
    }
    if (!(omega < std::numbers::pi * f_hz)) {
        throw AliasError("angular frequency " + std::to_string(omega) +
                         " rad/s is not below the Nyquist limit pi*f = " +
                         std::to_string(std::numbers::pi * f_hz));
    }
    if (omega < 0.0) {
        throw AliasError("angular frequency must be non-negative");
    }
}

double sinusoid_value(const std::vector<SinusoidComponent>& components, double f_hz,
                      std::int64_t k) {
    double y = 0.0;
    for (const SinusoidComponent& c : components) {
        y += c.amplitude * std::sin(c.omega * static_cast<double>(k - 1) / f_hz + c.phase);
    }
    return y;
}

}  // namespace

LinearSystemData gen_linear(const RealMatrix& generator, const RealVector& initial_state,
                            Index frames, double noise_std, std::uint64_t seed,
                            double sample_rate_hz) {
    if (generator.rows() != generator.cols()) {
        throw DimensionMismatchError("generator must be square");
    }
    if (generator.rows() != initial_state.size()) {
        throw DimensionMismatchError("initial state length " + std::to_string(initial_state.size()) +
                                     " does not match generator size " +
                                     std::to_string(generator.rows()));
    }
    if (frames < 3) {
        throw TooFewFramesError("synthetic trajectories need at least 3 frames");
    }
    if (noise_std < 0.0) {
        throw ConfigError("noise_std must be non-negative");
    }

    const Index m = generator.rows();
    RealMatrix values(m, frames);
    values.col(0) = initial_state;
    NoiseGenerator noise(seed);
    for (Index k = 1; k < frames; ++k) {
        values.col(k) = generator * values.col(k - 1);
        if (noise_std > 0.0) {
            for (Index i = 0; i < m; ++i) {
                values(i, k) += noise_std * noise.next();
            }
        }
    }

    LinearSystemData out;
    out.trajectory = make_trajectory(std::move(values), sample_rate_hz);
    out.spectrum = linalg::eig_dense(generator.cast<Complex>()).eigenvalues;
    return out;
}

double SinusoidData::value_at(std::int64_t k) const {
    return sinusoid_value(components, sample_rate_hz, k);
}

RealMatrix SinusoidData::continuation(std::int64_t from, Index count) const {
    RealMatrix out(1, count);
    for (Index t = 0; t < count; ++t) {
        out(0, t) = value_at(from + t);
    }
    return out;
}

SinusoidData gen_sinusoids(const std::vector<SinusoidComponent>& components, double f_hz,
                           Index frames, double noise_std, std::uint64_t seed) {
    if (components.empty()) {
        throw ConfigError("sinusoid mixture needs at least one component");
    }
    for (const SinusoidComponent& c : components) {
        check_nyquist(c.omega, f_hz);
    }
    if (frames < 3) {
        throw TooFewFramesError("synthetic trajectories need at least 3 frames");
    }
    if (noise_std < 0.0) {
        throw ConfigError("noise_std must be non-negative");
    }

    RealMatrix values(1, frames);
    NoiseGenerator noise(seed);
    for (Index k = 0; k < frames; ++k) {
        values(0, k) = sinusoid_value(components, f_hz, k + 1);
        if (noise_std > 0.0) {
            values(0, k) += noise_std * noise.next();
        }
    }

    SinusoidData out;
    out.trajectory = make_trajectory(std::move(values), f_hz);
    out.components = components;
    out.sample_rate_hz = f_hz;
    return out;
}

double RotationData::value_at(std::int64_t k) const {
    // z_1 = (1, 0) rotated k-1 times by omega/f: observed value cos((k-1) omega/f).
    return std::cos(omega * static_cast<double>(k - 1) / sample_rate_hz);
}

RealMatrix RotationData::continuation(std::int64_t from, Index count) const {
    RealMatrix out(1, count);
    for (Index t = 0; t < count; ++t) {
        out(0, t) = value_at(from + t);
    }
    return out;
}

RotationData gen_observed_rotation(double omega, double f_hz, Index n) {
    check_nyquist(omega, f_hz);
    if (n < 3) {
        throw TooFewFramesError("synthetic trajectories need at least 3 frames");
    }
    const double step = omega / f_hz;
    Eigen::Matrix2d rotation;
    rotation << std::cos(step), -std::sin(step), std::sin(step), std::cos(step);

    RotationData out;
    out.omega = omega;
    out.sample_rate_hz = f_hz;
    out.hidden_states.resize(2, n);
    out.hidden_states.col(0) << 1.0, 0.0;
    for (Index k = 1; k < n; ++k) {
        out.hidden_states.col(k) = rotation * out.hidden_states.col(k - 1);
    }
    out.trajectory = make_trajectory(out.hidden_states.row(0), f_hz);
    return out;
}

RealMatrix GeneratedData::continuation(std::int64_t from, Index count) const {
    switch (spec.kind) {
        case SyntheticSpec::Kind::LinearSystem: {
            const Index m = spec.generator.rows();
            RealMatrix out(m, count);
            RealVector state = spec.initial_state;
            std::int64_t k = 1;
            for (; k < from; ++k) {
                state = spec.generator * state;
            }
            for (Index t = 0; t < count; ++t) {
                out.col(t) = state;
                state = spec.generator * state;
            }
            return out;
        }
        case SyntheticSpec::Kind::SinusoidMixture: {
            SinusoidData data;
            data.components = spec.components;
            data.sample_rate_hz = spec.sample_rate_hz;
            return data.continuation(from, count);
        }
        case SyntheticSpec::Kind::ObservedRotation: {
            RotationData data;
            data.omega = spec.omega;
            data.sample_rate_hz = spec.sample_rate_hz;
            return data.continuation(from, count);
        }
    }
    throw ConfigError("unknown synthetic kind");
}

GeneratedData generate(const SyntheticSpec& spec, const std::string& name) {
    Trajectory traj;
    switch (spec.kind) {
        case SyntheticSpec::Kind::LinearSystem:
            traj = gen_linear(spec.generator, spec.initial_state, spec.frames, spec.noise_std,
                              spec.seed, spec.sample_rate_hz)
                       .trajectory;
            break;
        case SyntheticSpec::Kind::SinusoidMixture:
            traj = gen_sinusoids(spec.components, spec.sample_rate_hz, spec.frames,
                                 spec.noise_std, spec.seed)
                       .trajectory;
            break;
        case SyntheticSpec::Kind::ObservedRotation: {
            traj = gen_observed_rotation(spec.omega, spec.sample_rate_hz, spec.frames).trajectory;
            if (spec.noise_std > 0.0) {
                NoiseGenerator noise(spec.seed);
                for (Index k = 0; k < traj.frames(); ++k) {
                    traj.values(0, k) += spec.noise_std * noise.next();
                }
            }
            break;
        }
        default:
            throw ConfigError("unknown synthetic kind");
    }

    GeneratedData out;
    out.spec = spec;
    out.dataset.name = name;
    out.dataset.trajectory = std::move(traj);
    out.dataset.channel_labels.reserve(static_cast<std::size_t>(out.dataset.trajectory.dim()));
    for (Index i = 0; i < out.dataset.trajectory.dim(); ++i) {
        out.dataset.channel_labels.push_back("s" + std::to_string(i));
    }
    return out;
}

}  // namespace dmdd::synth
