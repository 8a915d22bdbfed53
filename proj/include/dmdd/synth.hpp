#pragma once

#include "dmdd/dataio.hpp"
#include "dmdd/types.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace dmdd::synth {

/// Standard-normal stream with a fully pinned algorithm so sequences can be
/// reproduced outside this codebase: mt19937_64 seeded directly, one normal
/// per two engine draws via Box-Muller,
///   u1 = ((r1 >> 11) + 1) * 2^-53  in (0, 1]
///   u2 = (r2 >> 11) * 2^-53        in [0, 1)
///   z  = sqrt(-2 ln u1) * cos(2 pi u2).
class NoiseGenerator {
public:
    explicit NoiseGenerator(std::uint64_t seed) : engine_(seed) {}

    double next();

private:
    std::mt19937_64 engine_;
};

struct SinusoidComponent {
    double amplitude = 0.0;
    double omega = 0.0;  // rad/s, must stay below pi * sample rate
    double phase = 0.0;
};

/// Serializable description of an oracle-generated signal.
struct SyntheticSpec {
    enum class Kind { LinearSystem, SinusoidMixture, ObservedRotation };

    Kind kind = Kind::LinearSystem;
    Index frames = 0;
    double noise_std = 0.0;
    std::uint64_t seed = 0;
    double sample_rate_hz = 1.0;

    RealMatrix generator;       // linear_system: m x m
    RealVector initial_state;   // linear_system: m

    std::vector<SinusoidComponent> components;  // sinusoid_mixture

    double omega = 0.0;  // observed_rotation
};

struct LinearSystemData {
    Trajectory trajectory;
    ComplexVector spectrum;  // eigenvalues of the generator, the oracle
};

/// x_{k+1} = A x_k + noise; returns the trajectory and eig(A).
LinearSystemData gen_linear(const RealMatrix& generator, const RealVector& initial_state,
                            Index frames, double noise_std, std::uint64_t seed,
                            double sample_rate_hz = 1.0);

struct SinusoidData {
    Trajectory trajectory;  // 1 x n
    std::vector<SinusoidComponent> components;
    double sample_rate_hz = 1.0;

    /// Noise-free closed form at any frame index, including beyond n.
    double value_at(std::int64_t k) const;
    RealMatrix continuation(std::int64_t from, Index count) const;
};

/// y_k = sum_j A_j sin(omega_j (k-1)/f + phi_j) + noise.
SinusoidData gen_sinusoids(const std::vector<SinusoidComponent>& components, double f_hz,
                           Index frames, double noise_std, std::uint64_t seed);

struct RotationData {
    Trajectory trajectory;    // 1 x n: first coordinate of the hidden state
    RealMatrix hidden_states; // 2 x n
    double omega = 0.0;
    double sample_rate_hz = 1.0;

    double value_at(std::int64_t k) const;
    RealMatrix continuation(std::int64_t from, Index count) const;
};

/// Hidden planar rotation by omega/f per step from z_1 = (1, 0); only the
/// first coordinate is observed.
RotationData gen_observed_rotation(double omega, double f_hz, Index n);

struct GeneratedData {
    dataio::Dataset dataset;
    SyntheticSpec spec;

    /// Noise-free oracle continuation, m x count, frames from..from+count-1.
    RealMatrix continuation(std::int64_t from, Index count) const;
};

/// Dispatch on spec.kind; identical specs (including seed) generate
/// bit-identical trajectories.
GeneratedData generate(const SyntheticSpec& spec, const std::string& name = "synthetic");

}  // namespace dmdd::synth
