#pragma once

#include "dmdd/types.hpp"

#include <cstdint>

namespace dmdd {

struct FitOptions {
    double rank_tol = 1e-10;           // SVD truncation, relative to sigma_1
    double zero_eig_tol = 1e-12;       // |lambda| at or below this counts as zero
    double max_imag_residual = 1e-6;   // conjugacy-warning threshold
};

/// Fitted spectral model: x_hat_k = Re(Theta Lambda^(k-1) a) for k >= 2.
/// Mode columns are unit-norm; eigenvalues are sorted by descending
/// magnitude and all exceed zero_eig_tol in modulus.
struct DmdModel {
    Index dim = 0;
    Index n_snapshots = 0;
    ComplexMatrix modes;        // dim x r0
    ComplexVector eigenvalues;  // r0
    ComplexVector amplitudes;   // r0
    FitOptions options;

    Index spectral_rank() const { return eigenvalues.size(); }
};

/// DmdModel fitted on the delay-embedded trajectory. inner.dim = (d+1)m and
/// inner.n_snapshots = n - d; last_input_frame_index is the original n.
struct DelayedDmdModel {
    DmdModel inner;
    Index base_dim = 0;
    Index delays = 0;
    Index last_input_frame_index = 0;
    double sample_rate_hz = 1.0;
};

struct PredictedState {
    RealVector value;
    double max_abs_imag = 0.0;
    bool conjugacy_warning = false;
};

struct PredictedSeries {
    RealMatrix values;  // dim x count
    double max_abs_imag = 0.0;
    bool conjugacy_warning = false;
};

DmdModel fit(const RealMatrix& snapshots, const FitOptions& opts = {});
DmdModel fit(const Trajectory& traj, const FitOptions& opts = {});

/// Closed-form state at frame k >= 2 (frame 1 is intentionally outside the
/// model: amplitudes anchor the expansion at the second snapshot).
PredictedState predict_state(const DmdModel& model, std::int64_t k);

/// predict_state over k = from..to, one column per frame.
PredictedSeries reconstruct(const DmdModel& model, std::int64_t from, std::int64_t to);

/// predict_state over k = n_snapshots+1 ... n_snapshots+horizon.
PredictedSeries forecast(const DmdModel& model, Index horizon);

DelayedDmdModel fit_delayed(const Trajectory& traj, Index delays, const FitOptions& opts = {});

/// How original frames are read out of predicted stacked states. A stacked
/// state holds d+1 overlapping frame estimates; the newest block is the
/// default, averaging the overlaps is the optional alternative.
enum class FrameExtraction { LatestBlock, AverageBlocks };

/// Forecast horizon original frames past the training window: column j is
/// the prediction of frame n+j.
PredictedSeries forecast_delayed(const DelayedDmdModel& model, Index horizon,
                                 FrameExtraction extraction = FrameExtraction::LatestBlock);

/// Reconstruction of original frames d+2 ... n (newest-block readout of the
/// embedded reconstruction), one column per frame.
PredictedSeries reconstruct_delayed(const DelayedDmdModel& model);

/// Embedded-space reconstruction of columns 2 ... n-d of the Hankel matrix.
PredictedSeries reconstruct_embedded(const DelayedDmdModel& model);

}  // namespace dmdd
