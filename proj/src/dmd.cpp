#include "dmdd/dmd.hpp"

#include "dmdd/embedding.hpp"
#include "dmdd/kernels.hpp"
#include "dmdd/linalg.hpp"

namespace dmdd {

namespace {

void validate_options(const FitOptions& opts) {
    if (!(opts.rank_tol >= 0.0 && opts.rank_tol < 1.0)) {
        throw ConfigError("rank_tol must lie in [0, 1)");
    }
    if (!(opts.zero_eig_tol >= 0.0)) {
        throw ConfigError("zero_eig_tol must be non-negative");
    }
    if (!(opts.max_imag_residual >= 0.0)) {
        throw ConfigError("max_imag_residual must be non-negative");
    }
}

PredictedSeries series_range(const DmdModel& model, std::int64_t from, Index count) {
    const ComplexMatrix weighted = model.modes * model.amplitudes.asDiagonal();
    PredictedSeries out;
    out.values = kernels::spectral_series(weighted, model.eigenvalues, from, count,
                                          &out.max_abs_imag);
    const double scale = 1.0 + (out.values.size() > 0 ? out.values.cwiseAbs().maxCoeff() : 0.0);
    out.conjugacy_warning = out.max_abs_imag > model.options.max_imag_residual * scale;
    return out;
}

}  // namespace

DmdModel fit(const RealMatrix& snapshots, const FitOptions& opts) {
    validate_options(opts);
    const Index m = snapshots.rows();
    const Index n = snapshots.cols();
    if (n < 3) {
        throw TooFewSnapshotsError("fit needs at least 3 snapshots, got " + std::to_string(n));
    }

    const RealMatrix x = snapshots.leftCols(n - 1);
    const RealMatrix y = snapshots.rightCols(n - 1);

    const linalg::SvdResult svd = linalg::reduced_svd(x, opts.rank_tol);

    // Y V Sigma^-1 appears both in the low-dimensional operator and in the
    // mode formula; form it once.
    const RealMatrix yvs =
        (y * svd.v) * svd.singular_values.cwiseInverse().asDiagonal();
    const RealMatrix s_small = svd.u.transpose() * yvs;

    const linalg::EigResult eig = linalg::eig_dense(s_small.cast<Complex>());

    Index kept = 0;
    for (Index i = 0; i < eig.eigenvalues.size(); ++i) {
        if (std::abs(eig.eigenvalues[i]) > opts.zero_eig_tol) {
            ++kept;
        }
    }
    if (kept == 0) {
        throw DegenerateSpectrumError("all eigenvalues fall below zero_eig_tol; no dynamic modes");
    }

    DmdModel model;
    model.dim = m;
    model.n_snapshots = n;
    model.options = opts;
    model.modes.resize(m, kept);
    model.eigenvalues.resize(kept);

    const ComplexMatrix yvs_c = yvs.cast<Complex>();
    Index col = 0;
    for (Index i = 0; i < eig.eigenvalues.size(); ++i) {
        const Complex lambda = eig.eigenvalues[i];
        if (std::abs(lambda) <= opts.zero_eig_tol) {
            continue;
        }
        ComplexVector mode = (yvs_c * eig.eigenvectors.col(i)) / lambda;
        model.modes.col(col) = mode / mode.norm();
        model.eigenvalues[col] = lambda;
        ++col;
    }

    // a = Lambda^-1 Theta^+ x_2, anchored at the second snapshot.
    const ComplexVector x2 = snapshots.col(1).cast<Complex>();
    ComplexVector amplitudes = linalg::pinv(model.modes, opts.rank_tol) * x2;
    for (Index i = 0; i < kept; ++i) {
        amplitudes[i] /= model.eigenvalues[i];
    }
    model.amplitudes = std::move(amplitudes);
    return model;
}

DmdModel fit(const Trajectory& traj, const FitOptions& opts) {
    return fit(traj.values, opts);
}

PredictedState predict_state(const DmdModel& model, std::int64_t k) {
    if (k < 2) {
        throw UnsupportedIndexError("prediction index must be >= 2, got " + std::to_string(k));
    }
    PredictedSeries series = series_range(model, k, 1);
    return PredictedState{series.values.col(0), series.max_abs_imag, series.conjugacy_warning};
}

PredictedSeries reconstruct(const DmdModel& model, std::int64_t from, std::int64_t to) {
    if (from < 2) {
        throw UnsupportedIndexError("reconstruction starts at frame 2, got " + std::to_string(from));
    }
    if (to < from) {
        throw UnsupportedIndexError("reconstruction range is empty");
    }
    return series_range(model, from, static_cast<Index>(to - from + 1));
}

PredictedSeries forecast(const DmdModel& model, Index horizon) {
    if (horizon < 1) {
        throw UnsupportedIndexError("forecast horizon must be >= 1, got " + std::to_string(horizon));
    }
    return series_range(model, model.n_snapshots + 1, horizon);
}

DelayedDmdModel fit_delayed(const Trajectory& traj, Index delays, const FitOptions& opts) {
    const Index n = traj.frames();
    if (n < 3) {
        throw TooFewSnapshotsError("fit needs at least 3 frames, got " + std::to_string(n));
    }
    if (delays < 0 || delays > n - 3) {
        throw TooManyDelaysError("too many delays: d=" + std::to_string(delays) +
                                 ", maximum feasible d=" + std::to_string(n - 3) + " for " +
                                 std::to_string(n) + " frames (embedded fit needs 3 columns)");
    }
    const embedding::EmbeddedTrajectory embedded =
        embedding::hankel_embed(traj, embedding::DelayConfig{delays});

    DelayedDmdModel model;
    model.inner = fit(embedded.values, opts);
    model.base_dim = traj.dim();
    model.delays = delays;
    model.last_input_frame_index = n;
    model.sample_rate_hz = traj.sample_rate_hz;
    return model;
}

PredictedSeries forecast_delayed(const DelayedDmdModel& model, Index horizon,
                                 FrameExtraction extraction) {
    PredictedSeries stacked = forecast(model.inner, horizon);
    const Index m = model.base_dim;
    const Index d = model.delays;

    PredictedSeries out;
    out.max_abs_imag = stacked.max_abs_imag;
    out.conjugacy_warning = stacked.conjugacy_warning;
    out.values.resize(m, horizon);

    if (extraction == FrameExtraction::LatestBlock) {
        out.values = stacked.values.block(d * m, 0, m, horizon);
        return out;
    }

    // Average the overlapping estimates: frame n+j appears as block d+j-c of
    // predicted state c for c = j .. min(horizon, j+d).
    for (Index j = 1; j <= horizon; ++j) {
        const Index c_end = std::min<Index>(horizon, j + d);
        RealVector acc = RealVector::Zero(m);
        for (Index c = j; c <= c_end; ++c) {
            const Index block = d + j - c;
            acc += stacked.values.block(block * m, c - 1, m, 1);
        }
        out.values.col(j - 1) = acc / static_cast<double>(c_end - j + 1);
    }
    return out;
}

PredictedSeries reconstruct_embedded(const DelayedDmdModel& model) {
    return reconstruct(model.inner, 2, model.inner.n_snapshots);
}

PredictedSeries reconstruct_delayed(const DelayedDmdModel& model) {
    PredictedSeries stacked = reconstruct_embedded(model);
    const Index m = model.base_dim;
    const Index d = model.delays;
    PredictedSeries out;
    out.max_abs_imag = stacked.max_abs_imag;
    out.conjugacy_warning = stacked.conjugacy_warning;
    out.values = stacked.values.block(d * m, 0, m, stacked.values.cols());
    return out;
}

}  // namespace dmdd
