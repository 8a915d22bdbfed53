#include "dmdd/benchmark.hpp"
#include "dmdd/dataio.hpp"
#include "dmdd/dmd.hpp"
#include "dmdd/metrics.hpp"
#include "dmdd/serialize.hpp"
#include "dmdd/synth.hpp"
#include "dmdd/version.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using dmdd::Index;

constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitAllFailed = 4;

dmdd::dataio::Dataset forecast_as_dataset(const dmdd::RealMatrix& values, double sample_rate_hz) {
    dmdd::dataio::Dataset ds;
    ds.name = "forecast";
    ds.trajectory = dmdd::Trajectory{values, sample_rate_hz};
    for (Index i = 0; i < values.rows(); ++i) {
        ds.channel_labels.push_back("c" + std::to_string(i));
    }
    return ds;
}

dmdd::serialize::json summary_to_json(const dmdd::metrics::ErrorSummary& summary) {
    dmdd::serialize::json j;
    j["mse"] = summary.mse;
    j["kl"] = summary.kl;
    j["kl_note"] = dmdd::metrics::kl_variant_note;
    j["per_frame_mse"] = summary.per_frame_mse;
    j["pairs"] = summary.pair_count;
    return j;
}

void emit_summary(const dmdd::metrics::ErrorSummary& summary, const std::string& report_path) {
    const dmdd::serialize::json j = summary_to_json(summary);
    if (report_path.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        dmdd::serialize::write_json_file(report_path, j);
    }
}

struct FitArgs {
    std::string input;
    std::string output = "model.json";
    Index delays = 0;
    Index input_frames = 0;  // 0: use the whole file
    double sample_rate = 1.0;
    dmdd::FitOptions options;
};

int run_fit(const FitArgs& args) {
    dmdd::dataio::Dataset ds = dmdd::dataio::load_csv(args.input, args.sample_rate);
    dmdd::Trajectory traj = ds.trajectory;
    if (args.input_frames > 0) {
        if (args.input_frames > traj.frames()) {
            throw dmdd::FormatError("--input-frames " + std::to_string(args.input_frames) +
                                    " exceeds the " + std::to_string(traj.frames()) +
                                    " frames in " + args.input);
        }
        traj = dmdd::Trajectory{traj.values.leftCols(args.input_frames), traj.sample_rate_hz};
    }
    const dmdd::DelayedDmdModel model = dmdd::fit_delayed(traj, args.delays, args.options);
    dmdd::serialize::save_model(args.output, model);
    std::cout << "wrote " << args.output << " (state dim " << model.inner.dim << ", "
              << model.inner.spectral_rank() << " modes)\n";
    return 0;
}

struct ForecastArgs {
    std::string model;
    std::string output = "forecast.csv";
    std::string ground_truth;
    std::string report;
    Index horizon = 0;
    bool average_blocks = false;
};

int run_forecast(const ForecastArgs& args) {
    const dmdd::DelayedDmdModel model = dmdd::serialize::load_model(args.model);
    const auto extraction = args.average_blocks ? dmdd::FrameExtraction::AverageBlocks
                                                : dmdd::FrameExtraction::LatestBlock;
    const dmdd::PredictedSeries series =
        dmdd::forecast_delayed(model, args.horizon, extraction);
    if (series.conjugacy_warning) {
        std::cerr << "warning: imaginary residual " << series.max_abs_imag
                  << " exceeds the conjugacy threshold; spectrum may be unpaired\n";
    }
    dmdd::dataio::save_csv(args.output,
                           forecast_as_dataset(series.values, model.sample_rate_hz));

    if (!args.ground_truth.empty()) {
        const dmdd::dataio::Dataset gt =
            dmdd::dataio::load_csv(args.ground_truth, model.sample_rate_hz);
        if (gt.dim() != series.values.rows()) {
            throw dmdd::DimensionMismatchError("ground truth has " + std::to_string(gt.dim()) +
                                               " channels, forecast has " +
                                               std::to_string(series.values.rows()));
        }
        if (gt.frames() < args.horizon) {
            throw dmdd::FormatError("ground truth has " + std::to_string(gt.frames()) +
                                    " frames, horizon needs " + std::to_string(args.horizon));
        }
        std::vector<dmdd::metrics::PredictionPair> pairs(1);
        pairs[0].ground_truth = gt.trajectory.values.leftCols(args.horizon);
        pairs[0].prediction = series.values;
        emit_summary(dmdd::metrics::summarize(pairs), args.report);
    }
    return 0;
}

struct ReconstructArgs {
    std::string model;
    std::string output = "reconstruction.csv";
    std::string ground_truth;
    std::string report;
};

int run_reconstruct(const ReconstructArgs& args) {
    const dmdd::DelayedDmdModel model = dmdd::serialize::load_model(args.model);
    const dmdd::PredictedSeries series = dmdd::reconstruct_delayed(model);
    // Columns cover original frames d+2 .. n.
    dmdd::dataio::save_csv(args.output,
                           forecast_as_dataset(series.values, model.sample_rate_hz));
    std::cout << "reconstructed frames " << model.delays + 2 << ".."
              << model.last_input_frame_index << " -> " << args.output << '\n';

    if (!args.ground_truth.empty()) {
        const dmdd::dataio::Dataset gt =
            dmdd::dataio::load_csv(args.ground_truth, model.sample_rate_hz);
        if (gt.dim() != series.values.rows()) {
            throw dmdd::DimensionMismatchError("ground truth channel count mismatch");
        }
        if (gt.frames() < model.last_input_frame_index) {
            throw dmdd::FormatError("ground truth has fewer frames than the fitted input");
        }
        std::vector<dmdd::metrics::PredictionPair> pairs(1);
        pairs[0].ground_truth = gt.trajectory.values.block(
            0, model.delays + 1, gt.dim(), series.values.cols());
        pairs[0].prediction = series.values;
        emit_summary(dmdd::metrics::summarize(pairs), args.report);
    }
    return 0;
}

int run_benchmark_cmd(const std::string& config_path) {
    const dmdd::bench::BenchmarkConfig config =
        dmdd::bench::config_from_json(dmdd::serialize::load_json_file(config_path));
    const dmdd::bench::EvaluationReport report = dmdd::bench::run_benchmark(config);
    dmdd::bench::write_outputs(report, config.output_dir);
    const std::size_t total = report.anticipation.size() + report.reconstruction.size();
    std::cout << "benchmark: " << report.ok_cells << "/" << total << " cells ok, outputs in "
              << config.output_dir.string() << '\n';
    return report.ok_cells > 0 ? 0 : kExitAllFailed;
}

struct SynthArgs {
    std::string spec;
    std::string output = "synthetic.csv";
    std::string continuation;
    Index continue_frames = 20;
};

int run_synth(const SynthArgs& args) {
    const dmdd::synth::SyntheticSpec spec = dmdd::serialize::load_spec(args.spec);
    const dmdd::synth::GeneratedData data = dmdd::synth::generate(spec);
    dmdd::dataio::save_csv(args.output, data.dataset);
    std::cout << "wrote " << args.output << " (" << data.dataset.dim() << " channels, "
              << data.dataset.frames() << " frames)\n";
    if (!args.continuation.empty()) {
        dmdd::dataio::Dataset cont = data.dataset;
        cont.name = "continuation";
        cont.trajectory = dmdd::Trajectory{
            data.continuation(spec.frames + 1, args.continue_frames), spec.sample_rate_hz};
        dmdd::dataio::save_csv(args.continuation, cont);
        std::cout << "wrote " << args.continuation << " (oracle frames "
                  << spec.frames + 1 << ".." << spec.frames + args.continue_frames << ")\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"delay-embedded dynamic mode decomposition forecaster"};
    app.set_version_flag("--version", std::string(dmdd::version));
    app.require_subcommand(1);

    FitArgs fit_args;
    CLI::App* fit = app.add_subcommand("fit", "fit a model to a CSV time series");
    fit->add_option("input", fit_args.input, "input CSV (frames as rows)")->required();
    fit->add_option("--delays", fit_args.delays, "delay count d (stacked copies minus one)");
    fit->add_option("--input-frames", fit_args.input_frames, "use only the first N frames");
    fit->add_option("--sample-rate", fit_args.sample_rate, "sample rate in Hz")
        ->check(CLI::PositiveNumber);
    fit->add_option("--rank-tol", fit_args.options.rank_tol, "SVD truncation, relative");
    fit->add_option("--zero-eig-tol", fit_args.options.zero_eig_tol, "zero-eigenvalue threshold");
    fit->add_option("--max-imag-residual", fit_args.options.max_imag_residual,
                    "conjugacy warning threshold");
    fit->add_option("--output", fit_args.output, "model JSON path");

    ForecastArgs forecast_args;
    CLI::App* forecast = app.add_subcommand("forecast", "forecast future frames from a model");
    forecast->add_option("model", forecast_args.model, "model JSON from 'fit'")->required();
    forecast->add_option("--horizon", forecast_args.horizon, "frames to predict")
        ->required()
        ->check(CLI::PositiveNumber);
    forecast->add_option("--ground-truth", forecast_args.ground_truth,
                         "CSV with the true continuation, scored when given");
    forecast->add_option("--output", forecast_args.output, "forecast CSV path");
    forecast->add_option("--report", forecast_args.report,
                         "error summary JSON path (default: stdout)");
    forecast->add_flag("--average-blocks", forecast_args.average_blocks,
                       "average the overlapping delay-block estimates instead of "
                       "reading the newest block");

    ReconstructArgs reconstruct_args;
    CLI::App* reconstruct =
        app.add_subcommand("reconstruct", "reconstruct the fitted window from a model");
    reconstruct->add_option("model", reconstruct_args.model, "model JSON from 'fit'")->required();
    reconstruct->add_option("--output", reconstruct_args.output, "reconstruction CSV path");
    reconstruct->add_option("--ground-truth", reconstruct_args.ground_truth,
                            "original input CSV, scored when given");
    reconstruct->add_option("--report", reconstruct_args.report,
                            "error summary JSON path (default: stdout)");

    std::string config_path;
    CLI::App* benchmark = app.add_subcommand("benchmark", "run the evaluation grid of a config");
    benchmark->add_option("--config", config_path, "benchmark config JSON")->required();

    SynthArgs synth_args;
    CLI::App* synth = app.add_subcommand("synth", "generate a synthetic trajectory from a spec");
    synth->add_option("spec", synth_args.spec, "synthetic spec JSON")->required();
    synth->add_option("--output", synth_args.output, "trajectory CSV path");
    synth->add_option("--continuation", synth_args.continuation,
                      "also write the noise-free oracle continuation CSV");
    synth->add_option("--continue-frames", synth_args.continue_frames,
                      "continuation length in frames")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (fit->parsed()) return run_fit(fit_args);
        if (forecast->parsed()) return run_forecast(forecast_args);
        if (reconstruct->parsed()) return run_reconstruct(reconstruct_args);
        if (benchmark->parsed()) return run_benchmark_cmd(config_path);
        if (synth->parsed()) return run_synth(synth_args);
    } catch (const dmdd::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.kind() == dmdd::ErrorKind::Input ? kExitUsage : kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumeric;
    }
    return 0;
}
