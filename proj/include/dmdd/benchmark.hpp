#pragma once

#include "dmdd/dataio.hpp"
#include "dmdd/dmd.hpp"
#include "dmdd/metrics.hpp"
#include "dmdd/serialize.hpp"
#include "dmdd/synth.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace dmdd::bench {

struct DatasetSource {
    std::string name;
    std::filesystem::path csv;  // empty when synthetic
    double sample_rate_hz = 1.0;
    std::optional<synth::SyntheticSpec> synthetic;
};

struct ChannelSubset {
    std::string name;
    std::vector<Index> indices;        // original-dataset channel indices, or
    std::vector<std::string> labels;   // label/marker names (one of the two)
};

struct BenchmarkConfig {
    std::vector<DatasetSource> datasets;
    Index total_len = 0;
    std::vector<Index> input_lens;
    std::vector<Index> horizons;
    std::vector<Index> delays;
    std::string transform = "none";  // none | second_difference
    std::vector<ChannelSubset> channel_subsets;  // empty: one implicit "all"
    std::vector<Index> score_channels;  // original indices; empty: all subset channels
    std::vector<std::string> metric_set = {"mse", "kl"};
    std::filesystem::path output_dir = "dmdd-out";
    FitOptions fit_options;
};

BenchmarkConfig config_from_json(const serialize::json& j);
serialize::json config_to_json(const BenchmarkConfig& config);

// Cell status is either "ok" or a reason string; infeasible combinations are
// kept in the grid, never silently dropped. Reasons in use:
//   "infeasible: d <= N"
//   "infeasible: input_len + horizon > total_len"
//   "empty_windows"
//   "error: <message>"
struct AnticipationCell {
    std::string dataset;
    std::string subset;
    Index input_len = 0;
    Index delays = 0;
    Index horizon = 0;
    std::string status;
    metrics::ErrorSummary errors;
    Index window_count = 0;
};

struct ReconstructionCell {
    std::string dataset;
    std::string subset;
    Index delays = 0;
    std::string status;
    double mse = 0.0;
    Index window_count = 0;
};

struct DatasetNote {
    std::string dataset;
    Index frames = 0;
    Index channels = 0;
    std::vector<std::string> notices;
};

struct FitTiming {
    std::string dataset;
    std::string subset;
    Index input_len = 0;  // -1 for reconstruction fits
    Index delays = 0;
    double mean_fit_seconds = 0.0;
    Index fit_count = 0;
};

struct EvaluationReport {
    BenchmarkConfig config;
    std::vector<DatasetNote> datasets;
    std::vector<AnticipationCell> anticipation;
    std::vector<ReconstructionCell> reconstruction;
    std::vector<FitTiming> timings;  // wall clock; kept out of report JSON
    Index ok_cells = 0;
};

/// Evaluate the full grid. Cells run in parallel; every result lands in a
/// preassigned slot, so the report is identical regardless of scheduling.
EvaluationReport run_benchmark(const BenchmarkConfig& config);

/// Deterministic report body: fixed field order, shortest round-trip floats,
/// no wall-clock content. Identical config + inputs give identical bytes.
serialize::json report_to_json(const EvaluationReport& report);

/// Wall-clock sidecar, deliberately separate from the deterministic report.
serialize::json timings_to_json(const EvaluationReport& report);

/// Writes report.json, timings.json and the plot-ready CSV tables
/// (reconstruction_vs_delay, anticipation_vs_delay, error_vs_input_length,
/// spatial_context when more than one subset is configured).
void write_outputs(const EvaluationReport& report, const std::filesystem::path& dir);

}  // namespace dmdd::bench
