#include "dmdd/benchmark.hpp"

#include "dmdd/embedding.hpp"
#include "dmdd/kernels.hpp"
#include "dmdd/version.hpp"
#include "numstr.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <numeric>

namespace dmdd::bench {

namespace {

using serialize::json;

// ---------------------------------------------------------------- config

template <typename T>
std::vector<T> index_list(const json& j, const char* name) {
    if (!j.contains(name) || !j.at(name).is_array()) {
        throw ConfigError(std::string("config needs an array field '") + name + "'");
    }
    std::vector<T> out;
    for (const json& v : j.at(name)) {
        out.push_back(v.get<T>());
    }
    return out;
}

}  // namespace

BenchmarkConfig config_from_json(const json& j) {
    BenchmarkConfig config;
    if (!j.contains("datasets") || !j.at("datasets").is_array() || j.at("datasets").empty()) {
        throw ConfigError("config needs a non-empty 'datasets' array");
    }
    for (const json& d : j.at("datasets")) {
        DatasetSource src;
        if (!d.contains("name")) {
            throw ConfigError("every dataset needs a 'name'");
        }
        src.name = d.at("name").get<std::string>();
        if (d.contains("csv") == d.contains("synthetic")) {
            throw ConfigError("dataset '" + src.name + "' needs exactly one of 'csv' or 'synthetic'");
        }
        if (d.contains("csv")) {
            src.csv = d.at("csv").get<std::string>();
            if (!d.contains("sample_rate_hz")) {
                throw ConfigError("csv dataset '" + src.name + "' needs 'sample_rate_hz'");
            }
            src.sample_rate_hz = d.at("sample_rate_hz").get<double>();
        } else {
            src.synthetic = serialize::spec_from_json(d.at("synthetic"));
        }
        config.datasets.push_back(std::move(src));
    }

    if (!j.contains("total_len")) {
        throw ConfigError("config needs 'total_len'");
    }
    config.total_len = j.at("total_len").get<Index>();
    if (config.total_len < 3) {
        throw ConfigError("total_len must be at least 3");
    }
    config.input_lens = index_list<Index>(j, "input_lens");
    config.horizons = index_list<Index>(j, "horizons");
    config.delays = index_list<Index>(j, "delays");
    if (config.input_lens.empty() || config.horizons.empty() || config.delays.empty()) {
        throw ConfigError("input_lens, horizons and delays must all be non-empty");
    }
    for (Index v : config.input_lens) {
        if (v < 3) throw ConfigError("input lengths must be >= 3 (a fit needs 3 frames)");
    }
    for (Index v : config.horizons) {
        if (v < 1) throw ConfigError("horizons must be >= 1");
    }
    for (Index v : config.delays) {
        if (v < 0) throw ConfigError("delays must be >= 0");
    }

    if (j.contains("transform")) {
        config.transform = j.at("transform").get<std::string>();
    }
    if (config.transform != "none" && config.transform != "second_difference") {
        throw ConfigError("transform must be 'none' or 'second_difference'");
    }

    if (j.contains("channel_subsets")) {
        for (const json& s : j.at("channel_subsets")) {
            ChannelSubset subset;
            if (!s.contains("name")) {
                throw ConfigError("every channel subset needs a 'name'");
            }
            subset.name = s.at("name").get<std::string>();
            if (s.contains("indices") == s.contains("labels")) {
                throw ConfigError("subset '" + subset.name +
                                  "' needs exactly one of 'indices' or 'labels'");
            }
            if (s.contains("indices")) {
                subset.indices = index_list<Index>(s, "indices");
            } else {
                subset.labels = index_list<std::string>(s, "labels");
            }
            config.channel_subsets.push_back(std::move(subset));
        }
    }
    if (j.contains("score_channels")) {
        config.score_channels = index_list<Index>(j, "score_channels");
    }

    if (j.contains("metrics")) {
        config.metric_set = index_list<std::string>(j, "metrics");
        if (config.metric_set.empty()) {
            throw ConfigError("metric set must not be empty");
        }
        for (const std::string& m : config.metric_set) {
            if (m != "mse" && m != "kl") {
                throw ConfigError("unknown metric '" + m + "' (supported: mse, kl)");
            }
        }
    }
    if (j.contains("output_dir")) {
        config.output_dir = j.at("output_dir").get<std::string>();
    }
    if (j.contains("fit_options")) {
        const json& o = j.at("fit_options");
        if (o.contains("rank_tol")) config.fit_options.rank_tol = o.at("rank_tol").get<double>();
        if (o.contains("zero_eig_tol")) {
            config.fit_options.zero_eig_tol = o.at("zero_eig_tol").get<double>();
        }
        if (o.contains("max_imag_residual")) {
            config.fit_options.max_imag_residual = o.at("max_imag_residual").get<double>();
        }
    }
    return config;
}

json config_to_json(const BenchmarkConfig& config) {
    json j;
    j["datasets"] = json::array();
    for (const DatasetSource& src : config.datasets) {
        json d;
        d["name"] = src.name;
        if (src.synthetic) {
            d["synthetic"] = serialize::spec_to_json(*src.synthetic);
        } else {
            d["csv"] = src.csv.string();
            d["sample_rate_hz"] = src.sample_rate_hz;
        }
        j["datasets"].push_back(std::move(d));
    }
    j["total_len"] = config.total_len;
    j["input_lens"] = config.input_lens;
    j["horizons"] = config.horizons;
    j["delays"] = config.delays;
    j["transform"] = config.transform;
    if (!config.channel_subsets.empty()) {
        j["channel_subsets"] = json::array();
        for (const ChannelSubset& s : config.channel_subsets) {
            json sj;
            sj["name"] = s.name;
            if (!s.indices.empty()) {
                sj["indices"] = s.indices;
            } else {
                sj["labels"] = s.labels;
            }
            j["channel_subsets"].push_back(std::move(sj));
        }
    }
    if (!config.score_channels.empty()) {
        j["score_channels"] = config.score_channels;
    }
    j["metrics"] = config.metric_set;
    j["output_dir"] = config.output_dir.string();
    j["fit_options"] = {{"rank_tol", config.fit_options.rank_tol},
                        {"zero_eig_tol", config.fit_options.zero_eig_tol},
                        {"max_imag_residual", config.fit_options.max_imag_residual}};
    return j;
}

// ------------------------------------------------------------------ run

namespace {

struct PreparedSubset {
    std::string name;
    dataio::Dataset data;
    std::vector<Index> score_rows;  // empty: score all rows
    std::string error;              // non-empty: subset unusable
};

struct PreparedDataset {
    std::string name;
    std::string error;  // non-empty: dataset unusable
    Index frames = 0;
    Index channels = 0;
    std::vector<std::string> notices;
    std::vector<PreparedSubset> subsets;
};

struct WindowSet {
    std::vector<dataio::ExperimentWindow> windows;
    Index max_feasible_horizon = 0;  // 0: no horizon fits into total_len
};

RealMatrix select_rows(const RealMatrix& m, const std::vector<Index>& rows) {
    if (rows.empty()) {
        return m;
    }
    RealMatrix out(static_cast<Index>(rows.size()), m.cols());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        out.row(static_cast<Index>(r)) = m.row(rows[r]);
    }
    return out;
}

PreparedDataset prepare_dataset(const DatasetSource& src, const BenchmarkConfig& config) {
    PreparedDataset prepared;
    prepared.name = src.name;
    dataio::Dataset data;
    try {
        if (src.synthetic) {
            data = synth::generate(*src.synthetic, src.name).dataset;
        } else {
            data = dataio::load_csv(src.csv, src.sample_rate_hz, src.name);
        }
        if (config.transform == "second_difference") {
            data = dataio::second_difference(data);
        }
    } catch (const std::exception& e) {
        prepared.error = e.what();
        return prepared;
    }
    prepared.frames = data.frames();
    prepared.channels = data.dim();

    auto make_subset = [&](const std::string& name, const std::vector<Index>& original_indices,
                           const std::vector<std::string>& labels) {
        PreparedSubset subset;
        subset.name = name;
        try {
            std::vector<Index> selected = original_indices;
            if (!labels.empty()) {
                selected = dataio::resolve_channels(data, labels);
            }
            if (selected.empty()) {  // "all" subset
                subset.data = data;
                selected.resize(static_cast<std::size_t>(data.dim()));
                std::iota(selected.begin(), selected.end(), Index{0});
            } else {
                std::sort(selected.begin(), selected.end());
                selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
                subset.data = dataio::select_channels(data, selected);
            }
            for (Index sc : config.score_channels) {
                const auto it = std::find(selected.begin(), selected.end(), sc);
                if (it == selected.end()) {
                    throw UnknownChannelError("score channel " + std::to_string(sc) +
                                              " is not part of subset '" + name + "'");
                }
                subset.score_rows.push_back(static_cast<Index>(it - selected.begin()));
            }
        } catch (const std::exception& e) {
            subset.error = e.what();
        }
        return subset;
    };

    if (config.channel_subsets.empty()) {
        prepared.subsets.push_back(make_subset("all", {}, {}));
    } else {
        for (const ChannelSubset& s : config.channel_subsets) {
            prepared.subsets.push_back(make_subset(s.name, s.indices, s.labels));
        }
    }
    return prepared;
}

// Fit every window at one (input_len, d), forecast the widest feasible
// horizon once, then slice per requested horizon.
struct AnticipationTask {
    std::size_t dataset = 0;
    std::size_t subset = 0;
    std::size_t input_idx = 0;
    std::size_t delay_idx = 0;
    std::size_t cell_base = 0;    // first horizon cell in report order
    std::size_t timing_slot = 0;
    const WindowSet* windows = nullptr;
};

struct ReconstructionTask {
    std::size_t dataset = 0;
    std::size_t subset = 0;
    std::size_t delay_idx = 0;
    std::size_t cell_index = 0;
    std::size_t timing_slot = 0;
};

double embedded_reconstruction_mse(const DelayedDmdModel& model, const Trajectory& clip) {
    const embedding::EmbeddedTrajectory truth =
        embedding::hankel_embed(clip, embedding::DelayConfig{model.delays});
    const PredictedSeries rec = reconstruct_embedded(model);
    const RealMatrix target = truth.values.rightCols(truth.values.cols() - 1);
    return kernels::sum_squared_diff(rec.values, target) / static_cast<double>(target.size());
}

}  // namespace

EvaluationReport run_benchmark(const BenchmarkConfig& config) {
    EvaluationReport report;
    report.config = config;

    // Serial prepare: load/generate, transform, subset.
    std::vector<PreparedDataset> prepared;
    prepared.reserve(config.datasets.size());
    for (const DatasetSource& src : config.datasets) {
        prepared.push_back(prepare_dataset(src, config));
    }

    const std::size_t n_subsets =
        config.channel_subsets.empty() ? 1 : config.channel_subsets.size();
    const std::size_t n_inputs = config.input_lens.size();
    const std::size_t n_delays = config.delays.size();
    const std::size_t n_horizons = config.horizons.size();

    // Window sets per (dataset, subset, input_len), shared across delays.
    std::vector<WindowSet> window_sets(prepared.size() * n_subsets * n_inputs);
    for (std::size_t ds = 0; ds < prepared.size(); ++ds) {
        if (!prepared[ds].error.empty()) continue;
        for (std::size_t sub = 0; sub < n_subsets; ++sub) {
            const PreparedSubset& subset = prepared[ds].subsets[sub];
            if (!subset.error.empty()) continue;
            for (std::size_t ii = 0; ii < n_inputs; ++ii) {
                const Index input_len = config.input_lens[ii];
                WindowSet& ws = window_sets[(ds * n_subsets + sub) * n_inputs + ii];
                Index h_max = 0;
                for (Index h : config.horizons) {
                    if (input_len + h <= config.total_len) {
                        h_max = std::max(h_max, h);
                    }
                }
                ws.max_feasible_horizon = h_max;
                if (h_max == 0) continue;
                ws.windows = dataio::window_split(subset.data, config.total_len, input_len, h_max);
                if (ws.windows.empty() && sub == 0) {
                    prepared[ds].notices.push_back("empty_windows: input_len=" +
                                                   std::to_string(input_len));
                }
            }
        }
    }

    report.anticipation.resize(prepared.size() * n_subsets * n_inputs * n_delays * n_horizons);
    report.reconstruction.resize(prepared.size() * n_subsets * n_delays);

    // Pre-populate cell keys and the statuses that need no computation, and
    // collect the tasks that do.
    std::vector<AnticipationTask> ant_tasks;
    std::vector<ReconstructionTask> rec_tasks;
    std::size_t cell = 0;
    for (std::size_t ds = 0; ds < prepared.size(); ++ds) {
        for (std::size_t sub = 0; sub < n_subsets; ++sub) {
            const std::string subset_name =
                config.channel_subsets.empty() ? "all" : config.channel_subsets[sub].name;
            for (std::size_t ii = 0; ii < n_inputs; ++ii) {
                const Index input_len = config.input_lens[ii];
                const WindowSet& ws = window_sets[(ds * n_subsets + sub) * n_inputs + ii];
                for (std::size_t di = 0; di < n_delays; ++di) {
                    const Index d = config.delays[di];
                    bool runnable = true;
                    std::string blanket;
                    if (!prepared[ds].error.empty()) {
                        blanket = "error: " + prepared[ds].error;
                    } else if (!prepared[ds].subsets[sub].error.empty()) {
                        blanket = "error: " + prepared[ds].subsets[sub].error;
                    } else if (d > input_len - 3) {
                        blanket = "infeasible: d <= " + std::to_string(input_len - 3);
                    } else if (ws.max_feasible_horizon > 0 && ws.windows.empty()) {
                        blanket = "empty_windows";
                    }
                    if (!blanket.empty()) {
                        runnable = false;
                    }
                    const std::size_t cell_base = cell;
                    for (std::size_t hi = 0; hi < n_horizons; ++hi, ++cell) {
                        AnticipationCell& c = report.anticipation[cell];
                        c.dataset = prepared[ds].name;
                        c.subset = subset_name;
                        c.input_len = input_len;
                        c.delays = d;
                        c.horizon = config.horizons[hi];
                        if (!blanket.empty()) {
                            c.status = blanket;
                        } else if (input_len + c.horizon > config.total_len) {
                            c.status = "infeasible: input_len + horizon > total_len";
                        } else {
                            c.status = "pending";
                        }
                    }
                    if (runnable && ws.max_feasible_horizon > 0) {
                        AnticipationTask task;
                        task.dataset = ds;
                        task.subset = sub;
                        task.input_idx = ii;
                        task.delay_idx = di;
                        task.cell_base = cell_base;
                        task.windows = &ws;
                        ant_tasks.push_back(task);
                    } else {
                        // No runnable horizon at all; pending cells become infeasible.
                        for (std::size_t hi = 0; hi < n_horizons; ++hi) {
                            AnticipationCell& c = report.anticipation[cell_base + hi];
                            if (c.status == "pending") {
                                c.status = "infeasible: input_len + horizon > total_len";
                            }
                        }
                    }
                }
            }
        }
    }

    std::size_t rcell = 0;
    for (std::size_t ds = 0; ds < prepared.size(); ++ds) {
        for (std::size_t sub = 0; sub < n_subsets; ++sub) {
            const std::string subset_name =
                config.channel_subsets.empty() ? "all" : config.channel_subsets[sub].name;
            for (std::size_t di = 0; di < n_delays; ++di, ++rcell) {
                ReconstructionCell& c = report.reconstruction[rcell];
                c.dataset = prepared[ds].name;
                c.subset = subset_name;
                c.delays = config.delays[di];
                if (!prepared[ds].error.empty()) {
                    c.status = "error: " + prepared[ds].error;
                } else if (!prepared[ds].subsets[sub].error.empty()) {
                    c.status = "error: " + prepared[ds].subsets[sub].error;
                } else if (c.delays > config.total_len - 3) {
                    c.status = "infeasible: d <= " + std::to_string(config.total_len - 3);
                } else if (prepared[ds].frames / config.total_len == 0) {
                    c.status = "empty_windows";
                } else {
                    c.status = "pending";
                    ReconstructionTask task;
                    task.dataset = ds;
                    task.subset = sub;
                    task.delay_idx = di;
                    task.cell_index = rcell;
                    rec_tasks.push_back(task);
                }
            }
        }
    }

    report.timings.resize(ant_tasks.size() + rec_tasks.size());
    for (std::size_t i = 0; i < ant_tasks.size(); ++i) {
        ant_tasks[i].timing_slot = i;
    }
    for (std::size_t i = 0; i < rec_tasks.size(); ++i) {
        rec_tasks[i].timing_slot = ant_tasks.size() + i;
    }

    const bool want_kl = std::find(config.metric_set.begin(), config.metric_set.end(), "kl") !=
                         config.metric_set.end();

    // Every task owns immutable inputs and writes only its own slots, so the
    // schedule cannot influence the report.
    const auto n_ant = static_cast<std::int64_t>(ant_tasks.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t ti = 0; ti < n_ant; ++ti) {
        const AnticipationTask& task = ant_tasks[static_cast<std::size_t>(ti)];
        const WindowSet& ws = *task.windows;
        const Index d = config.delays[task.delay_idx];
        const std::vector<Index>& score_rows =
            prepared[task.dataset].subsets[task.subset].score_rows;

        std::string failure;
        std::vector<RealMatrix> forecasts;
        forecasts.reserve(ws.windows.size());
        double fit_seconds = 0.0;
        try {
            for (const dataio::ExperimentWindow& window : ws.windows) {
                const auto t0 = std::chrono::steady_clock::now();
                const DelayedDmdModel model = fit_delayed(window.input, d, config.fit_options);
                fit_seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                                   .count();
                forecasts.push_back(
                    forecast_delayed(model, ws.max_feasible_horizon).values);
            }
        } catch (const std::exception& e) {
            failure = std::string("error: ") + e.what();
        }

        FitTiming& timing = report.timings[task.timing_slot];
        timing.dataset = prepared[task.dataset].name;
        timing.subset = report.anticipation[task.cell_base].subset;
        timing.input_len = config.input_lens[task.input_idx];
        timing.delays = d;
        timing.fit_count = static_cast<Index>(forecasts.size());
        timing.mean_fit_seconds =
            forecasts.empty() ? 0.0 : fit_seconds / static_cast<double>(forecasts.size());

        for (std::size_t hi = 0; hi < n_horizons; ++hi) {
            AnticipationCell& c = report.anticipation[task.cell_base + hi];
            if (c.status != "pending") continue;
            if (!failure.empty()) {
                c.status = failure;
                continue;
            }
            std::vector<metrics::PredictionPair> pairs;
            pairs.reserve(ws.windows.size());
            for (std::size_t w = 0; w < ws.windows.size(); ++w) {
                metrics::PredictionPair pair;
                pair.ground_truth =
                    select_rows(ws.windows[w].ground_truth.leftCols(c.horizon), score_rows);
                pair.prediction = select_rows(forecasts[w].leftCols(c.horizon), score_rows);
                pairs.push_back(std::move(pair));
            }
            c.errors.mse = metrics::mse(pairs);
            c.errors.kl = want_kl ? metrics::kl_divergence(pairs) : 0.0;
            c.errors.per_frame_mse = metrics::per_frame_errors(pairs);
            c.errors.pair_count = static_cast<Index>(pairs.size());
            c.window_count = static_cast<Index>(pairs.size());
            c.status = "ok";
        }
    }

    const auto n_rec = static_cast<std::int64_t>(rec_tasks.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t ti = 0; ti < n_rec; ++ti) {
        const ReconstructionTask& task = rec_tasks[static_cast<std::size_t>(ti)];
        ReconstructionCell& c = report.reconstruction[task.cell_index];
        const PreparedSubset& subset = prepared[task.dataset].subsets[task.subset];
        const Index d = config.delays[task.delay_idx];
        const Index chunk_count = prepared[task.dataset].frames / config.total_len;

        FitTiming& timing = report.timings[task.timing_slot];
        timing.dataset = prepared[task.dataset].name;
        timing.subset = subset.name;
        timing.input_len = -1;
        timing.delays = d;

        try {
            double total = 0.0;
            double fit_seconds = 0.0;
            for (Index chunk = 0; chunk < chunk_count; ++chunk) {
                const Trajectory clip{subset.data.trajectory.values.block(
                                          0, chunk * config.total_len, subset.data.dim(),
                                          config.total_len),
                                      subset.data.trajectory.sample_rate_hz};
                const auto t0 = std::chrono::steady_clock::now();
                const DelayedDmdModel model = fit_delayed(clip, d, config.fit_options);
                fit_seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                                   .count();
                total += embedded_reconstruction_mse(model, clip);
            }
            c.mse = total / static_cast<double>(chunk_count);
            c.window_count = chunk_count;
            c.status = "ok";
            timing.fit_count = chunk_count;
            timing.mean_fit_seconds = fit_seconds / static_cast<double>(chunk_count);
        } catch (const std::exception& e) {
            c.status = std::string("error: ") + e.what();
        }
    }

    for (std::size_t ds = 0; ds < prepared.size(); ++ds) {
        DatasetNote note;
        note.dataset = prepared[ds].name;
        note.frames = prepared[ds].frames;
        note.channels = prepared[ds].channels;
        note.notices = prepared[ds].notices;
        if (!prepared[ds].error.empty()) {
            note.notices.push_back("error: " + prepared[ds].error);
        }
        report.datasets.push_back(std::move(note));
    }

    report.ok_cells = 0;
    for (const AnticipationCell& c : report.anticipation) {
        if (c.status == "ok") ++report.ok_cells;
    }
    for (const ReconstructionCell& c : report.reconstruction) {
        if (c.status == "ok") ++report.ok_cells;
    }
    return report;
}

// -------------------------------------------------------------- outputs

json report_to_json(const EvaluationReport& report) {
    const bool want_kl = std::find(report.config.metric_set.begin(),
                                   report.config.metric_set.end(),
                                   "kl") != report.config.metric_set.end();
    json j;
    j["format"] = "dmdd-report";
    j["version"] = 1;
    j["tool_version"] = version;
    j["kl_note"] = metrics::kl_variant_note;
    j["config"] = config_to_json(report.config);
    j["datasets"] = json::array();
    for (const DatasetNote& note : report.datasets) {
        j["datasets"].push_back({{"name", note.dataset},
                                 {"frames", note.frames},
                                 {"channels", note.channels},
                                 {"notices", note.notices}});
    }
    j["reconstruction"] = json::array();
    for (const ReconstructionCell& c : report.reconstruction) {
        json cj;
        cj["dataset"] = c.dataset;
        cj["subset"] = c.subset;
        cj["delays"] = c.delays;
        cj["status"] = c.status;
        if (c.status == "ok") {
            cj["windows"] = c.window_count;
            cj["mse"] = c.mse;
        }
        j["reconstruction"].push_back(std::move(cj));
    }
    j["anticipation"] = json::array();
    for (const AnticipationCell& c : report.anticipation) {
        json cj;
        cj["dataset"] = c.dataset;
        cj["subset"] = c.subset;
        cj["input_len"] = c.input_len;
        cj["delays"] = c.delays;
        cj["horizon"] = c.horizon;
        cj["status"] = c.status;
        if (c.status == "ok") {
            cj["windows"] = c.window_count;
            cj["mse"] = c.errors.mse;
            if (want_kl) {
                cj["kl"] = c.errors.kl;
            }
            cj["per_frame_mse"] = c.errors.per_frame_mse;
        }
        j["anticipation"].push_back(std::move(cj));
    }
    return j;
}

json timings_to_json(const EvaluationReport& report) {
    json j;
    j["format"] = "dmdd-timings";
    j["version"] = 1;
    j["fits"] = json::array();
    for (const FitTiming& t : report.timings) {
        j["fits"].push_back({{"dataset", t.dataset},
                             {"subset", t.subset},
                             {"input_len", t.input_len},
                             {"delays", t.delays},
                             {"fit_count", t.fit_count},
                             {"mean_fit_seconds", t.mean_fit_seconds}});
    }
    return j;
}

namespace {

std::string csv_number(double v) { return detail::format_double(v); }

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) {
        throw FormatError("cannot write " + path.string());
    }
    out << text;
    if (!out) {
        throw FormatError("write failed for " + path.string());
    }
}

}  // namespace

void write_outputs(const EvaluationReport& report, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    serialize::write_json_file(dir / "report.json", report_to_json(report));
    serialize::write_json_file(dir / "timings.json", timings_to_json(report));

    {
        std::string csv = "dataset,subset,delays,status,mse\n";
        for (const ReconstructionCell& c : report.reconstruction) {
            csv += c.dataset + "," + c.subset + "," + std::to_string(c.delays) + "," + c.status +
                   "," + (c.status == "ok" ? csv_number(c.mse) : "") + "\n";
        }
        write_text(dir / "reconstruction_vs_delay.csv", csv);
    }
    {
        std::string csv = "dataset,subset,input_len,delays,horizon,status,mse,kl\n";
        for (const AnticipationCell& c : report.anticipation) {
            csv += c.dataset + "," + c.subset + "," + std::to_string(c.input_len) + "," +
                   std::to_string(c.delays) + "," + std::to_string(c.horizon) + "," + c.status +
                   "," + (c.status == "ok" ? csv_number(c.errors.mse) : "") + "," +
                   (c.status == "ok" ? csv_number(c.errors.kl) : "") + "\n";
        }
        write_text(dir / "anticipation_vs_delay.csv", csv);
    }
    {
        // Same cells regrouped so each (horizon, delays) pair reads as a
        // series over the input length.
        std::vector<const AnticipationCell*> cells;
        cells.reserve(report.anticipation.size());
        for (const AnticipationCell& c : report.anticipation) {
            cells.push_back(&c);
        }
        std::stable_sort(cells.begin(), cells.end(),
                         [](const AnticipationCell* a, const AnticipationCell* b) {
                             return std::tie(a->dataset, a->subset, a->horizon, a->delays,
                                             a->input_len) < std::tie(b->dataset, b->subset,
                                                                      b->horizon, b->delays,
                                                                      b->input_len);
                         });
        std::string csv = "dataset,subset,horizon,delays,input_len,status,mse\n";
        for (const AnticipationCell* c : cells) {
            csv += c->dataset + "," + c->subset + "," + std::to_string(c->horizon) + "," +
                   std::to_string(c->delays) + "," + std::to_string(c->input_len) + "," +
                   c->status + "," + (c->status == "ok" ? csv_number(c->errors.mse) : "") + "\n";
        }
        write_text(dir / "error_vs_input_length.csv", csv);
    }
    if (report.config.channel_subsets.size() > 1) {
        std::string csv = "dataset,input_len,delays,horizon,subset,status,mse\n";
        for (const AnticipationCell& c : report.anticipation) {
            csv += c.dataset + "," + std::to_string(c.input_len) + "," +
                   std::to_string(c.delays) + "," + std::to_string(c.horizon) + "," + c.subset +
                   "," + c.status + "," + (c.status == "ok" ? csv_number(c.errors.mse) : "") +
                   "\n";
        }
        write_text(dir / "spatial_context.csv", csv);
    }
}

}  // namespace dmdd::bench
