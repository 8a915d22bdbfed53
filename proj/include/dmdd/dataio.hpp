#pragma once

#include "dmdd/types.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace dmdd::dataio {

struct Dataset {
    std::string name;
    Trajectory trajectory;
    std::vector<std::string> channel_labels;  // one per observable

    Index dim() const { return trajectory.dim(); }
    Index frames() const { return trajectory.frames(); }
};

/// One benchmark sub-sequence: input frames and the ground truth that
/// immediately follows them in the source, contiguous and non-overlapping.
struct ExperimentWindow {
    Trajectory input;        // m x input_len
    RealMatrix ground_truth; // m x horizon
    Index offset = 0;        // 0-based start frame in the source
};

// CSV contract: UTF-8, comma separator, one row per frame, one column per
// observable, optional single header row of labels. Values are written with
// shortest round-trip encoding, so save followed by load is bit-exact.
Dataset load_csv(const std::filesystem::path& path, double sample_rate_hz,
                 const std::string& name = "");
void save_csv(const std::filesystem::path& path, const Dataset& ds);

/// Non-overlapping windows of total_len frames anchored at frame 1; within
/// each, the first input_len frames form the input and the next horizon
/// frames the ground truth. A trailing remainder shorter than total_len is
/// dropped; fewer than total_len frames overall yields an empty result.
std::vector<ExperimentWindow> window_split(const Dataset& ds, Index total_len,
                                           Index input_len, Index horizon);

/// Central second difference scaled by the squared sample rate
/// (position * s^-2, the accelerometer simulation). Output has n-2 frames.
Trajectory second_difference(const Trajectory& traj);
Dataset second_difference(const Dataset& ds);

/// Restrict to the given channels, keeping the dataset's channel order.
Dataset select_channels(const Dataset& ds, std::span<const Index> indices);

/// Name-based selection: a name matches a channel label exactly, or acts as
/// a marker prefix matching label, label + "_*" and label + ".*" (so "M5"
/// selects M5_x, M5_y, M5_z).
Dataset select_channels(const Dataset& ds, std::span<const std::string> names);

/// Channel indices (dataset order, deduplicated) that the given names select.
std::vector<Index> resolve_channels(const Dataset& ds, std::span<const std::string> names);

}  // namespace dmdd::dataio
