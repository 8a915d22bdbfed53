#pragma once

#include "dmdd/dmd.hpp"
#include "dmdd/synth.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>

namespace dmdd::serialize {

using json = nlohmann::ordered_json;

// Model schema ("dmdd-model", version 1): dim, base_dim, delays,
// n_snapshots, last_input_frame_index, sample_rate_hz, fit_options,
// eigenvalues, amplitudes, modes. Complex values are [re, im] pairs; modes
// are stored column-major. Doubles use shortest round-trip encoding, so a
// save/load cycle is lossless.
json model_to_json(const DelayedDmdModel& model);
DelayedDmdModel model_from_json(const json& j);

void save_model(const std::filesystem::path& path, const DelayedDmdModel& model);
DelayedDmdModel load_model(const std::filesystem::path& path);

// Synthetic-spec schema ("dmdd-spec", version 1), same conventions.
json spec_to_json(const synth::SyntheticSpec& spec);
synth::SyntheticSpec spec_from_json(const json& j);

void save_spec(const std::filesystem::path& path, const synth::SyntheticSpec& spec);
synth::SyntheticSpec load_spec(const std::filesystem::path& path);

json load_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

}  // namespace dmdd::serialize
