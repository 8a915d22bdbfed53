#include "dmdd/dataio.hpp"

#include "numstr.hpp"

#include <algorithm>
#include <fstream>

namespace dmdd::dataio {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string> split_fields(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.emplace_back(trim(line.substr(start)));
            break;
        }
        fields.emplace_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

using detail::format_double;
using detail::parse_double;

}  // namespace

Dataset load_csv(const std::filesystem::path& path, double sample_rate_hz,
                 const std::string& name) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open " + path.string());
    }
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    while (!lines.empty() && trim(lines.back()).empty()) {
        lines.pop_back();
    }
    if (lines.empty()) {
        throw FormatError(path.string() + ": file is empty");
    }

    std::vector<std::string> first = split_fields(lines[0]);
    const std::size_t m = first.size();

    std::vector<std::string> labels;
    std::size_t data_start = 0;
    {
        double v;
        const bool numeric = std::all_of(first.begin(), first.end(),
                                         [&](const std::string& c) { return parse_double(c, v); });
        if (numeric) {
            labels.reserve(m);
            for (std::size_t i = 0; i < m; ++i) {
                labels.push_back("c" + std::to_string(i));
            }
        } else {
            labels = first;
            data_start = 1;
        }
    }

    const std::size_t n = lines.size() - data_start;
    if (n < 2) {
        throw TooFewFramesError(path.string() + ": needs at least 2 data rows, got " +
                                std::to_string(n));
    }

    RealMatrix values(static_cast<Index>(m), static_cast<Index>(n));
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t row_no = data_start + r + 1;  // 1-based, counting the header
        if (trim(lines[data_start + r]).empty()) {
            throw FormatError(path.string() + ": row " + std::to_string(row_no) + " is empty");
        }
        const std::vector<std::string> fields = split_fields(lines[data_start + r]);
        if (fields.size() != m) {
            throw FormatError(path.string() + ": row " + std::to_string(row_no) + " has " +
                              std::to_string(fields.size()) + " fields, expected " +
                              std::to_string(m));
        }
        for (std::size_t c = 0; c < m; ++c) {
            double v;
            if (!parse_double(fields[c], v)) {
                throw ParseError(path.string() + ": row " + std::to_string(row_no) +
                                 ", column " + std::to_string(c + 1) + ": not a number: '" +
                                 fields[c] + "'");
            }
            values(static_cast<Index>(c), static_cast<Index>(r)) = v;
        }
    }

    Dataset ds;
    ds.name = name.empty() ? path.stem().string() : name;
    ds.trajectory = make_trajectory(std::move(values), sample_rate_hz);
    ds.channel_labels = std::move(labels);
    return ds;
}

void save_csv(const std::filesystem::path& path, const Dataset& ds) {
    if (ds.channel_labels.size() != static_cast<std::size_t>(ds.dim())) {
        throw DimensionMismatchError("channel label count does not match observables");
    }
    for (const std::string& label : ds.channel_labels) {
        if (label.find(',') != std::string::npos || label.find('\n') != std::string::npos) {
            throw FormatError("channel label '" + label + "' contains a separator");
        }
    }
    std::ofstream out(path);
    if (!out) {
        throw FormatError("cannot write " + path.string());
    }
    for (std::size_t i = 0; i < ds.channel_labels.size(); ++i) {
        if (i > 0) out << ',';
        out << ds.channel_labels[i];
    }
    out << '\n';
    const RealMatrix& values = ds.trajectory.values;
    for (Index j = 0; j < values.cols(); ++j) {
        for (Index i = 0; i < values.rows(); ++i) {
            if (i > 0) out << ',';
            out << format_double(values(i, j));
        }
        out << '\n';
    }
    if (!out) {
        throw FormatError("write failed for " + path.string());
    }
}

std::vector<ExperimentWindow> window_split(const Dataset& ds, Index total_len, Index input_len,
                                           Index horizon) {
    if (total_len < 1 || input_len < 2 || horizon < 1) {
        throw WindowConfigError("window sizes must satisfy total_len >= 1, input_len >= 2, "
                                "horizon >= 1");
    }
    if (input_len + horizon > total_len) {
        throw WindowConfigError("input_len + horizon = " + std::to_string(input_len + horizon) +
                                " exceeds total_len = " + std::to_string(total_len));
    }
    const Index n = ds.frames();
    const Index count = n / total_len;
    std::vector<ExperimentWindow> windows;
    windows.reserve(static_cast<std::size_t>(std::max<Index>(count, 0)));
    const RealMatrix& values = ds.trajectory.values;
    for (Index w = 0; w < count; ++w) {
        const Index offset = w * total_len;
        ExperimentWindow window;
        window.offset = offset;
        window.input = Trajectory{values.block(0, offset, ds.dim(), input_len),
                                  ds.trajectory.sample_rate_hz};
        window.ground_truth = values.block(0, offset + input_len, ds.dim(), horizon);
        windows.push_back(std::move(window));
    }
    return windows;
}

Trajectory second_difference(const Trajectory& traj) {
    const Index n = traj.frames();
    if (n < 3) {
        throw TooFewFramesError("second difference needs at least 3 frames, got " +
                                std::to_string(n));
    }
    const double f2 = traj.sample_rate_hz * traj.sample_rate_hz;
    RealMatrix out(traj.dim(), n - 2);
    for (Index j = 1; j + 1 < n; ++j) {
        out.col(j - 1) =
            (traj.values.col(j + 1) - 2.0 * traj.values.col(j) + traj.values.col(j - 1)) * f2;
    }
    return Trajectory{std::move(out), traj.sample_rate_hz};
}

Dataset second_difference(const Dataset& ds) {
    Dataset out;
    out.name = ds.name;
    out.trajectory = second_difference(ds.trajectory);
    out.channel_labels = ds.channel_labels;
    return out;
}

Dataset select_channels(const Dataset& ds, std::span<const Index> indices) {
    std::vector<Index> selected;
    selected.reserve(indices.size());
    for (Index idx : indices) {
        if (idx < 0 || idx >= ds.dim()) {
            throw UnknownChannelError("channel index " + std::to_string(idx) + " outside 0.." +
                                      std::to_string(ds.dim() - 1));
        }
        selected.push_back(idx);
    }
    std::sort(selected.begin(), selected.end());
    selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
    if (selected.empty()) {
        throw UnknownChannelError("no channels selected");
    }

    Dataset out;
    out.name = ds.name;
    RealMatrix values(static_cast<Index>(selected.size()), ds.frames());
    out.channel_labels.reserve(selected.size());
    for (std::size_t r = 0; r < selected.size(); ++r) {
        values.row(static_cast<Index>(r)) = ds.trajectory.values.row(selected[r]);
        out.channel_labels.push_back(ds.channel_labels[static_cast<std::size_t>(selected[r])]);
    }
    out.trajectory = Trajectory{std::move(values), ds.trajectory.sample_rate_hz};
    return out;
}

std::vector<Index> resolve_channels(const Dataset& ds, std::span<const std::string> names) {
    auto matches = [](const std::string& label, const std::string& name) {
        if (label == name) return true;
        if (label.size() > name.size() + 1 && label.compare(0, name.size(), name) == 0) {
            const char sep = label[name.size()];
            return sep == '_' || sep == '.';
        }
        return false;
    };
    std::vector<Index> selected;
    for (const std::string& name : names) {
        bool found = false;
        for (std::size_t i = 0; i < ds.channel_labels.size(); ++i) {
            if (matches(ds.channel_labels[i], name)) {
                selected.push_back(static_cast<Index>(i));
                found = true;
            }
        }
        if (!found) {
            throw UnknownChannelError("unknown channel '" + name + "'");
        }
    }
    std::sort(selected.begin(), selected.end());
    selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
    return selected;
}

Dataset select_channels(const Dataset& ds, std::span<const std::string> names) {
    return select_channels(ds, resolve_channels(ds, names));
}

}  // namespace dmdd::dataio
