#include "dmdd/serialize.hpp"

#include <fstream>

namespace dmdd::serialize {

namespace {

template <typename T>
T field(const json& j, const char* name) {
    if (!j.contains(name)) {
        throw ParseError(std::string("missing field '") + name + "'");
    }
    try {
        return j.at(name).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad field '") + name + "': " + e.what());
    }
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw ParseError("complex values must be [re, im] pairs");
    }
    return Complex(j[0].get<double>(), j[1].get<double>());
}

json cvector_to_json(const ComplexVector& v) {
    json out = json::array();
    for (Index i = 0; i < v.size(); ++i) {
        out.push_back(complex_to_json(v[i]));
    }
    return out;
}

ComplexVector cvector_from_json(const json& j) {
    ComplexVector v(static_cast<Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        v[static_cast<Index>(i)] = complex_from_json(j[i]);
    }
    return v;
}

json cmatrix_to_json(const ComplexMatrix& m) {
    // column-major flat list
    json out = json::array();
    for (Index c = 0; c < m.cols(); ++c) {
        for (Index r = 0; r < m.rows(); ++r) {
            out.push_back(complex_to_json(m(r, c)));
        }
    }
    return out;
}

ComplexMatrix cmatrix_from_json(const json& j, Index rows, Index cols) {
    if (j.size() != static_cast<std::size_t>(rows * cols)) {
        throw ParseError("modes entry count " + std::to_string(j.size()) +
                         " does not match dim x r = " + std::to_string(rows * cols));
    }
    ComplexMatrix m(rows, cols);
    std::size_t idx = 0;
    for (Index c = 0; c < cols; ++c) {
        for (Index r = 0; r < rows; ++r) {
            m(r, c) = complex_from_json(j[idx++]);
        }
    }
    return m;
}

json rmatrix_to_json(const RealMatrix& m) {
    json out = json::array();
    for (Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Index c = 0; c < m.cols(); ++c) {
            row.push_back(m(r, c));
        }
        out.push_back(std::move(row));
    }
    return out;
}

RealMatrix rmatrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) {
        throw ParseError("matrix must be a non-empty array of rows");
    }
    const Index rows = static_cast<Index>(j.size());
    const Index cols = static_cast<Index>(j[0].size());
    RealMatrix m(rows, cols);
    for (Index r = 0; r < rows; ++r) {
        if (static_cast<Index>(j[r].size()) != cols) {
            throw ParseError("matrix rows are ragged");
        }
        for (Index c = 0; c < cols; ++c) {
            m(r, c) = j[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].get<double>();
        }
    }
    return m;
}

}  // namespace

json model_to_json(const DelayedDmdModel& model) {
    json j;
    j["format"] = "dmdd-model";
    j["version"] = 1;
    j["dim"] = model.inner.dim;
    j["base_dim"] = model.base_dim;
    j["delays"] = model.delays;
    j["n_snapshots"] = model.inner.n_snapshots;
    j["last_input_frame_index"] = model.last_input_frame_index;
    j["sample_rate_hz"] = model.sample_rate_hz;
    j["fit_options"] = {{"rank_tol", model.inner.options.rank_tol},
                        {"zero_eig_tol", model.inner.options.zero_eig_tol},
                        {"max_imag_residual", model.inner.options.max_imag_residual}};
    j["eigenvalues"] = cvector_to_json(model.inner.eigenvalues);
    j["amplitudes"] = cvector_to_json(model.inner.amplitudes);
    j["modes"] = cmatrix_to_json(model.inner.modes);
    return j;
}

DelayedDmdModel model_from_json(const json& j) {
    if (field<std::string>(j, "format") != "dmdd-model") {
        throw ParseError("not a dmdd-model file");
    }
    if (field<int>(j, "version") != 1) {
        throw ParseError("unsupported model version");
    }
    DelayedDmdModel model;
    model.inner.dim = field<Index>(j, "dim");
    model.base_dim = field<Index>(j, "base_dim");
    model.delays = field<Index>(j, "delays");
    model.inner.n_snapshots = field<Index>(j, "n_snapshots");
    model.last_input_frame_index = field<Index>(j, "last_input_frame_index");
    model.sample_rate_hz = field<double>(j, "sample_rate_hz");

    const json& opts = j.contains("fit_options") ? j.at("fit_options") : json::object();
    model.inner.options.rank_tol = field<double>(opts, "rank_tol");
    model.inner.options.zero_eig_tol = field<double>(opts, "zero_eig_tol");
    model.inner.options.max_imag_residual = field<double>(opts, "max_imag_residual");

    model.inner.eigenvalues = cvector_from_json(field<json>(j, "eigenvalues"));
    model.inner.amplitudes = cvector_from_json(field<json>(j, "amplitudes"));
    if (model.inner.eigenvalues.size() != model.inner.amplitudes.size()) {
        throw ParseError("eigenvalue and amplitude counts differ");
    }
    model.inner.modes =
        cmatrix_from_json(field<json>(j, "modes"), model.inner.dim, model.inner.eigenvalues.size());
    if (model.inner.dim != (model.delays + 1) * model.base_dim) {
        throw ParseError("dim does not equal (delays+1) * base_dim");
    }
    return model;
}

void save_model(const std::filesystem::path& path, const DelayedDmdModel& model) {
    write_json_file(path, model_to_json(model));
}

DelayedDmdModel load_model(const std::filesystem::path& path) {
    return model_from_json(load_json_file(path));
}

json spec_to_json(const synth::SyntheticSpec& spec) {
    using Kind = synth::SyntheticSpec::Kind;
    json j;
    j["format"] = "dmdd-spec";
    j["version"] = 1;
    switch (spec.kind) {
        case Kind::LinearSystem: j["kind"] = "linear_system"; break;
        case Kind::SinusoidMixture: j["kind"] = "sinusoid_mixture"; break;
        case Kind::ObservedRotation: j["kind"] = "observed_rotation"; break;
    }
    j["frames"] = spec.frames;
    j["noise_std"] = spec.noise_std;
    j["seed"] = spec.seed;
    j["sample_rate_hz"] = spec.sample_rate_hz;
    switch (spec.kind) {
        case Kind::LinearSystem: {
            j["generator"] = rmatrix_to_json(spec.generator);
            json x1 = json::array();
            for (Index i = 0; i < spec.initial_state.size(); ++i) {
                x1.push_back(spec.initial_state[i]);
            }
            j["initial_state"] = std::move(x1);
            break;
        }
        case Kind::SinusoidMixture: {
            json comps = json::array();
            for (const synth::SinusoidComponent& c : spec.components) {
                comps.push_back({{"amplitude", c.amplitude}, {"omega", c.omega}, {"phase", c.phase}});
            }
            j["components"] = std::move(comps);
            break;
        }
        case Kind::ObservedRotation:
            j["omega"] = spec.omega;
            break;
    }
    return j;
}

synth::SyntheticSpec spec_from_json(const json& j) {
    using Kind = synth::SyntheticSpec::Kind;
    // The format header is mandatory in standalone files but optional when a
    // spec is embedded in a benchmark config.
    if (j.contains("format") && field<std::string>(j, "format") != "dmdd-spec") {
        throw ParseError("not a dmdd-spec file");
    }
    if (j.contains("version") && field<int>(j, "version") != 1) {
        throw ParseError("unsupported spec version");
    }
    synth::SyntheticSpec spec;
    const std::string kind = field<std::string>(j, "kind");
    if (kind == "linear_system") {
        spec.kind = Kind::LinearSystem;
    } else if (kind == "sinusoid_mixture") {
        spec.kind = Kind::SinusoidMixture;
    } else if (kind == "observed_rotation") {
        spec.kind = Kind::ObservedRotation;
    } else {
        throw ParseError("unknown synthetic kind '" + kind + "'");
    }
    spec.frames = field<Index>(j, "frames");
    spec.noise_std = field<double>(j, "noise_std");
    spec.seed = field<std::uint64_t>(j, "seed");
    spec.sample_rate_hz = field<double>(j, "sample_rate_hz");
    switch (spec.kind) {
        case Kind::LinearSystem: {
            spec.generator = rmatrix_from_json(field<json>(j, "generator"));
            const json x1 = field<json>(j, "initial_state");
            spec.initial_state.resize(static_cast<Index>(x1.size()));
            for (std::size_t i = 0; i < x1.size(); ++i) {
                spec.initial_state[static_cast<Index>(i)] = x1[i].get<double>();
            }
            break;
        }
        case Kind::SinusoidMixture: {
            for (const json& c : field<json>(j, "components")) {
                spec.components.push_back({field<double>(c, "amplitude"), field<double>(c, "omega"),
                                           field<double>(c, "phase")});
            }
            break;
        }
        case Kind::ObservedRotation:
            spec.omega = field<double>(j, "omega");
            break;
    }
    return spec;
}

void save_spec(const std::filesystem::path& path, const synth::SyntheticSpec& spec) {
    write_json_file(path, spec_to_json(spec));
}

synth::SyntheticSpec load_spec(const std::filesystem::path& path) {
    return spec_from_json(load_json_file(path));
}

json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) {
        throw FormatError("cannot write " + path.string());
    }
    out << j.dump(2) << '\n';
    if (!out) {
        throw FormatError("write failed for " + path.string());
    }
}

}  // namespace dmdd::serialize
