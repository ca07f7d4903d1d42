#include "rissim/config.hpp"

#include <filesystem>

#include <nlohmann/json.hpp>

#include "rissim/io.hpp"

namespace rissim {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
    throw ValidationError("config: " + field + ": " + what);
}

const json& require(const json& j, const std::string& field, const std::string& path) {
    auto it = j.find(field);
    if (it == j.end())
        fail(path.empty() ? field : path + "." + field, "missing");
    return *it;
}

double number(const json& j, const std::string& path) {
    if (!j.is_number())
        fail(path, "expected a number");
    return j.get<double>();
}

double number_or(const json& j, const std::string& field, const std::string& path,
                 double fallback) {
    auto it = j.find(field);
    if (it == j.end())
        return fallback;
    return number(*it, path.empty() ? field : path + "." + field);
}

ArrayGeometry parse_geometry(const json& j) {
    const json& g = require(j, "geometry", "");
    return ArrayGeometry(static_cast<int>(number(require(g, "n_rows", "geometry"),
                                                 "geometry.n_rows")),
                         static_cast<int>(number(require(g, "n_cols", "geometry"),
                                                 "geometry.n_cols")),
                         number(require(g, "pitch_m", "geometry"), "geometry.pitch_m"),
                         number(require(g, "frequency_hz", "geometry"),
                                "geometry.frequency_hz"));
}

Direction parse_direction(const json& j, const std::string& path) {
    return Direction(number(require(j, "theta_deg", path), path + ".theta_deg"),
                     number(require(j, "phi_deg", path), path + ".phi_deg"));
}

SourceModel parse_source(const json& j) {
    const json& s = require(j, "source", "");
    const json& kind = require(s, "kind", "source");
    if (!kind.is_string())
        fail("source.kind", "expected 'spherical' or 'plane'");
    std::string k = kind.get<std::string>();
    if (k == "spherical") {
        const json& pos = require(s, "position_m", "source");
        if (!pos.is_array() || pos.size() != 3)
            fail("source.position_m", "expected [x, y, z] in meters");
        Vec3 p{number(pos[0], "source.position_m[0]"), number(pos[1], "source.position_m[1]"),
               number(pos[2], "source.position_m[2]")};
        return SourceModel::spherical(p, number_or(s, "q_feed", "source", 6.5));
    }
    if (k == "plane") {
        const json& inc = require(s, "incidence_deg", "source");
        return SourceModel::plane(parse_direction(inc, "source.incidence_deg"),
                                  number_or(s, "amplitude", "source", 1.0));
    }
    fail("source.kind", "unknown kind '" + k + "'");
}

StateMapping parse_mapping(const json& j) {
    auto it = j.find("mapping");
    if (it == j.end())
        return StateMapping::standard();
    if (!it->is_array() || it->size() != 4)
        fail("mapping", "expected 4 [diode1, diode2] pairs");
    std::vector<DiodeStates> table;
    for (std::size_t n = 0; n < 4; ++n) {
        const json& pair = (*it)[n];
        if (!pair.is_array() || pair.size() != 2)
            fail("mapping[" + std::to_string(n) + "]", "expected [diode1, diode2]");
        table.push_back({number(pair[0], "mapping") != 0.0, number(pair[1], "mapping") != 0.0});
    }
    return StateMapping(std::move(table));
}

} // namespace

RunConfig load_run_config(const std::string& path) {
    std::string bytes = read_file(path);
    json j;
    try {
        j = json::parse(bytes);
    } catch (const json::parse_error& e) {
        throw ValidationError("config: " + path + ": " + e.what());
    }
    if (!j.is_object())
        throw ValidationError("config: " + path + ": expected a JSON object");

    const json& quant = require(j, "quantization", "");
    std::optional<int> bits;
    std::optional<std::string> codebook_csv;
    if (quant.contains("bits"))
        bits = static_cast<int>(number(quant["bits"], "quantization.bits"));
    if (quant.contains("codebook_csv")) {
        if (!quant["codebook_csv"].is_string())
            fail("quantization.codebook_csv", "expected a path string");
        codebook_csv = quant["codebook_csv"].get<std::string>();
    }
    if (bits.has_value() == codebook_csv.has_value())
        fail("quantization", "exactly one of bits / codebook_csv must be set");
    if (codebook_csv) {
        std::filesystem::path p(*codebook_csv);
        if (p.is_relative())
            p = std::filesystem::path(path).parent_path() / p;
        if (!std::filesystem::exists(p))
            fail("quantization.codebook_csv", "file does not exist: " + p.string());
        codebook_csv = p.string();
    }

    double offset = 0.0;
    std::optional<std::vector<double>> sweep;
    if (j.contains("offset_sweep_deg")) {
        if (j.contains("offset_deg"))
            fail("offset_deg", "mutually exclusive with offset_sweep_deg");
        const json& arr = j["offset_sweep_deg"];
        if (!arr.is_array() || arr.empty())
            fail("offset_sweep_deg", "expected a non-empty array of degrees");
        std::vector<double> values;
        for (std::size_t n = 0; n < arr.size(); ++n)
            values.push_back(number(arr[n], "offset_sweep_deg[" + std::to_string(n) + "]"));
        sweep = std::move(values);
    } else {
        offset = number_or(j, "offset_deg", "", 0.0);
    }

    GridSpec grid;
    if (j.contains("grid")) {
        const json& g = j["grid"];
        grid.dtheta_deg = number_or(g, "dtheta_deg", "grid", grid.dtheta_deg);
        grid.dphi_deg = number_or(g, "dphi_deg", "grid", grid.dphi_deg);
    }

    RunConfig config{parse_geometry(j),
                     parse_source(j),
                     parse_direction(require(j, "steer", ""), "steer"),
                     bits,
                     codebook_csv,
                     offset,
                     std::move(sweep),
                     grid,
                     number_or(j, "element_q", "", 1.0),
                     parse_mapping(j),
                     fnv1a_hex(bytes)};
    if (config.element_exponent < 0.0)
        fail("element_q", "must be >= 0");
    return config;
}

std::vector<PhaseState> resolve_states(const RunConfig& config) {
    if (config.bits)
        return ideal_states(*config.bits);
    PhaseCodebook codebook = load_codebook(*config.codebook_csv);
    return codebook.states_at(config.geometry.frequency);
}

} // namespace rissim
