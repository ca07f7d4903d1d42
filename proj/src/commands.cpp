#include "rissim/commands.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "rissim/io.hpp"
#include "rissim/metrics.hpp"

namespace rissim {

namespace {

using ordered_json = nlohmann::ordered_json;

double pick_offset(const RunConfig& config, const std::vector<PhaseState>& states) {
    if (!config.offset_sweep_deg)
        return config.offset_deg;
    OffsetResult best = optimize_offset(config.geometry, config.source, config.steer, states,
                                        *config.offset_sweep_deg);
    return best.offset_deg;
}

ordered_json meta_object(const OutputMeta& meta) {
    ordered_json m;
    m["tool"] = kToolName;
    m["version"] = kToolVersion;
    m["config_hash"] = meta.config_hash.empty() ? "none" : meta.config_hash;
    return m;
}

// Specular reflection of the plane-wave arrival direction about the normal.
Direction specular_of(const Direction& incidence) {
    return Direction(incidence.theta_deg, incidence.phi_deg + 180.0);
}

} // namespace

SynthResult cmd_synth(const RunConfig& config, const std::string& out_prefix) {
    std::vector<PhaseState> states = resolve_states(config);
    double offset = pick_offset(config, states);
    PhaseMap ideal = ideal_phase_profile(config.geometry, config.source, config.steer, offset);
    QuantizedMap quantized = quantize_phase_map(ideal, states);

    OutputMeta meta{config.config_hash};
    SynthResult result;
    result.n_elements = config.geometry.n_elements();
    result.offset_deg = offset;
    result.state_histogram.assign(states.size(), 0);
    for (int idx : quantized.state_indices)
        ++result.state_histogram[static_cast<std::size_t>(idx)];
    result.map_csv = out_prefix + "_map.csv";
    atomic_write(result.map_csv, render_map_csv(ideal, quantized, meta));
    return result;
}

PatternResult cmd_pattern(const RunConfig& config, const std::string& out_prefix) {
    std::vector<PhaseState> states = resolve_states(config);
    double offset = pick_offset(config, states);
    PhaseMap ideal = ideal_phase_profile(config.geometry, config.source, config.steer, offset);
    QuantizedMap quantized = quantize_phase_map(ideal, states);
    std::vector<std::complex<double>> excitation = illuminate(config.geometry, config.source);
    Pattern pattern = radiate(config.geometry, excitation, quantized, config.grid,
                              config.element_exponent);
    if (config.source.kind() == SourceModel::Kind::plane)
        pattern.annotation = "rcs";
    pattern.metadata["source"] =
        config.source.kind() == SourceModel::Kind::plane ? "plane" : "spherical";
    pattern.metadata["steer_theta_deg"] = format_number(config.steer.theta_deg);
    pattern.metadata["steer_phi_deg"] = format_number(config.steer.phi_deg);
    pattern.metadata["states"] = std::to_string(states.size());
    pattern.metadata["offset_deg"] = format_number(offset);

    PeakInfo peak = find_peak(pattern);
    if (peak.degenerate)
        throw ComputationError("pattern: radiated field is identically zero");

    PatternResult result;
    result.peak = peak.direction;
    result.peak_level_db = 20.0 * std::log10(peak.level);
    result.hpbw_deg = half_power_beamwidth_deg(pattern, peak.direction);
    result.sll_db = side_lobe_level_db(pattern, peak.direction);
    if (config.source.kind() == SourceModel::Kind::plane)
        result.qll_db = quantization_lobe_level_db(pattern, config.steer,
                                                   specular_of(config.source.incidence()));

    OutputMeta meta{config.config_hash};
    result.pattern_csv = out_prefix + "_pattern.csv";
    result.e_cut_csv = out_prefix + "_cut_e.csv";
    result.h_cut_csv = out_prefix + "_cut_h.csv";
    result.metrics_json = out_prefix + "_metrics.json";
    atomic_write(result.pattern_csv, render_pattern_csv(pattern, meta));
    atomic_write(result.e_cut_csv, render_cut_csv(pattern_cut(pattern, kEPlaneAzimuthDeg), meta));
    atomic_write(result.h_cut_csv, render_cut_csv(pattern_cut(pattern, kHPlaneAzimuthDeg), meta));

    ordered_json doc;
    doc["meta"] = meta_object(meta);
    doc["peak_theta_deg"] = result.peak.theta_deg;
    doc["peak_phi_deg"] = result.peak.phi_deg;
    doc["peak_level_db"] = result.peak_level_db;
    doc["hpbw_deg"] = result.hpbw_deg;
    doc["sll_db"] = result.sll_db;
    if (result.qll_db)
        doc["qll_db"] = *result.qll_db;
    else
        doc["qll_db"] = nullptr;
    atomic_write(result.metrics_json, doc.dump(2) + "\n");
    return result;
}

CodebookResult cmd_codebook(const std::string& csv_path, double threshold,
                            const std::string& out_prefix) {
    PhaseCodebook codebook = load_codebook(csv_path);
    OutputMeta meta{fnv1a_hex(read_file(csv_path))};

    CodebookResult result;
    result.threshold = threshold;
    for (auto [lo, hi] : effective_bandwidth(codebook, threshold)) {
        BandInterval band{lo, hi, 2.0 * (hi - lo) / (hi + lo)};
        result.bands.push_back(band);
    }

    result.nbit_csv = out_prefix + "_nbit.csv";
    atomic_write(result.nbit_csv, render_nbit_csv(codebook, meta));

    ordered_json doc;
    doc["meta"] = meta_object(meta);
    doc["threshold_bits"] = threshold;
    doc["bands"] = ordered_json::array();
    for (const BandInterval& b : result.bands) {
        ordered_json jb;
        jb["f_low_hz"] = b.f_low_hz;
        jb["f_high_hz"] = b.f_high_hz;
        jb["relative_bandwidth_percent"] = 100.0 * b.relative_bandwidth;
        doc["bands"].push_back(jb);
    }
    result.band_json = out_prefix + "_band.json";
    atomic_write(result.band_json, doc.dump(2) + "\n");
    return result;
}

SweepResult cmd_sweep(const RunConfig& config, const std::vector<double>& theta_degrees,
                      const std::string& out_csv) {
    std::vector<PhaseState> states = resolve_states(config);
    std::vector<Direction> angles;
    angles.reserve(theta_degrees.size());
    for (double theta : theta_degrees)
        angles.emplace_back(theta, config.steer.phi_deg);

    SweepResult result;
    result.rows = scan_sweep(config.geometry, config.source, states, angles, config.grid,
                             config.element_exponent, config.offset_deg);
    result.table_csv = out_csv;
    atomic_write(out_csv, render_scan_csv(result.rows, OutputMeta{config.config_hash}));
    return result;
}

BitstreamResult cmd_bitstream(const RunConfig& config, const std::string& map_csv,
                              const std::string& out_prefix, bool verify) {
    std::vector<PhaseState> states = resolve_states(config);
    std::vector<MapRow> rows = parse_map_csv(map_csv);
    const ArrayGeometry& g = config.geometry;
    if (rows.size() != static_cast<std::size_t>(g.n_elements()))
        throw ValidationError("bitstream: map has " + std::to_string(rows.size()) +
                              " rows, geometry expects " + std::to_string(g.n_elements()));

    QuantizedMap map{g, {}, {}};
    map.state_indices.reserve(rows.size());
    map.realized.reserve(rows.size());
    for (std::size_t e = 0; e < rows.size(); ++e) {
        const MapRow& r = rows[e];
        int expected_i = static_cast<int>(e) / g.n_cols;
        int expected_j = static_cast<int>(e) % g.n_cols;
        if (r.row != expected_i || r.col != expected_j)
            throw ValidationError("bitstream: map rows out of row-major order at line for cell (" +
                                  std::to_string(r.row) + "," + std::to_string(r.col) + ")");
        if (r.state_index < 0 || static_cast<std::size_t>(r.state_index) >= states.size())
            throw ValidationError("bitstream: cell (" + std::to_string(r.row) + "," +
                                  std::to_string(r.col) + ") state index " +
                                  std::to_string(r.state_index) + " out of range");
        map.state_indices.push_back(r.state_index);
        map.realized.push_back(std::polar(r.realized_mag_lin, deg2rad(r.realized_phase_deg)));
    }

    ChainConfig chain;
    BiasFrame frame = apply_mapping(map, config.mapping);
    std::vector<std::uint8_t> bits = serialize_frame(frame, chain);

    BitstreamResult result;
    result.data_bits = frame.n_cells * 4;
    result.registers = static_cast<int>(bits.size()) / chain.register_width;
    result.hex_path = out_prefix + ".hex";
    result.sidecar_path = out_prefix + ".json";
    atomic_write(result.hex_path, bits_to_hex(bits) + "\n");

    ordered_json doc;
    doc["meta"] = meta_object(OutputMeta{config.config_hash});
    doc["n_cells"] = frame.n_cells;
    doc["lines"] = result.data_bits;
    doc["registers"] = result.registers;
    doc["register_width"] = chain.register_width;
    doc["mapping"] = ordered_json::array();
    for (const DiodeStates& d : config.mapping.table())
        doc["mapping"].push_back({d.diode1_on ? 1 : 0, d.diode2_on ? 1 : 0});
    atomic_write(result.sidecar_path, doc.dump(2) + "\n");

    if (verify) {
        std::vector<std::uint8_t> lines = simulate_chain(bits, chain);
        BiasFrame recovered = parse_lines(lines, frame.n_cells);
        std::vector<int> indices = recover_state_indices(recovered, config.mapping);
        if (indices != map.state_indices)
            throw ComputationError("bitstream: chain round-trip mismatch");
        result.verified = true;
    }
    return result;
}

} // namespace rissim
