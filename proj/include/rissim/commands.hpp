#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rissim/config.hpp"
#include "rissim/metrics.hpp"

namespace rissim {

// Implementation of the CLI subcommands. Each command writes its artifacts
// atomically under the given prefix and returns a summary for the caller to
// print. File formats are documented in the README.

struct SynthResult {
    int n_elements = 0;
    double offset_deg = 0.0;
    std::vector<int> state_histogram;
    std::string map_csv;
};

SynthResult cmd_synth(const RunConfig& config, const std::string& out_prefix);

struct PatternResult {
    Direction peak{};
    double peak_level_db = 0.0;
    double hpbw_deg = 0.0;
    double sll_db = 0.0;
    std::optional<double> qll_db; // only under plane-wave illumination
    std::string pattern_csv;
    std::string e_cut_csv;
    std::string h_cut_csv;
    std::string metrics_json;
};

PatternResult cmd_pattern(const RunConfig& config, const std::string& out_prefix);

struct BandInterval {
    double f_low_hz = 0.0;
    double f_high_hz = 0.0;
    double relative_bandwidth = 0.0; // 2 (fh - fl) / (fh + fl)
};

struct CodebookResult {
    double threshold = 0.0;
    std::vector<BandInterval> bands;
    std::string nbit_csv;
    std::string band_json;
};

CodebookResult cmd_codebook(const std::string& csv_path, double threshold,
                            const std::string& out_prefix);

struct SweepResult {
    std::vector<ScanRow> rows;
    std::string table_csv;
};

// Scan over the listed polar angles at the config steer azimuth.
SweepResult cmd_sweep(const RunConfig& config, const std::vector<double>& theta_degrees,
                      const std::string& out_csv);

struct BitstreamResult {
    int data_bits = 0;
    int registers = 0;
    bool verified = false;
    std::string hex_path;
    std::string sidecar_path;
};

BitstreamResult cmd_bitstream(const RunConfig& config, const std::string& map_csv,
                              const std::string& out_prefix, bool verify);

} // namespace rissim
