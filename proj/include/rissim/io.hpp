#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rissim/codebook.hpp"
#include "rissim/fields.hpp"
#include "rissim/metrics.hpp"
#include "rissim/synthesis.hpp"

namespace rissim {

inline constexpr const char* kToolName = "rissim";
inline constexpr const char* kToolVersion = "0.1.0";

// Reproducibility fingerprint carried in every output.
struct OutputMeta {
    std::string config_hash; // 16 hex chars

    std::string comment_line() const; // "# rissim <version> config=<hash>"
};

// FNV-1a 64-bit over raw bytes, rendered as 16 lowercase hex chars.
std::string fnv1a_hex(const std::string& bytes);

// Read a whole file; ValidationError when unreadable.
std::string read_file(const std::string& path);

// Write via temp file + rename so readers never see partial output.
void atomic_write(const std::string& path, const std::string& content);

// Compact deterministic number formatting for CSV output.
std::string format_number(double value);

std::string render_map_csv(const PhaseMap& ideal, const QuantizedMap& quantized,
                           const OutputMeta& meta);
std::string render_pattern_csv(const Pattern& pattern, const OutputMeta& meta);
std::string render_cut_csv(const Cut& cut, const OutputMeta& meta);
std::string render_scan_csv(const std::vector<ScanRow>& rows, const OutputMeta& meta);
std::string render_loss_csv(const std::vector<LossRow>& rows, const OutputMeta& meta);
std::string render_nbit_csv(const PhaseCodebook& codebook, const OutputMeta& meta);

// Parse a map CSV produced by render_map_csv back into per-element rows.
struct MapRow {
    int row = 0;
    int col = 0;
    double ideal_phase_deg = 0.0;
    int state_index = 0;
    double realized_phase_deg = 0.0;
    double realized_mag_lin = 0.0;
};
std::vector<MapRow> parse_map_csv(const std::string& path);

} // namespace rissim
