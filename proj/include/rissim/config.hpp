#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rissim/codebook.hpp"
#include "rissim/control.hpp"
#include "rissim/fields.hpp"
#include "rissim/source.hpp"

namespace rissim {

// Parsed JSON run configuration; see README for the schema. Exactly one of
// bits / codebook_csv selects the quantization states.
struct RunConfig {
    ArrayGeometry geometry;
    SourceModel source;
    Direction steer;
    std::optional<int> bits;
    std::optional<std::string> codebook_csv; // resolved against the config directory
    double offset_deg = 0.0;
    std::optional<std::vector<double>> offset_sweep_deg;
    GridSpec grid;
    double element_exponent = 1.0;
    StateMapping mapping = StateMapping::standard();
    std::string config_hash; // fingerprint of the config file bytes
};

RunConfig load_run_config(const std::string& path);

// Quantization states at the operating frequency: an ideal 2^bits codebook,
// or the codebook CSV interpolated at geometry.frequency.
std::vector<PhaseState> resolve_states(const RunConfig& config);

} // namespace rissim
