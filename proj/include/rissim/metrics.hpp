#pragma once

#include <string>
#include <vector>

#include "rissim/fields.hpp"

namespace rissim {

struct PeakInfo {
    Direction direction{};
    double level = 0.0; // linear |E| at the peak
    bool degenerate = false;
};

// Grid argmax; ties broken by smallest theta, then smallest phi. An
// identically-zero pattern is flagged degenerate.
PeakInfo find_peak(const Pattern& pattern);

// Half-power width of the stitched cut through the peak's azimuth,
// degrees; -3 dB crossings are interpolated between grid samples.
double half_power_beamwidth_deg(const Pattern& pattern, const Direction& peak);

// Highest level outside the main-lobe exclusion region (angular radius
// 2 x HPBW around the peak), dB relative to the peak.
double side_lobe_level_db(const Pattern& pattern, const Direction& main);

// Level around the mirror of the steer direction (reflection of steer
// about the specular direction), dB relative to the main lobe. Both lobes
// are sampled as the maximum within a 3-degree window.
double quantization_lobe_level_db(const Pattern& pattern, const Direction& steer,
                                  const Direction& specular);

inline double enhancement_db(double on_level_db, double off_level_db) {
    return on_level_db - off_level_db;
}

// Peak directivity from trapezoidal power integration over the z > 0
// hemisphere, dB.
double peak_directivity_db(const Pattern& pattern);

struct ScanRow {
    Direction steer{};
    double peak_level_db = 0.0;
    double sll_db = 0.0;
    double pointing_error_deg = 0.0;
    bool ok = false;
    std::string error;
};

// Per angle: synthesize, quantize, radiate, extract metrics. Failures are
// recorded per row and the sweep continues.
std::vector<ScanRow> scan_sweep(const ArrayGeometry& geometry, const SourceModel& source,
                                const std::vector<PhaseState>& states,
                                const std::vector<Direction>& angles, const GridSpec& grid = {},
                                double element_exponent = 1.0, double offset_deg = 0.0);

struct LossRow {
    int bits = 0;
    double mean_loss_db = 0.0;
};

// Mean loss of the level at the steer direction, quantized vs continuous,
// averaged over steer x offset; one row per bit depth (ideal uniform
// codebooks with 2^bits states).
std::vector<LossRow> quantization_loss_study(const ArrayGeometry& geometry,
                                             const SourceModel& source,
                                             const std::vector<int>& bit_depths,
                                             const std::vector<Direction>& steer_set,
                                             const std::vector<double>& offset_set_deg,
                                             double element_exponent = 1.0);

} // namespace rissim
