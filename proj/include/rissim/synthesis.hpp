#pragma once

#include <complex>
#include <vector>

#include "rissim/codebook.hpp"
#include "rissim/geometry.hpp"
#include "rissim/source.hpp"

namespace rissim {

// Continuous per-element reflection phase, degrees in [0, 360), row-major.
struct PhaseMap {
    ArrayGeometry geometry;
    std::vector<double> phases_deg;
};

// Per-element chosen codebook state and the realized complex reflection
// coefficient (the state's magnitude and phase).
struct QuantizedMap {
    ArrayGeometry geometry;
    std::vector<int> state_indices;
    std::vector<std::complex<double>> realized;
};

// Continuous phase distribution that co-phases the reradiated field toward
// the steer direction:
//   spherical feed:  phi = k |r_e - r_f| - k (u0 . r_e) + offset
//   plane wave:      phi = -k (u_src . r_e) - k (u0 . r_e) + offset
// with u_src the arrival direction of the incident wave.
PhaseMap ideal_phase_profile(const ArrayGeometry& geometry, const SourceModel& source,
                             const Direction& steer, double offset_deg = 0.0);

// Assign each element the state with minimum circular phase distance;
// ties go to the lowest state index.
QuantizedMap quantize_phase_map(const PhaseMap& map, const std::vector<PhaseState>& states);

// Unit-magnitude reflection coefficients of a continuous phase map.
std::vector<std::complex<double>> continuous_reflection(const PhaseMap& map);

struct OffsetResult {
    double offset_deg = 0.0;
    double level_db = 0.0; // realized level at the steer direction, 20 log10 |E|
};

// Sweep the reference phase offset over the candidates and keep the one
// maximizing the quantized level at the steer direction. Levels within
// 1e-6 dB count as ties, broken by the smallest offset.
OffsetResult optimize_offset(const ArrayGeometry& geometry, const SourceModel& source,
                             const Direction& steer, const std::vector<PhaseState>& states,
                             const std::vector<double>& candidate_offsets_deg);

// All elements set to the same state.
QuantizedMap uniform_map(const ArrayGeometry& geometry, int state_index,
                         const std::vector<PhaseState>& states);

} // namespace rissim
