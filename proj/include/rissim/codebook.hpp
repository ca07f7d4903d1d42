#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rissim/errors.hpp"

namespace rissim {

// One reconfigurable reflection state of the unit cell.
struct PhaseState {
    double phase_deg = 0.0; // [0, 360)
    double magnitude = 1.0; // linear, (0, 1]
};

// Reflection states of the unit cell across frequency. State index n refers
// to the same hardware configuration at every frequency. Immutable after
// construction.
class PhaseCodebook {
public:
    PhaseCodebook(std::vector<double> frequencies,
                  std::vector<std::vector<PhaseState>> states_per_frequency);

    std::size_t n_entries() const { return frequencies_.size(); }
    std::size_t n_states() const { return states_[0].size(); }
    const std::vector<double>& frequencies() const { return frequencies_; }
    const std::vector<PhaseState>& entry(std::size_t i) const { return states_[i]; }

    // States at an arbitrary frequency inside the sampled span. Phases are
    // unwrapped per state before linear interpolation; magnitudes are
    // interpolated linearly.
    std::vector<PhaseState> states_at(double frequency) const;

private:
    std::vector<double> frequencies_;
    std::vector<std::vector<PhaseState>> states_;
};

// Circularly sorted consecutive phase gaps, including the wraparound gap.
// Gaps are >= 0 and sum to 360.
std::vector<double> adjacent_phase_differences(const std::vector<PhaseState>& states);

// Equivalent phase resolution in bits, 0.5 * log2(360^3 / sum(gap_i^3)).
// A state set collapsed onto a single phase is degenerate: the result is 0
// and *degenerate (when given) is set.
double equivalent_bits(const std::vector<PhaseState>& states, bool* degenerate = nullptr);

// Average reflection magnitude of the state set, dB.
double average_magnitude_db(const std::vector<PhaseState>& states);

// Contiguous frequency intervals where equivalent_bits exceeds the
// threshold; interval edges are interpolated linearly between samples.
std::vector<std::pair<double, double>> effective_bandwidth(const PhaseCodebook& codebook,
                                                           double threshold = 1.7);

// Parse a codebook CSV: header freq_hz,phase1_deg,...,phaseS_deg,mag1_db,...,magS_db,
// one row per frequency, magnitudes in dB. Phases are normalized into [0, 360).
PhaseCodebook load_codebook(const std::string& path);

// 2^bits equally spaced unit-magnitude states starting at 0 degrees.
std::vector<PhaseState> ideal_states(int bits);

// count equally spaced unit-magnitude states (continuous-phase stand-in for
// large counts).
std::vector<PhaseState> uniform_states(int count);

} // namespace rissim
