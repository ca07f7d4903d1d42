#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rissim/synthesis.hpp"

namespace rissim {

// Two-diode configuration of one cell.
struct DiodeStates {
    bool diode1_on = false;
    bool diode2_on = false;

    friend bool operator==(const DiodeStates&, const DiodeStates&) = default;
};

// Bijective table state index -> diode pair.
class StateMapping {
public:
    explicit StateMapping(std::vector<DiodeStates> table);

    // state 0 = (off,off), 1 = (off,on), 2 = (on,off), 3 = (on,on)
    static StateMapping standard();

    std::size_t size() const { return table_.size(); }
    const DiodeStates& at(int state_index) const;
    int state_for(const DiodeStates& diodes) const;
    const std::vector<DiodeStates>& table() const { return table_; }

private:
    std::vector<DiodeStates> table_;
};

// Per-cell, per-diode bias polarity. positive[cell][d] asserts the
// positive-voltage drive of diode d; false asserts the negative (reverse)
// drive. Exactly one rail per diode by construction.
struct BiasFrame {
    int n_cells = 0;
    std::vector<std::array<bool, 2>> positive;
};

// Daisy-chained shift registers driving the bias lines. Each diode owns a
// positive and a negative drive line; line order is cells row-major, then
// diode 1 before diode 2, then positive before negative.
struct ChainConfig {
    int register_width = 8;
};

// Diode on -> positive rail asserted, off -> negative rail (reverse bias).
BiasFrame apply_mapping(const QuantizedMap& map, const StateMapping& mapping);

// Frame -> bit vector in canonical line order (first line first), padded
// with trailing zeros to a register-width multiple.
std::vector<std::uint8_t> serialize_frame(const BiasFrame& frame, const ChainConfig& chain);

// Shift the vector through a modeled register chain (shift, then one
// latch) and report the per-line outputs: after the full shift, line 0 sits
// at the final register output.
std::vector<std::uint8_t> simulate_chain(const std::vector<std::uint8_t>& bits,
                                         const ChainConfig& chain);

// Recover a frame from latched line states, validating that exactly one
// rail is asserted per diode.
BiasFrame parse_lines(const std::vector<std::uint8_t>& lines, int n_cells);

// Invert the mapping on every cell of a frame.
std::vector<int> recover_state_indices(const BiasFrame& frame, const StateMapping& mapping);

// Lowercase hex, two chars per register byte, first-shifted byte first.
std::string bits_to_hex(const std::vector<std::uint8_t>& bits);
std::vector<std::uint8_t> hex_to_bits(const std::string& hex);

} // namespace rissim
